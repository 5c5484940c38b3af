//! Real-space discretizations: fourth-order finite differences with hard walls
//! in one dimension, a periodic Fourier derivative in two.

use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::banded::BandMatrix;
use crate::numeric::NumericOperator;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Fourth-order central-difference weights for offsets 1 and 2 (times 1/h).
const FD4: [(usize, f64); 2] = [(1, 8.0 / 12.0), (2, -1.0 / 12.0)];

/// Interior points of `[-L, L]` with the walls at both ends excluded.
pub fn wall_grid(l: f64, n: usize) -> (Vec<f64>, f64) {
    let h = 2.0 * l / (n as f64 + 1.0);
    ((0..n).map(|j| -l + h * (j as f64 + 1.0)).collect(), h)
}

/// Periodic points `-L + h j`, `h = 2L/N`.
pub fn periodic_grid(l: f64, n: usize) -> (Vec<f64>, f64) {
    let h = 2.0 * l / n as f64;
    ((0..n).map(|j| -l + h * j as f64).collect(), h)
}

/// One spatial dimension, spinor components interleaved (`2 j + s`).
pub(crate) fn assemble_1d(op: &NumericOperator, xs: &[f64], h: f64) -> BandMatrix {
    let s = op.spin;
    let n = xs.len();
    let mut a = BandMatrix::zeros(n * s, 2 * s + s - 1);
    let c = &op.momentum[0];
    for (j, &x) in xs.iter().enumerate() {
        let v = op.potential_at(&[x, 0.0, 0.0]);
        for r in 0..s {
            for q in 0..s {
                if v[r * s + q] != ZERO {
                    a.add(j * s + r, j * s + q, v[r * s + q]);
                }
            }
        }
        // p = -i D with D antisymmetric
        for &(off, w) in &FD4 {
            let p_fwd = Complex64::new(0.0, -w / h);
            for (k, p) in [(j + off, p_fwd), (j.wrapping_sub(off), -p_fwd)] {
                if k >= n {
                    continue;
                }
                for r in 0..s {
                    for q in 0..s {
                        if c[r * s + q] != ZERO {
                            a.add(j * s + r, k * s + q, c[r * s + q] * p);
                        }
                    }
                }
            }
        }
    }
    a
}

/// The dense periodic Fourier derivative `D` (Nyquist mode removed) on `n` points of period `2L`.
pub fn fourier_derivative_matrix(l: f64, n: usize) -> Vec<Vec<f64>> {
    (0..n)
        .map(|j| {
            (0..n)
                .map(|k| {
                    if j == k {
                        return 0.0;
                    }
                    let d = j as f64 - k as f64;
                    let sign = if (j + n - k) % 2 == 0 { 1.0 } else { -1.0 };
                    0.5 * (PI / l) * sign / (PI * d / n as f64).tan()
                })
                .collect()
        })
        .collect()
}

/// Matrix-free two-dimensional spectral discretization. Storage index is
/// `(s * N + iy) * N + ix`.
#[derive(Clone)]
pub struct SpectralGrid2D {
    pub op: NumericOperator,
    pub n: usize,
    pub half_width: f64,
    pub xs: Vec<f64>,
    /// Wavenumbers times the FFT normalization, Nyquist set to zero.
    k: Vec<f64>,
    potential: Vec<Vec<Complex64>>,
    fwd: Arc<dyn Fft<f64>>,
    inv: Arc<dyn Fft<f64>>,
}

impl std::fmt::Debug for SpectralGrid2D {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SpectralGrid2D(n = {}, L = {})", self.n, self.half_width)
    }
}

impl SpectralGrid2D {
    pub(crate) fn new(op: NumericOperator, l: f64, n: usize) -> Self {
        let (xs, _) = periodic_grid(l, n);
        let k = (0..n)
            .map(|j| {
                let f = if j < n / 2 {
                    j as f64
                } else if j == n / 2 {
                    0.0
                } else {
                    j as f64 - n as f64
                };
                f * PI / l / n as f64
            })
            .collect();
        let potential =
            (0..n * n).map(|p| op.potential_at(&[xs[p % n], xs[p / n], 0.0])).collect();
        let mut planner = FftPlanner::new();
        let fwd = planner.plan_fft_forward(n);
        let inv = planner.plan_fft_inverse(n);
        SpectralGrid2D { op, n, half_width: l, xs, k, potential, fwd, inv }
    }

    pub fn len(&self) -> usize {
        self.op.spin * self.n * self.n
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `p_axis` applied to one scalar field of `n * n` values.
    fn momentum(&self, field: &[Complex64], axis: usize, out: &mut [Complex64]) {
        let n = self.n;
        let mut line = vec![ZERO; n];
        for o in 0..n {
            for (t, l) in line.iter_mut().enumerate() {
                *l = field[if axis == 0 { o * n + t } else { t * n + o }];
            }
            self.fwd.process(&mut line);
            line.iter_mut().zip(&self.k).for_each(|(v, k)| *v *= k);
            self.inv.process(&mut line);
            for (t, l) in line.iter().enumerate() {
                out[if axis == 0 { o * n + t } else { t * n + o }] = *l;
            }
        }
    }

    pub fn apply(&self, x: &[Complex64], y: &mut [Complex64]) {
        let (s, nn) = (self.op.spin, self.n * self.n);
        y.iter_mut().for_each(|v| *v = ZERO);
        let mut px = vec![ZERO; nn];
        for axis in 0..2 {
            let c = &self.op.momentum[axis];
            for q in 0..s {
                if (0..s).all(|r| c[r * s + q] == ZERO) {
                    continue;
                }
                self.momentum(&x[q * nn..(q + 1) * nn], axis, &mut px);
                for r in 0..s {
                    let w = c[r * s + q];
                    if w != ZERO {
                        y[r * nn..(r + 1) * nn].iter_mut().zip(&px).for_each(|(a, b)| *a += w * b);
                    }
                }
            }
        }
        for (p, v) in self.potential.iter().enumerate() {
            for r in 0..s {
                for q in 0..s {
                    y[r * nn + p] += v[r * s + q] * x[q * nn + p];
                }
            }
        }
    }

    /// Exact `max |H - H^dag|` over all entries of the implied dense matrix.
    pub fn hermiticity_residual(&self) -> f64 {
        let (s, n) = (self.op.spin, self.n);
        let d = fourier_derivative_matrix(self.half_width, n);
        let mut r: f64 = 0.0;
        // off-diagonal grid entries come from one derivative at a time
        for c in &self.op.momentum {
            for a in 0..n {
                for b in 0..n {
                    if a == b {
                        continue;
                    }
                    let (pab, pba) = (Complex64::new(0.0, -d[a][b]), Complex64::new(0.0, -d[b][a]));
                    for i in 0..s {
                        for j in 0..s {
                            r = r.max((c[i * s + j] * pab - (c[j * s + i] * pba).conj()).norm());
                        }
                    }
                }
            }
        }
        for v in &self.potential {
            for i in 0..s {
                for j in 0..s {
                    r = r.max((v[i * s + j] - v[j * s + i].conj()).norm());
                }
            }
        }
        r
    }
}
