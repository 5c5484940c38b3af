//! Harmonic-oscillator basis projection with analytic ladder-operator matrix elements.

use nalgebra::DMatrix;
use nalgebra_sparse::{CooMatrix, CsrMatrix};
use num_complex::Complex64;

use crate::numeric::NumericOperator;
use crate::SpectraError;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Below this `m * omega` the oscillator length diverges and the basis is rejected.
pub const MIN_M_OMEGA: f64 = 1e-6;
pub const MIN_BASIS_SIZE: usize = 8;

/// `<n'|x|n>` and `<n'|p|n>` for `n' = n + 1`, with `x = l (a + a^dag)/sqrt 2`,
/// `p = i (a^dag - a)/(l sqrt 2)`, `l = 1/sqrt(m omega)`.
fn ladder(mw: f64, n: usize) -> (f64, Complex64) {
    let s = (n as f64 + 1.0).sqrt();
    (s / (2.0 * mw).sqrt(), Complex64::new(0.0, (mw / 2.0).sqrt() * s))
}

pub(crate) fn check(m: f64, omega: f64, size: usize) -> Result<f64, SpectraError> {
    let mw = m * omega;
    if !(mw >= MIN_M_OMEGA) {
        return Err(SpectraError::OmegaTooSmall(mw));
    }
    if size < MIN_BASIS_SIZE {
        return Err(SpectraError::BasisTooSmall(size));
    }
    Ok(mw)
}

/// Nonzero one-coordinate entries `(n', n, x_{n'n}, p_{n'n})`.
fn one_axis(mw: f64, size: usize) -> Vec<(usize, usize, f64, Complex64)> {
    let mut out = Vec::new();
    for n in 0..size - 1 {
        let (x, p) = ladder(mw, n);
        out.push((n + 1, n, x, p));
        out.push((n, n + 1, x, p.conj()));
    }
    out
}

/// Dense matrix on `size` oscillator states per spinor component, index `n * spin + s`.
pub(crate) fn assemble_1d(op: &NumericOperator, m: f64, omega: f64, size: usize) -> Result<DMatrix<Complex64>, SpectraError> {
    let mw = check(m, omega, size)?;
    let s = op.spin;
    let c = &op.momentum[0];
    let v0 = op.constant_part();
    let v1 = op.linear_part(0)?;
    let mut h = DMatrix::from_element(size * s, size * s, ZERO);
    for n in 0..size {
        for r in 0..s {
            for q in 0..s {
                h[(n * s + r, n * s + q)] += v0[r * s + q];
            }
        }
    }
    for (a, b, x, p) in one_axis(mw, size) {
        for r in 0..s {
            for q in 0..s {
                h[(a * s + r, b * s + q)] += c[r * s + q] * p + v1[r * s + q] * x;
            }
        }
    }
    Ok(h)
}

/// Sparse matrix on a `size x size` product basis, index `(a * size + b) * spin + s`.
pub(crate) fn assemble_2d(op: &NumericOperator, m: f64, omega: f64, size: usize) -> Result<CsrMatrix<Complex64>, SpectraError> {
    let mw = check(m, omega, size)?;
    let s = op.spin;
    let v0 = op.constant_part();
    let lin = [op.linear_part(0)?, op.linear_part(1)?];
    let dim = size * size * s;
    let mut coo = CooMatrix::new(dim, dim);
    let idx = |a: usize, b: usize, r: usize| (a * size + b) * s + r;
    for a in 0..size {
        for b in 0..size {
            for r in 0..s {
                for q in 0..s {
                    if v0[r * s + q] != ZERO {
                        coo.push(idx(a, b, r), idx(a, b, q), v0[r * s + q]);
                    }
                }
            }
        }
    }
    let axis = one_axis(mw, size);
    for (ax, (c, v)) in op.momentum.iter().zip(&lin).enumerate() {
        for &(n1, n0, x, p) in &axis {
            for other in 0..size {
                let (row, col) = if ax == 0 { ((n1, other), (n0, other)) } else { ((other, n1), (other, n0)) };
                for r in 0..s {
                    for q in 0..s {
                        let w = c[r * s + q] * p + v[r * s + q] * x;
                        if w != ZERO {
                            coo.push(idx(row.0, row.1, r), idx(col.0, col.1, q), w);
                        }
                    }
                }
            }
        }
    }
    Ok(CsrMatrix::from(&coo))
}

/// Normalized Hermite functions `phi_0 .. phi_{count-1}` at `xi = x / l`, times `l^{-1/2}`.
pub fn hermite_functions(count: usize, x: f64, l: f64) -> Vec<f64> {
    let xi = x / l;
    let mut out = Vec::with_capacity(count);
    let p0 = std::f64::consts::PI.powf(-0.25) * (-xi * xi / 2.0).exp() / l.sqrt();
    out.push(p0);
    if count > 1 {
        out.push(2f64.sqrt() * xi * p0);
    }
    for n in 1..count.saturating_sub(1) {
        let next = (2.0 / (n as f64 + 1.0)).sqrt() * xi * out[n] - (n as f64 / (n as f64 + 1.0)).sqrt() * out[n - 1];
        out.push(next);
    }
    out.truncate(count);
    out
}
