//! Eigensolvers, artifact classification and spectrum checks.

use nalgebra::{DMatrix, SymmetricEigen};
use nalgebra_sparse::CsrMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustfft::FftPlanner;
use serde::Serialize;

use dirosc_core::lagrangian::DiracOperator;
use dirosc_core::minkowski::Dim;

use crate::banded::BandMatrix;
use crate::basis::{self, hermite_functions};
use crate::grid::{self, SpectralGrid2D};
use crate::lanczos::{self, lanczos, norm};
use crate::numeric::NumericOperator;
use crate::{NumericParams, SpectraError, HERMITICITY_TOL, RESIDUAL_TOL};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
/// Banded matrices up to this size are diagonalized densely.
const DENSE_LIMIT: usize = 2048;
/// Shift for shift-invert; off zero so a symmetric spectrum never makes the shifted matrix singular.
const SHIFT: f64 = 1.0e-7;
/// Weight fraction above which an eigenvector is flagged as an artifact.
const ARTIFACT_WEIGHT: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Grid,
    Basis,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Grid => "grid",
            Method::Basis => "basis",
        })
    }
}

/// Why an eigenpair is not a physical level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Artifact {
    /// Lattice doubler: most weight in the upper half of the Brillouin zone.
    Doubler,
    /// Bound to the hard wall or the periodic seam.
    Boundary,
    /// Lives on the highest oscillator states kept.
    Truncation,
}

/// A Hermitian matrix in whichever storage suits its method.
#[derive(Debug, Clone)]
pub enum HermitianMatrix {
    Dense(DMatrix<Complex64>),
    Banded(BandMatrix),
    Sparse(CsrMatrix<Complex64>),
    Spectral(SpectralGrid2D),
}

impl HermitianMatrix {
    pub fn size(&self) -> usize {
        match self {
            HermitianMatrix::Dense(m) => m.nrows(),
            HermitianMatrix::Banded(b) => b.size(),
            HermitianMatrix::Sparse(s) => s.nrows(),
            HermitianMatrix::Spectral(g) => g.len(),
        }
    }

    pub fn apply(&self, x: &[Complex64], y: &mut [Complex64]) {
        match self {
            HermitianMatrix::Dense(m) => {
                for (i, yi) in y.iter_mut().enumerate() {
                    *yi = m.row(i).iter().zip(x).map(|(a, b)| a * b).sum();
                }
            }
            HermitianMatrix::Banded(b) => b.matvec(x, y),
            HermitianMatrix::Sparse(s) => {
                for (i, row) in s.row_iter().enumerate() {
                    y[i] = row.col_indices().iter().zip(row.values()).map(|(&j, v)| v * x[j]).sum();
                }
            }
            HermitianMatrix::Spectral(g) => g.apply(x, y),
        }
    }

    /// `max |H_ij - conj(H_ji)|`.
    pub fn hermiticity_residual(&self) -> f64 {
        match self {
            HermitianMatrix::Dense(m) => {
                let n = m.nrows();
                let mut r: f64 = 0.0;
                for i in 0..n {
                    for j in 0..n {
                        r = r.max((m[(i, j)] - m[(j, i)].conj()).norm());
                    }
                }
                r
            }
            HermitianMatrix::Banded(b) => b.hermiticity_residual(),
            HermitianMatrix::Sparse(s) => s
                .triplet_iter()
                .map(|(i, j, v)| {
                    let t = s.get_entry(j, i).map_or(ZERO, |e| e.into_value());
                    (v - t.conj()).norm()
                })
                .fold(0.0, f64::max),
            HermitianMatrix::Spectral(g) => g.hermiticity_residual(),
        }
    }

    fn residual(&self, value: f64, v: &[Complex64]) -> f64 {
        let mut hv = vec![ZERO; v.len()];
        self.apply(v, &mut hv);
        hv.iter().zip(v).map(|(a, b)| (a - b * value).norm_sqr()).sum::<f64>().sqrt() / norm(v)
    }

    fn rayleigh(&self, v: &[Complex64]) -> f64 {
        let mut hv = vec![ZERO; v.len()];
        self.apply(v, &mut hv);
        lanczos::dot(v, &hv).re / lanczos::dot(v, v).re
    }
}

/// How coordinates map onto matrix indices, for artifact classification.
#[derive(Debug, Clone)]
enum Layout {
    Grid1D { xs: Vec<f64>, half_width: f64, spin: usize },
    Grid2D { xs: Vec<f64>, half_width: f64, spin: usize },
    Basis1D { size: usize, spin: usize },
    Basis2D { size: usize, spin: usize },
}

/// An assembled Hamiltonian with its provenance.
#[derive(Debug, Clone)]
pub struct Discretization {
    pub matrix: HermitianMatrix,
    pub method: Method,
    pub dim: Dim,
    /// Grid points or oscillator states per coordinate.
    pub resolution: usize,
    pub hermiticity_residual: f64,
    pub m: f64,
    pub omega: f64,
    pub half_width: Option<f64>,
    layout: Layout,
}

fn reject_non_hermitian(r: f64) -> Result<f64, SpectraError> {
    if r < HERMITICITY_TOL {
        Ok(r)
    } else {
        Err(SpectraError::NotHermitian(r))
    }
}

/// Grid discretization: fourth-order differences between hard walls in one
/// dimension, a periodic Fourier derivative in two.
pub fn discretize_grid(h: &DiracOperator, p: &NumericParams) -> Result<Discretization, SpectraError> {
    p.validate()?;
    let op = NumericOperator::from_dirac(h, p.m, p.omega)?;
    let (matrix, layout) = match h.dim {
        Dim::D1 => {
            let (xs, step) = grid::wall_grid(p.half_width, p.grid_points);
            let a = grid::assemble_1d(&op, &xs, step);
            (HermitianMatrix::Banded(a), Layout::Grid1D { xs, half_width: p.half_width, spin: op.spin })
        }
        Dim::D2 => {
            let spin = op.spin;
            let g = SpectralGrid2D::new(op, p.half_width, p.grid_points);
            let xs = g.xs.clone();
            (HermitianMatrix::Spectral(g), Layout::Grid2D { xs, half_width: p.half_width, spin })
        }
        d => return Err(SpectraError::UnsupportedDim(d)),
    };
    let r = reject_non_hermitian(matrix.hermiticity_residual())?;
    Ok(Discretization {
        matrix,
        method: Method::Grid,
        dim: h.dim,
        resolution: p.grid_points,
        hermiticity_residual: r,
        m: p.m,
        omega: p.omega,
        half_width: Some(p.half_width),
        layout,
    })
}

/// Projection onto `basis_size` oscillator states per coordinate, length scale `1/sqrt(m omega)`.
pub fn oscillator_basis(h: &DiracOperator, p: &NumericParams) -> Result<Discretization, SpectraError> {
    let op = NumericOperator::from_dirac(h, p.m, p.omega)?;
    let size = p.basis_size;
    let (matrix, layout) = match h.dim {
        Dim::D1 => (
            HermitianMatrix::Dense(basis::assemble_1d(&op, p.m, p.omega, size)?),
            Layout::Basis1D { size, spin: op.spin },
        ),
        Dim::D2 => (
            HermitianMatrix::Sparse(basis::assemble_2d(&op, p.m, p.omega, size)?),
            Layout::Basis2D { size, spin: op.spin },
        ),
        d => return Err(SpectraError::UnsupportedDim(d)),
    };
    let r = reject_non_hermitian(matrix.hermiticity_residual())?;
    Ok(Discretization {
        matrix,
        method: Method::Basis,
        dim: h.dim,
        resolution: size,
        hermiticity_residual: r,
        m: p.m,
        omega: p.omega,
        half_width: None,
        layout,
    })
}

pub(crate) struct Pairs {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<Complex64>>,
    pub residuals: Vec<f64>,
}

fn dense_nearest(m: DMatrix<Complex64>, k: usize, sigma: f64) -> Pairs {
    let eig = SymmetricEigen::new(m);
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    let dist = |c: usize| (eig.eigenvalues[c] - sigma).abs();
    order.sort_by(|&a, &b| dist(a).total_cmp(&dist(b)));
    order.truncate(k);
    let values = order.iter().map(|&c| eig.eigenvalues[c]).collect();
    let vectors = order.iter().map(|&c| eig.eigenvectors.column(c).iter().copied().collect()).collect();
    Pairs { values, vectors, residuals: vec![] }
}

fn random_start(n: usize, seed: u64) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect()
}

fn shift_invert(h: &HermitianMatrix, a: &BandMatrix, k: usize, sigma: f64) -> Result<Pairs, SpectraError> {
    let n = a.size();
    let lu = a.shifted(sigma).lu()?;
    let start = random_start(n, 0);
    let mut steps = (3 * k).max(80).min(n);
    loop {
        let mut apply = |x: &[Complex64], y: &mut [Complex64]| {
            y.copy_from_slice(x);
            lu.solve(y);
        };
        let ritz = lanczos(&mut apply, &start, steps);
        let mut order: Vec<usize> = (0..ritz.values.len()).collect();
        order.sort_by(|&p, &q| ritz.values[q].abs().total_cmp(&ritz.values[p].abs()));
        order.truncate(k);
        let vectors: Vec<Vec<Complex64>> = order.iter().map(|&c| ritz.vectors[c].clone()).collect();
        let values: Vec<f64> = vectors.iter().map(|v| h.rayleigh(v)).collect();
        let residuals: Vec<f64> = values.iter().zip(&vectors).map(|(&e, v)| h.residual(e, v)).collect();
        if residuals.iter().all(|&r| r <= RESIDUAL_TOL) || steps == n {
            return Ok(Pairs { values, vectors, residuals });
        }
        steps = (2 * steps).min(n);
    }
}

pub(crate) fn nearest_zero(h: &HermitianMatrix, k: usize) -> Result<Pairs, SpectraError> {
    nearest(h, k, SHIFT)
}

/// The `k` eigenpairs closest to `sigma`.
fn nearest(h: &HermitianMatrix, k: usize, sigma: f64) -> Result<Pairs, SpectraError> {
    let n = h.size();
    if k == 0 || k > n {
        return Err(SpectraError::BadCount(k, n));
    }
    reject_non_hermitian(h.hermiticity_residual())?;
    let mut pairs = match h {
        HermitianMatrix::Dense(m) => dense_nearest(m.clone(), k, sigma),
        HermitianMatrix::Banded(b) if n <= DENSE_LIMIT => dense_nearest(b.to_dense(), k, sigma),
        HermitianMatrix::Banded(b) => shift_invert(h, b, k, sigma)?,
        _ => return Err(SpectraError::NeedsProbe),
    };
    if pairs.residuals.is_empty() {
        pairs.residuals = pairs.values.iter().zip(&pairs.vectors).map(|(&e, v)| h.residual(e, v)).collect();
    }
    Ok(pairs)
}

/// Ritz pairs from a Krylov space seeded by `probe`, keeping those with residual within tolerance.
pub(crate) fn probe_pairs(h: &HermitianMatrix, probe: &[Complex64], steps: usize) -> Result<Pairs, SpectraError> {
    reject_non_hermitian(h.hermiticity_residual())?;
    let mut apply = |x: &[Complex64], y: &mut [Complex64]| h.apply(x, y);
    let ritz = lanczos(&mut apply, probe, steps);
    let mut out = Pairs { values: vec![], vectors: vec![], residuals: vec![] };
    for (v, vec) in ritz.values.into_iter().zip(ritz.vectors) {
        let r = h.residual(v, &vec);
        if r <= RESIDUAL_TOL {
            out.values.push(v);
            out.vectors.push(vec);
            out.residuals.push(r);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Eigenpair {
    pub value: f64,
    pub residual: f64,
    pub artifact: Option<Artifact>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumResult {
    pub method: Method,
    pub dim: String,
    pub resolution: usize,
    pub half_width: Option<f64>,
    pub hermiticity_residual: f64,
    /// Sorted ascending by value.
    pub pairs: Vec<Eigenpair>,
}

impl SpectrumResult {
    pub fn eigenvalues(&self) -> Vec<f64> {
        self.pairs.iter().map(|p| p.value).collect()
    }

    /// Eigenvalues not flagged as artifacts.
    pub fn physical(&self) -> Vec<f64> {
        self.pairs.iter().filter(|p| p.artifact.is_none()).map(|p| p.value).collect()
    }

    /// The lowest `count` positive physical eigenvalues.
    pub fn lowest_positive(&self, count: usize) -> Vec<f64> {
        self.physical().into_iter().filter(|&v| v > 0.0).take(count).collect()
    }

    /// Physical eigenvalues ordered by distance from zero.
    pub fn nearest_zero(&self, count: usize) -> Vec<f64> {
        let mut v = self.physical();
        v.sort_by(|a, b| a.abs().total_cmp(&b.abs()));
        v.truncate(count);
        v
    }

    pub fn max_residual(&self) -> f64 {
        self.pairs.iter().map(|p| p.residual).fold(0.0, f64::max)
    }

    pub fn artifact_count(&self, kind: Artifact) -> usize {
        self.pairs.iter().filter(|p| p.artifact == Some(kind)).count()
    }
}

fn build_result(d: &Discretization, pairs: Pairs, classify: bool) -> SpectrumResult {
    let mut out: Vec<Eigenpair> = pairs
        .values
        .iter()
        .zip(&pairs.vectors)
        .zip(&pairs.residuals)
        .map(|((&value, v), &residual)| Eigenpair {
            value,
            residual,
            artifact: if classify { classify_vector(&d.layout, v) } else { None },
        })
        .collect();
    out.sort_by(|a, b| a.value.total_cmp(&b.value));
    SpectrumResult {
        method: d.method,
        dim: d.dim.to_string(),
        resolution: d.resolution,
        half_width: d.half_width,
        hermiticity_residual: d.hermiticity_residual,
        pairs: out,
    }
}

/// The `k` eigenvalues nearest zero of a Hermitian matrix, with residuals.
/// Matrix-free storage needs a probe; see [`solve`].
pub fn eigen_spectrum(h: &HermitianMatrix, k: usize) -> Result<SpectrumResult, SpectraError> {
    let pairs = nearest_zero(h, k)?;
    let r = h.hermiticity_residual();
    let mut pairs: Vec<Eigenpair> = pairs
        .values
        .iter()
        .zip(&pairs.residuals)
        .map(|(&value, &residual)| Eigenpair { value, residual, artifact: None })
        .collect();
    pairs.sort_by(|a, b| a.value.total_cmp(&b.value));
    let method = match h {
        HermitianMatrix::Banded(_) | HermitianMatrix::Spectral(_) => Method::Grid,
        _ => Method::Basis,
    };
    Ok(SpectrumResult { method, dim: String::new(), resolution: h.size(), half_width: None, hermiticity_residual: r, pairs })
}

fn weight_fraction(v: &[Complex64], select: impl Fn(usize) -> bool) -> f64 {
    let total: f64 = v.iter().map(|c| c.norm_sqr()).sum();
    let part: f64 = v.iter().enumerate().filter(|(i, _)| select(*i)).map(|(_, c)| c.norm_sqr()).sum();
    part / total
}

fn high_frequency_weight(v: &[Complex64], n: usize, spin: usize) -> f64 {
    let fft = FftPlanner::new().plan_fft_forward(n);
    let (mut high, mut total) = (0.0, 0.0);
    for s in 0..spin {
        let mut line: Vec<Complex64> = (0..n).map(|j| v[j * spin + s]).collect();
        fft.process(&mut line);
        for (f, c) in line.iter().enumerate() {
            let freq = f.min(n - f);
            total += c.norm_sqr();
            if 2 * freq > n / 2 {
                high += c.norm_sqr();
            }
        }
    }
    high / total
}

fn classify_vector(layout: &Layout, v: &[Complex64]) -> Option<Artifact> {
    match layout {
        Layout::Grid1D { xs, half_width, spin } => {
            let n = xs.len();
            if high_frequency_weight(v, n, *spin) > ARTIFACT_WEIGHT {
                return Some(Artifact::Doubler);
            }
            let edge = weight_fraction(v, |i| xs[i / spin].abs() > 0.9 * half_width);
            (edge > ARTIFACT_WEIGHT).then_some(Artifact::Boundary)
        }
        Layout::Grid2D { xs, half_width, spin: _ } => {
            let n = xs.len();
            let edge = weight_fraction(v, |i| {
                let p = i % (n * n);
                xs[p % n].abs() > 0.9 * half_width || xs[p / n].abs() > 0.9 * half_width
            });
            (edge > ARTIFACT_WEIGHT).then_some(Artifact::Boundary)
        }
        Layout::Basis1D { size, spin } => {
            let top = size - size / 10;
            (weight_fraction(v, |i| i / spin >= top) > ARTIFACT_WEIGHT).then_some(Artifact::Truncation)
        }
        Layout::Basis2D { size, spin } => {
            let top = size - size / 10;
            let w = weight_fraction(v, |i| {
                let ab = i / spin;
                ab / size >= top || ab % size >= top
            });
            (w > ARTIFACT_WEIGHT).then_some(Artifact::Truncation)
        }
    }
}

/// Seeded random combination of `phi_a(x) phi_b(y)` for `a, b < 6` in every spinor
/// component, laid out for the given two-dimensional discretization.
pub fn oscillator_probe(d: &Discretization, seed: u64) -> Vec<Complex64> {
    const LOW: usize = 6;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let spin = match &d.layout {
        Layout::Grid2D { spin, .. } | Layout::Basis2D { spin, .. } => *spin,
        Layout::Grid1D { spin, .. } | Layout::Basis1D { spin, .. } => *spin,
    };
    let coeffs: Vec<Complex64> =
        (0..LOW * LOW * spin).map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
    let c = |a: usize, b: usize, s: usize| coeffs[(a * LOW + b) * spin + s];
    let mut v = match &d.layout {
        Layout::Basis2D { size, spin } => {
            let mut v = vec![ZERO; size * size * spin];
            for a in 0..LOW.min(*size) {
                for b in 0..LOW.min(*size) {
                    for s in 0..*spin {
                        v[(a * size + b) * spin + s] = c(a, b, s);
                    }
                }
            }
            v
        }
        Layout::Grid2D { xs, spin, .. } => {
            let n = xs.len();
            let l = 1.0 / (d.m * d.omega).sqrt();
            let phi: Vec<Vec<f64>> = xs.iter().map(|&x| hermite_functions(LOW, x, l)).collect();
            let mut v = vec![ZERO; spin * n * n];
            for s in 0..*spin {
                for iy in 0..n {
                    for ix in 0..n {
                        let mut acc = ZERO;
                        for a in 0..LOW {
                            for b in 0..LOW {
                                acc += c(a, b, s) * phi[ix][a] * phi[iy][b];
                            }
                        }
                        v[(s * n + iy) * n + ix] = acc;
                    }
                }
            }
            v
        }
        _ => random_start(d.matrix.size(), seed),
    };
    lanczos::normalize(&mut v);
    v
}

/// Solves a discretization: the nearest-zero eigenpairs in one dimension, the
/// converged Ritz pairs of the oscillator probe in two. Artifacts are flagged.
pub fn solve(d: &Discretization, p: &NumericParams, seed: u64) -> Result<SpectrumResult, SpectraError> {
    let pairs = match d.dim {
        Dim::D1 => nearest_zero(&d.matrix, (4 * p.k + 12).min(d.matrix.size()))?,
        _ => probe_pairs(&d.matrix, &oscillator_probe(d, seed), p.krylov_steps)?,
    };
    Ok(build_result(d, pairs, true))
}

/// Collapses values equal to relative `tol` into one level.
pub fn distinct_levels(values: &[f64], tol: f64) -> Vec<f64> {
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mut out: Vec<f64> = Vec::new();
    for v in sorted {
        match out.last() {
            Some(&l) if (v - l).abs() <= tol * l.abs().max(1.0) => {}
            _ => out.push(v),
        }
    }
    out
}

/// Largest mismatch between the spectrum and its negation, over the window where
/// both branches were computed.
pub fn symmetry_defect(values: &[f64]) -> f64 {
    let pos: Vec<f64> = values.iter().copied().filter(|&v| v > 0.0).collect();
    let neg: Vec<f64> = values.iter().copied().filter(|&v| v < 0.0).map(|v| -v).collect();
    let zeros = values.iter().filter(|&&v| v == 0.0).count();
    if pos.is_empty() || neg.is_empty() {
        return if pos.len() + neg.len() == 0 && zeros > 0 { 0.0 } else { f64::INFINITY };
    }
    // degenerate copies straddling the edge of the window must not split
    let cut = pos.iter().copied().fold(0.0, f64::max).min(neg.iter().copied().fold(0.0, f64::max)) * (1.0 - 1e-9);
    let nearest = |x: f64, set: &[f64]| set.iter().map(|y| (x - y).abs()).fold(f64::INFINITY, f64::min);
    let a = pos.iter().filter(|&&x| x < cut).map(|&x| nearest(x, &neg)).fold(0.0, f64::max);
    let b = neg.iter().filter(|&&x| x < cut).map(|&x| nearest(x, &pos)).fold(0.0, f64::max);
    let counts_match = pos.iter().filter(|&&x| x < cut).count() == neg.iter().filter(|&&x| x < cut).count();
    if counts_match {
        a.max(b)
    } else {
        f64::INFINITY
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NonrelReport {
    pub m: f64,
    pub omega: f64,
    pub levels: Vec<f64>,
    /// `(E_{n+1} - E_n) / omega` for the lowest five gaps.
    pub spacing_ratios: Vec<f64>,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// In the regime `omega/m <= 1e-2`, checks that the grid spectrum approaches the
/// nonrelativistic ladder `E_n - m = n omega`.
pub fn nonrel_limit_check(p: &NumericParams) -> Result<NonrelReport, SpectraError> {
    const TOL: f64 = 5e-3;
    let ratio = p.omega / p.m;
    if !(ratio > 0.0 && ratio <= 1e-2) {
        return Err(SpectraError::Regime(ratio));
    }
    let h = crate::numeric::oscillator_operator(Dim::D1, crate::numeric::Coupling::Oscillator)?;
    // shift-invert just below the ground level: levels near +m are dense relative to m
    let d = discretize_grid(&h, p)?;
    let spec = build_result(&d, nearest(&d.matrix, 24.min(d.matrix.size()), p.m - 0.5 * p.omega)?, true);
    let levels = spec.lowest_positive(6);
    if levels.len() < 6 {
        return Err(SpectraError::TooFewLevels { found: levels.len(), wanted: 6 });
    }
    let spacing_ratios: Vec<f64> = levels.windows(2).map(|w| (w[1] - w[0]) / p.omega).collect();
    let max_deviation = spacing_ratios.iter().map(|r| (r - 1.0).abs()).fold(0.0, f64::max);
    Ok(NonrelReport { m: p.m, omega: p.omega, levels, spacing_ratios, max_deviation, tolerance: TOL, pass: max_deviation <= TOL })
}
