//! Numerical spectra of the Dirac oscillator in one and two spatial dimensions,
//! computed independently on a real-space grid and in a harmonic-oscillator
//! basis, with cross-validation and convergence reporting.

pub mod banded;
pub mod basis;
pub mod grid;
mod lanczos;
pub mod numeric;
pub mod report;
pub mod spectrum;

pub use numeric::{oscillator_operator, Coupling, NumericOperator};
pub use report::{analyze, write_csv, Analysis, ConvergenceReport, Methods};
pub use spectrum::{
    discretize_grid, distinct_levels, eigen_spectrum, nonrel_limit_check, oscillator_basis, solve, symmetry_defect,
    Artifact, Discretization, Eigenpair, HermitianMatrix, Method, NonrelReport, SpectrumResult,
};

use dirosc_core::clifford::CliffordError;
use dirosc_core::lagrangian::LagrangianError;
use dirosc_core::minkowski::Dim;
use thiserror::Error;

/// Hermiticity residual above which an assembled matrix is rejected.
pub const HERMITICITY_TOL: f64 = 1e-12;
/// Required `|H v - E v|` for a reported eigenpair.
pub const RESIDUAL_TOL: f64 = 1e-9;
pub const MIN_GRID_POINTS: usize = 64;

#[derive(Debug, Error)]
pub enum SpectraError {
    #[error("grid needs at least {MIN_GRID_POINTS} points, got {0}")]
    GridTooSmall(usize),
    #[error("half-width must be positive, got {0}")]
    NonPositiveLength(f64),
    #[error("basis needs at least {min} states per coordinate, got {0}", min = basis::MIN_BASIS_SIZE)]
    BasisTooSmall(usize),
    #[error("m*omega = {0} is below the oscillator-basis threshold {min}", min = basis::MIN_M_OMEGA)]
    OmegaTooSmall(f64),
    #[error("mass must be nonnegative and finite, got {0}")]
    BadMass(f64),
    #[error("omega must be nonnegative and finite, got {0}")]
    BadOmega(f64),
    #[error("requested eigenvalue count {0} is invalid for a matrix of size {1}")]
    BadCount(usize, usize),
    #[error("matrix is not Hermitian: residual {0:e}")]
    NotHermitian(f64),
    #[error("matrix is singular at the shift")]
    Singular,
    #[error("unbound symbol `{0}` in the operator")]
    UnboundSymbol(String),
    #[error("operator depends on time")]
    TimeDependent,
    #[error("momentum coefficients depend on coordinates")]
    CoordinateDependentMomentum,
    #[error("potential is not linear in the coordinates")]
    NonLinearPotential,
    #[error("no numerics for dimension {0}")]
    UnsupportedDim(Dim),
    #[error("matrix-free operators need a probe vector")]
    NeedsProbe,
    #[error("omega/m = {0} is outside the nonrelativistic regime (<= 1e-2)")]
    Regime(f64),
    #[error("only {found} converged levels, {wanted} needed")]
    TooFewLevels { found: usize, wanted: usize },
    #[error(transparent)]
    Lagrangian(#[from] LagrangianError),
    #[error(transparent)]
    Clifford(#[from] CliffordError),
    #[error("csv export: {0}")]
    Csv(String),
}

/// Physical and numerical parameters of a run, natural units.
#[derive(Debug, Clone, PartialEq)]
pub struct NumericParams {
    pub m: f64,
    pub omega: f64,
    /// Half-width L of the box `[-L, L]^d`.
    pub half_width: f64,
    /// Grid points per coordinate.
    pub grid_points: usize,
    /// Oscillator states per coordinate.
    pub basis_size: usize,
    /// Number of eigenvalues requested.
    pub k: usize,
    /// Lanczos steps for the matrix-free two-dimensional solvers.
    pub krylov_steps: usize,
}

/// `10 max(1/sqrt(m omega), 1/m)`, or `40/m` without an oscillator.
pub fn default_half_width(m: f64, omega: f64) -> f64 {
    if m * omega > 0.0 {
        10.0 * (1.0 / (m * omega).sqrt()).max(1.0 / m)
    } else {
        40.0 / m
    }
}

impl NumericParams {
    pub fn new(dim: Dim, m: f64, omega: f64) -> Self {
        let (grid_points, basis_size) = match dim {
            Dim::D1 => (2048, 200),
            _ => (128, 40),
        };
        NumericParams {
            m,
            omega,
            half_width: default_half_width(m, omega),
            grid_points,
            basis_size,
            k: 10,
            krylov_steps: 200,
        }
    }

    pub fn validate(&self) -> Result<(), SpectraError> {
        if !(self.m.is_finite() && self.m >= 0.0) {
            return Err(SpectraError::BadMass(self.m));
        }
        if !(self.omega.is_finite() && self.omega >= 0.0) {
            return Err(SpectraError::BadOmega(self.omega));
        }
        if !(self.half_width.is_finite() && self.half_width > 0.0) {
            return Err(SpectraError::NonPositiveLength(self.half_width));
        }
        if self.grid_points < MIN_GRID_POINTS {
            return Err(SpectraError::GridTooSmall(self.grid_points));
        }
        if self.k == 0 || self.k > self.grid_points {
            return Err(SpectraError::BadCount(self.k, self.grid_points));
        }
        Ok(())
    }
}
