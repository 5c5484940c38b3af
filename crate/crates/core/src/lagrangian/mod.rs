//! Lagrangian densities for the Dirac oscillator coupled to electromagnetism:
//! the sigma.F contraction, Hamiltonian extraction, and local U(1) and chiral
//! phase rotations.

mod build;
mod density;
mod hamiltonian;
mod symmetry;

pub use build::{
    build_do_lagrangian, free_dirac, oscillator_hamiltonian_parts, oscillator_kernel, qed_interaction,
    qed_oscillator_kernel, BuildOptions, OscillatorForm,
};
pub use density::{Action, ActionKind, Chirality, LagrangianDensity, Phase, TermKey};
pub use hamiltonian::{are_adjoint, euler_lagrange, hamiltonian_extract, DiracOperator, FieldEquation, Varied};
pub use symmetry::{chiral_decompose, chiral_transform, rotate, u1_transform, ChiralOutcome, GaugeShift, PhaseRotation, Theta};

use thiserror::Error;

use crate::clifford::{CliffordError, GammaRep, SpinorMatrix};
use crate::gaugefields::{FieldTensor, TensorConvention};
use crate::minkowski::Dim;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LagrangianError {
    #[error("unsupported dimension {0}")]
    UnsupportedDim(Dim),
    #[error("representation and tensor dimensions differ: {0} vs {1}")]
    DimensionMismatch(Dim, Dim),
    #[error("representation does not match the density")]
    RepMismatch,
    #[error(transparent)]
    Clifford(#[from] CliffordError),
    #[error("time-derivative coefficient must be i*I, found {0}")]
    NotFirstOrderInTime(String),
    #[error("density carries phase factors")]
    PhaseDressed,
    #[error("density carries chirality tags")]
    ChiralityTagged,
    #[error("density is not chirally decomposed")]
    NotDecomposed,
    #[error("unknown phase symbol `{0}`")]
    UnknownPhase(String),
}

/// `coeff * sum_{mu nu} sigma^{mu nu} F_{mu nu}`, with F read in the rest-frame
/// convention (`F_{0i} = c x_i` for the covariant tensor).
pub fn interaction_contraction(
    rep: &GammaRep,
    f: &FieldTensor,
    coeff: &crate::exactpoly::PolyExpr,
) -> Result<SpinorMatrix, LagrangianError> {
    if rep.dim() != f.dim() {
        return Err(LagrangianError::DimensionMismatch(rep.dim(), f.dim()));
    }
    let f = f.to_convention(TensorConvention::RestFrame);
    let n = rep.dim().spacetime();
    let mut acc = rep.zero();
    for mu in 0..n {
        for nu in 0..n {
            if !f.get(mu, nu).is_zero() {
                acc = &acc + &rep.sigma(mu, nu)?.scale(f.get(mu, nu));
            }
        }
    }
    Ok(acc.scale(coeff))
}
