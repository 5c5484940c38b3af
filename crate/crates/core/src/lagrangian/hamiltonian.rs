use std::fmt;

use crate::clifford::SpinorMatrix;
use crate::exactpoly::Coord;
use crate::minkowski::Dim;
use crate::symbols::{self, i, var};

use super::density::{Action, Chirality, LagrangianDensity};
use super::LagrangianError;

/// `i d_t - H` with `H = sum_j C_j p_j + V(x)` and `p_j = -i d_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiracOperator {
    pub dim: Dim,
    /// Coefficient of `d_t` in the Lagrangian; `i I` for every accepted input.
    pub time: SpinorMatrix,
    /// `C_j`, the coefficients of `p_j` in H.
    pub momentum: Vec<SpinorMatrix>,
    /// `V`, the multiplicative part of H.
    pub potential: SpinorMatrix,
}

impl DiracOperator {
    pub fn spinor_size(&self) -> usize {
        self.time.size()
    }

    /// H is formally Hermitian when every `C_j` and `V` is (p_j Hermitian, symbols real).
    pub fn is_formally_hermitian(&self) -> bool {
        self.momentum.iter().all(SpinorMatrix::is_hermitian) && self.potential.is_hermitian()
    }
}

impl fmt::Display for DiracOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, c) in self.momentum.iter().enumerate() {
            write!(f, "{c} p_{} + ", j + 1)?;
        }
        write!(f, "{}", self.potential)
    }
}

/// Which field was varied to obtain an equation of motion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Varied {
    Psi,
    PsiDagger,
}

/// Varying psi^dag: `i d_t psi = sum_j D_j d_j psi + U psi`.
/// Varying psi: `i d_t psi^dag = sum_j (d_j psi^dag) D_j + psi^dag U`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldEquation {
    pub varied: Varied,
    pub derivative: Vec<SpinorMatrix>,
    pub potential: SpinorMatrix,
}

struct Pieces {
    time: SpinorMatrix,
    spatial: Vec<SpinorMatrix>,
    potential: SpinorMatrix,
}

fn collect(l: &LagrangianDensity) -> Result<Pieces, LagrangianError> {
    let n = l.spinor_size();
    let zero = SpinorMatrix::zero(n, symbols::universe());
    let mut time = zero.clone();
    let mut spatial = vec![zero.clone(); l.dim().spatial()];
    let mut potential = zero;
    for (k, m) in l.bilinears() {
        if !k.phase.is_identity() {
            return Err(LagrangianError::PhaseDressed);
        }
        if k.left != Chirality::Full || k.right != Chirality::Full {
            return Err(LagrangianError::ChiralityTagged);
        }
        match k.action {
            Action::Derivative(0) => time = &time + m,
            Action::Derivative(j) => spatial[j - 1] = &spatial[j - 1] + m,
            Action::Plain => potential = &potential + m,
            Action::GaugeField(mu) => {
                potential = &potential + &m.scale(&var(&symbols::gauge_field_name(mu)))
            }
        }
    }
    let expected = SpinorMatrix::identity(n, symbols::universe()).scale(&i());
    if time != expected {
        return Err(LagrangianError::NotFirstOrderInTime(time.to_string()));
    }
    Ok(Pieces { time, spatial, potential })
}

/// Reads off H from `psi^dag (i d_t + K_j d_j + W) psi`: `C_j = -i K_j`, `V = -W`.
pub fn hamiltonian_extract(l: &LagrangianDensity) -> Result<DiracOperator, LagrangianError> {
    let p = collect(l)?;
    let minus_i = -i();
    Ok(DiracOperator {
        dim: l.dim(),
        time: p.time,
        momentum: p.spatial.iter().map(|k| k.scale(&minus_i)).collect(),
        potential: -&p.potential,
    })
}

/// Both Euler-Lagrange equations, (vary psi^dag, vary psi).
pub fn euler_lagrange(l: &LagrangianDensity) -> Result<(FieldEquation, FieldEquation), LagrangianError> {
    let p = collect(l)?;
    let column = FieldEquation {
        varied: Varied::PsiDagger,
        derivative: p.spatial.iter().map(|k| -k).collect(),
        potential: -&p.potential,
    };
    // d_j (psi^dag K_j) = (d_j psi^dag) K_j + psi^dag (d_j K_j)
    let mut row_pot = p.potential.clone();
    for (j, k) in p.spatial.iter().enumerate() {
        let c = Coord::from_index(j + 1).expect("spatial index");
        row_pot = &row_pot - &k.map(|e| e.d(c));
    }
    let row = FieldEquation {
        varied: Varied::Psi,
        derivative: p.spatial.iter().map(|k| -k).collect(),
        potential: row_pot,
    };
    Ok((column, row))
}

/// The psi equation is the adjoint of the psi^dag equation:
/// `D'_j = -D_j^dag` and `U' = -U^dag`.
pub fn are_adjoint(column: &FieldEquation, row: &FieldEquation) -> bool {
    column.varied == Varied::PsiDagger
        && row.varied == Varied::Psi
        && column.derivative.len() == row.derivative.len()
        && column.derivative.iter().zip(&row.derivative).all(|(d, r)| *r == -d.dagger())
        && row.potential == -column.potential.dagger()
}
