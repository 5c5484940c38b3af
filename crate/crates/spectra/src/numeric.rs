//! Floating-point evaluation of an extracted Dirac operator.

use dirosc_core::clifford::{make_rep, SpinorMatrix};
use dirosc_core::exactpoly::{Coord, PolyExpr, SymbolKind};
use dirosc_core::lagrangian::{build_do_lagrangian, hamiltonian_extract, BuildOptions, DiracOperator, OscillatorForm};
use dirosc_core::minkowski::Dim;
use dirosc_core::symbols::{i, var};
use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::SpectraError;

/// One monomial of a potential entry: `coeff * x^a y^b z^c`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoordTerm {
    pub coeff: Complex64,
    pub powers: [u32; 3],
}

/// `H = sum_j C_j p_j + V(x)` with every constant bound to a number.
#[derive(Debug, Clone, PartialEq)]
pub struct NumericOperator {
    pub spatial: usize,
    pub spin: usize,
    /// Row-major `spin x spin` coefficient of `p_j`.
    pub momentum: Vec<Vec<Complex64>>,
    /// Row-major `spin x spin` polynomial entries of V.
    pub potential: Vec<Vec<CoordTerm>>,
}

fn eval_constant_part(p: &PolyExpr, m: f64, omega: f64) -> Result<Vec<CoordTerm>, SpectraError> {
    let u = p.universe().clone();
    let mut out: Vec<CoordTerm> = Vec::new();
    for (mono, c) in p.terms() {
        let re = c.re.to_f64().unwrap_or(f64::NAN);
        let im = c.im.to_f64().unwrap_or(f64::NAN);
        let mut coeff = Complex64::new(re, im);
        let mut powers = [0u32; 3];
        for s in u.symbols() {
            let e = mono.exponent(s);
            if e == 0 {
                continue;
            }
            match (u.kind(s), u.name(s)) {
                (SymbolKind::Coordinate(Coord::T), _) => return Err(SpectraError::TimeDependent),
                (SymbolKind::Coordinate(c), _) => powers[c.index() - 1] += e,
                (_, "m") => coeff *= m.powi(e as i32),
                (_, "omega") => coeff *= omega.powi(e as i32),
                (_, name) => return Err(SpectraError::UnboundSymbol(name.to_string())),
            }
        }
        match out.iter_mut().find(|t| t.powers == powers) {
            Some(t) => t.coeff += coeff,
            None => out.push(CoordTerm { coeff, powers }),
        }
    }
    Ok(out)
}

fn numeric_matrix(s: &SpinorMatrix, m: f64, omega: f64) -> Result<Vec<Complex64>, SpectraError> {
    s.entries()
        .iter()
        .map(|e| {
            let terms = eval_constant_part(e, m, omega)?;
            if terms.iter().any(|t| t.powers != [0; 3]) {
                return Err(SpectraError::CoordinateDependentMomentum);
            }
            Ok(terms.iter().map(|t| t.coeff).sum())
        })
        .collect()
}

impl NumericOperator {
    /// Binds `m` and `omega`; any other constant is an error.
    pub fn from_dirac(h: &DiracOperator, m: f64, omega: f64) -> Result<Self, SpectraError> {
        let spin = h.spinor_size();
        let momentum = h.momentum.iter().map(|c| numeric_matrix(c, m, omega)).collect::<Result<_, _>>()?;
        let potential =
            h.potential.entries().iter().map(|e| eval_constant_part(e, m, omega)).collect::<Result<_, _>>()?;
        Ok(NumericOperator { spatial: h.dim.spatial(), spin, momentum, potential })
    }

    /// V at a point, row-major.
    pub fn potential_at(&self, point: &[f64]) -> Vec<Complex64> {
        self.potential
            .iter()
            .map(|terms| {
                terms
                    .iter()
                    .map(|t| {
                        let mut v = t.coeff;
                        for (k, &e) in t.powers.iter().enumerate() {
                            if e > 0 {
                                v *= point[k].powi(e as i32);
                            }
                        }
                        v
                    })
                    .sum()
            })
            .collect()
    }

    /// Coefficient of `x_j` (j = 0-based spatial index) in V, assuming V is at most linear.
    pub fn linear_part(&self, j: usize) -> Result<Vec<Complex64>, SpectraError> {
        let mut unit = [0u32; 3];
        unit[j] = 1;
        self.potential
            .iter()
            .map(|terms| {
                let mut c = Complex64::new(0.0, 0.0);
                for t in terms {
                    if t.powers.iter().sum::<u32>() > 1 {
                        return Err(SpectraError::NonLinearPotential);
                    }
                    if t.powers == unit {
                        c += t.coeff;
                    }
                }
                Ok(c)
            })
            .collect()
    }

    /// Constant part of V.
    pub fn constant_part(&self) -> Vec<Complex64> {
        self.potential
            .iter()
            .map(|terms| terms.iter().filter(|t| t.powers == [0; 3]).map(|t| t.coeff).sum())
            .collect()
    }
}

/// Which version of the oscillator coupling to assemble.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coupling {
    /// `alpha_j (p_j - i m omega beta x_j) + beta m`.
    Oscillator,
    /// The coupling with the factor i removed: `alpha_j (p_j - m omega beta x_j)`.
    DropI,
    /// The coupling with beta removed: `alpha_j (p_j - i m omega x_j)`.
    DropBeta,
    /// Both removed: `alpha_j (p_j - m omega x_j)`.
    DropIBeta,
}

/// The Dirac-oscillator operator extracted from its Lagrangian (standard
/// representation), or a hand-built variant for negative controls.
pub fn oscillator_operator(dim: Dim, coupling: Coupling) -> Result<DiracOperator, SpectraError> {
    let rep = make_rep(dim, false)?;
    if coupling == Coupling::Oscillator {
        let l = build_do_lagrangian(&rep, BuildOptions { massless: false, form: OscillatorForm::Tensor })?;
        return Ok(hamiltonian_extract(&l)?);
    }
    let d = rep.derived();
    let mw = var("m") * var("omega");
    let mut pot = d.beta.scale(&var("m"));
    for (j, c) in dim.spatial_coords().enumerate() {
        let x = dirosc_core::symbols::coord(c);
        let inner = match coupling {
            Coupling::DropI => d.beta.scale(&(&mw * &x)),
            Coupling::DropBeta => rep.identity().scale(&(i() * &mw * &x)),
            _ => rep.identity().scale(&(&mw * &x)),
        };
        pot = &pot - &(&d.alphas[j] * &inner);
    }
    Ok(DiracOperator { dim, time: rep.identity().scale(&i()), momentum: d.alphas, potential: pot })
}
