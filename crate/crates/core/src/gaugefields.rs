//! Four-potentials, gauge transformations, field strengths and the classical
//! relations for the magnetic and linear electric configurations.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::exactpoly::{Coord, PolyError, PolyExpr};
use crate::minkowski::{Dim, FourVector, MinkowskiError, Variance};
use crate::symbols::{self, coord, poly, rat, var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GaugeError {
    #[error(transparent)]
    Minkowski(#[from] MinkowskiError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("potential must be contravariant")]
    NotContravariant,
}

/// A contravariant four-potential A^mu = (phi, A).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Potential(FourVector);

impl Potential {
    pub fn new(v: FourVector) -> Result<Self, GaugeError> {
        if v.variance() != Variance::Contravariant {
            return Err(GaugeError::NotContravariant);
        }
        Ok(Potential(v))
    }

    pub fn from_components(dim: Dim, comps: Vec<PolyExpr>) -> Result<Self, GaugeError> {
        Ok(Potential(FourVector::contravariant(dim, comps)?))
    }

    pub fn dim(&self) -> Dim {
        self.0.dim()
    }

    pub fn vector(&self) -> &FourVector {
        &self.0
    }

    pub fn component(&self, mu: usize) -> &PolyExpr {
        self.0.component(mu)
    }
}

impl fmt::Display for Potential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaugeFn {
    pub dim: Dim,
    pub lambda: PolyExpr,
}

/// Magnetic part: a pseudoscalar in two spatial dimensions, a vector in three.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Magnetic {
    Scalar(PolyExpr),
    Vector([PolyExpr; 3]),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldPair {
    pub e: Vec<PolyExpr>,
    pub b: Magnetic,
}

impl fmt::Display for FieldPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.e.iter().map(|c| c.to_string()).collect();
        let b = match &self.b {
            Magnetic::Scalar(s) => s.to_string(),
            Magnetic::Vector(v) => format!("({}, {}, {})", v[0], v[1], v[2]),
        };
        write!(f, "E = ({}), B = {}", e.join(", "), b)
    }
}

/// Sign convention of a stored field tensor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TensorConvention {
    /// F_{mu nu} = d_mu A_nu - d_nu A_mu, so F_{0i} = E_i and F_{12} = -B.
    Standard,
    /// F_{mu nu} = c (U^mu x^nu - U^nu x^mu) read off in the rest frame,
    /// which equals the negated standard tensor of the covariant potential.
    RestFrame,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldTensor {
    dim: Dim,
    convention: TensorConvention,
    entries: Vec<Vec<PolyExpr>>,
}

impl FieldTensor {
    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn convention(&self) -> TensorConvention {
        self.convention
    }

    pub fn get(&self, mu: usize, nu: usize) -> &PolyExpr {
        &self.entries[mu][nu]
    }

    pub fn entries(&self) -> &[Vec<PolyExpr>] {
        &self.entries
    }

    /// The same tensor expressed in another convention.
    pub fn to_convention(&self, c: TensorConvention) -> FieldTensor {
        if c == self.convention {
            return self.clone();
        }
        FieldTensor {
            dim: self.dim,
            convention: c,
            entries: self.entries.iter().map(|r| r.iter().map(|e| -e).collect()).collect(),
        }
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.dim.spacetime();
        (0..n).all(|m| (0..n).all(|k| self.entries[m][k] == -&self.entries[k][m]))
    }

    /// E_i read from the F_{0i} entries.
    pub fn electric(&self) -> Vec<PolyExpr> {
        let std = self.to_convention(TensorConvention::Standard);
        (1..=self.dim.spatial()).map(|i| std.entries[0][i].clone()).collect()
    }
}

impl fmt::Display for FieldTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// E_i = -d_i phi - d_t A^i; B = d_x A^y - d_y A^x (2D) or curl A (3D).
pub fn fields_from_potential(a: &Potential) -> FieldPair {
    let dim = a.dim();
    let phi = a.component(0);
    let e = dim
        .spatial_coords()
        .enumerate()
        .map(|(k, c)| -phi.d(c) - a.component(k + 1).d(Coord::T))
        .collect();
    let ai = |k: usize| a.component(k);
    let b = match dim {
        Dim::D1 => Magnetic::Scalar(symbols::zero()),
        Dim::D2 => Magnetic::Scalar(ai(2).d(Coord::X) - ai(1).d(Coord::Y)),
        Dim::D3 => Magnetic::Vector([
            ai(3).d(Coord::Y) - ai(2).d(Coord::Z),
            ai(1).d(Coord::Z) - ai(3).d(Coord::X),
            ai(2).d(Coord::X) - ai(1).d(Coord::Y),
        ]),
    };
    FieldPair { e, b }
}

/// A'^mu = A^mu - d^mu Lambda: the time component loses d_t Lambda, spatial
/// components gain d_i Lambda.
pub fn gauge_transform(a: &Potential, g: &GaugeFn) -> Result<Potential, GaugeError> {
    if a.dim() != g.dim {
        return Err(MinkowskiError::DimensionMismatch(a.dim(), g.dim).into());
    }
    let comps = a
        .dim()
        .coords()
        .enumerate()
        .map(|(mu, c)| {
            let d = g.lambda.d(c);
            if mu == 0 {
                a.component(mu) - d
            } else {
                a.component(mu) + d
            }
        })
        .collect();
    Potential::from_components(a.dim(), comps)
}

/// (c/4) [2 (U.x) x^mu - x^2 U^mu] in the rest frame.
pub fn covariant_potential(c: &PolyExpr, dim: Dim) -> Result<Potential, GaugeError> {
    let u = symbols::universe();
    let x = FourVector::coordinates(dim, u);
    let vel = FourVector::rest_velocity(dim, u);
    let ux = vel.dot(&x)?;
    let xx = x.dot(&x)?;
    let v = x.scale(&(&rat(2, 1) * &ux)).try_sub(&vel.scale(&xx))?;
    Potential::new(v.scale(&(c * &rat(1, 4))))
}

/// F_{mu nu} = d_mu A_nu - d_nu A_mu with A_mu the lowered potential.
pub fn field_tensor_from_potential(a: &Potential) -> Result<FieldTensor, GaugeError> {
    let low = a.vector().lower()?;
    let coords: Vec<_> = a.dim().coords().collect();
    let entries = coords
        .iter()
        .map(|&cm| coords.iter().enumerate().map(|(nu, _)| low.component(nu).d(cm)).collect::<Vec<_>>())
        .collect::<Vec<_>>();
    let n = coords.len();
    let entries = (0..n)
        .map(|mu| (0..n).map(|nu| &entries[mu][nu] - &entries[nu][mu]).collect())
        .collect();
    Ok(FieldTensor { dim: a.dim(), convention: TensorConvention::Standard, entries })
}

/// c (U^mu x^nu - U^nu x^mu) with U the rest-frame velocity.
pub fn covariant_field_tensor(c: &PolyExpr, dim: Dim) -> FieldTensor {
    let u = symbols::universe();
    let x = FourVector::coordinates(dim, u);
    let vel = FourVector::rest_velocity(dim, u);
    let n = dim.spacetime();
    let entries = (0..n)
        .map(|mu| {
            (0..n)
                .map(|nu| c * &(vel.component(mu) * x.component(nu) - vel.component(nu) * x.component(mu)))
                .collect()
        })
        .collect();
    FieldTensor { dim, convention: TensorConvention::RestFrame, entries }
}

/// B = m omega / q.
pub fn larmor_field(m: &PolyExpr, omega: &PolyExpr, q: &PolyExpr) -> Result<PolyExpr, GaugeError> {
    Ok(m * omega * q.reciprocal()?)
}

/// zeta = 2 m a^2 / (q v^2).
pub fn zeta_from_kinematics(m: &PolyExpr, a: &PolyExpr, v: &PolyExpr, q: &PolyExpr) -> Result<PolyExpr, GaugeError> {
    Ok(rat(2, 1) * m * a.pow(2) * q.reciprocal()? * v.pow(2).reciprocal()?)
}

/// zeta = -dE/dx.
pub fn zeta_from_gradient(e: &PolyExpr) -> PolyExpr {
    -e.d(Coord::X)
}

/// q v B - m v^2 / R after substituting `B = m omega / q` and `omega = v / R`.
pub fn circular_orbit_residual() -> Result<PolyExpr, GaugeError> {
    let b = larmor_field(&var("m"), &var("omega"), &var("q"))?;
    let bind = BTreeMap::from([(symbols::symbol("omega"), poly("v*R^-1"))]);
    let b = b.substitute(&bind)?;
    Ok(var("q") * var("v") * b - var("m") * var("v").pow(2) * poly("R^-1"))
}

/// A^mu = rho (0, y, -x).
pub fn magnetic_potential() -> Potential {
    let rho = var("rho");
    let comps = vec![symbols::zero(), &rho * &coord(Coord::Y), -&rho * &coord(Coord::X)];
    Potential::from_components(Dim::D2, comps).expect("three components")
}

/// Lambda = -(rho/4) t x^2 - (rho/4) t y^2 - (rho/12) t^3.
pub fn magnetic_gauge_fn() -> GaugeFn {
    GaugeFn { dim: Dim::D2, lambda: poly("-1/4*rho*t*x^2 - 1/4*rho*t*y^2 - 1/12*rho*t^3") }
}

/// A^mu = zeta (0, t x).
pub fn electric_potential() -> Potential {
    Potential::from_components(Dim::D1, vec![symbols::zero(), poly("zeta*t*x")]).expect("two components")
}

/// Lambda = -(zeta/4)(t x^2 + t^3/3).
pub fn electric_gauge_fn() -> GaugeFn {
    GaugeFn { dim: Dim::D1, lambda: poly("-1/4*zeta*t*x^2 - 1/12*zeta*t^3") }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_balance() {
        assert!(circular_orbit_residual().unwrap().is_zero());
    }

    #[test]
    fn convention_map_is_involutive() {
        let f = covariant_field_tensor(&var("rho"), Dim::D2);
        let back = f.to_convention(TensorConvention::Standard).to_convention(TensorConvention::RestFrame);
        assert_eq!(back, f);
    }
}
