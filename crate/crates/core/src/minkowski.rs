//! Vectors in (1+1), (2+1), (3+1) Minkowski space with signature (+,-,...,-).

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use crate::exactpoly::{Coord, PolyExpr, Universe};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MinkowskiError {
    #[error("unsupported dimension `{0}` (expected 1+1, 2+1 or 3+1)")]
    UnknownDim(String),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(Dim, Dim),
    #[error("expected {expected} components, got {got}")]
    ComponentCount { expected: usize, got: usize },
    #[error("vector is already covariant")]
    AlreadyCovariant,
    #[error("vector is already contravariant")]
    AlreadyContravariant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dim {
    D1,
    D2,
    D3,
}

impl Dim {
    pub fn from_spatial(n: usize) -> Result<Dim, MinkowskiError> {
        match n {
            1 => Ok(Dim::D1),
            2 => Ok(Dim::D2),
            3 => Ok(Dim::D3),
            _ => Err(MinkowskiError::UnknownDim(format!("{n}+1"))),
        }
    }

    pub fn spatial(self) -> usize {
        match self {
            Dim::D1 => 1,
            Dim::D2 => 2,
            Dim::D3 => 3,
        }
    }

    pub fn spacetime(self) -> usize {
        self.spatial() + 1
    }

    /// Diagonal metric entry for index `mu`.
    pub fn eta(self, mu: usize) -> i64 {
        if mu == 0 {
            1
        } else {
            -1
        }
    }

    pub fn coords(self) -> impl Iterator<Item = Coord> {
        Coord::ALL.into_iter().take(self.spacetime())
    }

    pub fn spatial_coords(self) -> impl Iterator<Item = Coord> {
        Coord::ALL.into_iter().skip(1).take(self.spatial())
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+1", self.spatial())
    }
}

impl FromStr for Dim {
    type Err = MinkowskiError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "1+1" => Ok(Dim::D1),
            "2+1" => Ok(Dim::D2),
            "3+1" => Ok(Dim::D3),
            other => Err(MinkowskiError::UnknownDim(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variance {
    Contravariant,
    Covariant,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourVector {
    dim: Dim,
    variance: Variance,
    comps: Vec<PolyExpr>,
}

impl FourVector {
    pub fn new(dim: Dim, variance: Variance, comps: Vec<PolyExpr>) -> Result<Self, MinkowskiError> {
        if comps.len() != dim.spacetime() {
            return Err(MinkowskiError::ComponentCount { expected: dim.spacetime(), got: comps.len() });
        }
        Ok(FourVector { dim, variance, comps })
    }

    pub fn contravariant(dim: Dim, comps: Vec<PolyExpr>) -> Result<Self, MinkowskiError> {
        Self::new(dim, Variance::Contravariant, comps)
    }

    pub fn zero(dim: Dim, u: &Arc<Universe>) -> Self {
        FourVector { dim, variance: Variance::Contravariant, comps: vec![PolyExpr::zero(u); dim.spacetime()] }
    }

    /// x^mu = (t, x, y, ...).
    pub fn coordinates(dim: Dim, u: &Arc<Universe>) -> Self {
        let comps = dim.coords().map(|c| PolyExpr::coord(u, c)).collect();
        FourVector { dim, variance: Variance::Contravariant, comps }
    }

    /// Rest-frame four-velocity U^mu = (1, 0, ...).
    pub fn rest_velocity(dim: Dim, u: &Arc<Universe>) -> Self {
        let mut v = Self::zero(dim, u);
        v.comps[0] = PolyExpr::one(u);
        v
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn variance(&self) -> Variance {
        self.variance
    }

    pub fn components(&self) -> &[PolyExpr] {
        &self.comps
    }

    pub fn component(&self, mu: usize) -> &PolyExpr {
        &self.comps[mu]
    }

    fn flip(&self, to: Variance) -> FourVector {
        let comps = self
            .comps
            .iter()
            .enumerate()
            .map(|(mu, c)| if self.dim.eta(mu) < 0 { -c } else { c.clone() })
            .collect();
        FourVector { dim: self.dim, variance: to, comps }
    }

    pub fn lower(&self) -> Result<FourVector, MinkowskiError> {
        match self.variance {
            Variance::Contravariant => Ok(self.flip(Variance::Covariant)),
            Variance::Covariant => Err(MinkowskiError::AlreadyCovariant),
        }
    }

    pub fn raise(&self) -> Result<FourVector, MinkowskiError> {
        match self.variance {
            Variance::Covariant => Ok(self.flip(Variance::Contravariant)),
            Variance::Contravariant => Err(MinkowskiError::AlreadyContravariant),
        }
    }

    /// `eta_{mu nu} u^mu v^nu` for two contravariant vectors.
    pub fn dot(&self, other: &FourVector) -> Result<PolyExpr, MinkowskiError> {
        if self.dim != other.dim {
            return Err(MinkowskiError::DimensionMismatch(self.dim, other.dim));
        }
        if self.variance != Variance::Contravariant || other.variance != Variance::Contravariant {
            return Err(MinkowskiError::AlreadyCovariant);
        }
        let lowered = other.lower()?;
        let u = self.comps[0].universe().clone();
        Ok(self
            .comps
            .iter()
            .zip(&lowered.comps)
            .fold(PolyExpr::zero(&u), |acc, (a, b)| acc + a * b))
    }

    pub fn scale(&self, c: &PolyExpr) -> FourVector {
        FourVector { dim: self.dim, variance: self.variance, comps: self.comps.iter().map(|x| x * c).collect() }
    }

    pub fn try_add(&self, other: &FourVector) -> Result<FourVector, MinkowskiError> {
        if self.dim != other.dim {
            return Err(MinkowskiError::DimensionMismatch(self.dim, other.dim));
        }
        let comps = self.comps.iter().zip(&other.comps).map(|(a, b)| a + b).collect();
        Ok(FourVector { dim: self.dim, variance: self.variance, comps })
    }

    pub fn try_sub(&self, other: &FourVector) -> Result<FourVector, MinkowskiError> {
        self.try_add(&other.scale(&PolyExpr::rational(self.comps[0].universe(), -1, 1)))
    }
}

impl fmt::Display for FourVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.comps.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbols::{poly, universe};

    #[test]
    fn dot_examples() {
        let u = universe();
        let x = FourVector::coordinates(Dim::D2, u);
        let uv = FourVector::rest_velocity(Dim::D2, u);
        assert_eq!(uv.dot(&x).unwrap(), poly("t"));
        assert_eq!(x.dot(&x).unwrap(), poly("t^2 - x^2 - y^2"));
        assert!(x.dot(&FourVector::zero(Dim::D2, u)).unwrap().is_zero());
    }

    #[test]
    fn lowering() {
        let v = FourVector::contravariant(Dim::D2, vec![poly("0"), poly("y"), poly("-x")]).unwrap();
        let l = v.lower().unwrap();
        assert_eq!(l.components(), &[poly("0"), poly("-y"), poly("x")]);
        assert_eq!(l.lower(), Err(MinkowskiError::AlreadyCovariant));
        assert_eq!(l.raise().unwrap(), v);
    }

    #[test]
    fn parse_dim() {
        assert_eq!("2+1".parse::<Dim>().unwrap(), Dim::D2);
        assert!("9".parse::<Dim>().is_err());
    }
}
