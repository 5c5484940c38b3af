//! Exact multivariate polynomials over spacetime coordinates and named constants.
//!
//! Coefficients are Gaussian rationals. Constants are extra monomial
//! dimensions; an invertible constant `q` carries a reciprocal slot `q^-1`
//! and the pair cancels on multiplication.

mod coeff;
mod parse;
mod poly;
mod universe;

pub use coeff::{coeff_text, from_rational, i_unit, imag, is_real, rational, real, Coeff, Rational};
pub use poly::{Monomial, PolyExpr};
pub use universe::{Coord, Symbol, SymbolKind, Universe, UniverseBuilder};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("operands belong to different symbol universes")]
    UniverseMismatch,
    #[error("cannot differentiate with respect to `{0}`: not a coordinate")]
    InvalidVariable(String),
    #[error("cyclic substitution through `{0}`")]
    Cycle(String),
    #[error("expected a single-term polynomial")]
    NotAMonomial,
    #[error("`{0}` has no declared reciprocal")]
    NotInvertible(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("invalid or duplicate symbol name `{0}`")]
    BadSymbolName(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;

    fn u() -> std::sync::Arc<Universe> {
        Universe::builder().constant("rho").invertible("q").constant("B").build().unwrap()
    }

    #[test]
    fn canonical_text() {
        let u = u();
        let p = PolyExpr::parse("-1/4*rho*t*x^2 - 1/4*rho*t*y^2 - 1/12*rho*t^3", &u).unwrap();
        assert_eq!(p.to_string(), "-1/12*rho*t^3 - 1/4*rho*t*x^2 - 1/4*rho*t*y^2");
        let c = PolyExpr::parse("(1/2+3/4i)*x + 3/4i - i*y", &u).unwrap();
        assert_eq!(c.to_string(), "(1/2+3/4i)*x - i*y + 3/4i");
        assert_eq!(PolyExpr::zero(&u).to_string(), "0");
        assert_eq!(PolyExpr::parse("q*q^-1", &u).unwrap().to_string(), "1");
    }

    #[test]
    fn reciprocal_cancels() {
        let u = u();
        let q = PolyExpr::var(&u, "q");
        let qi = q.reciprocal().unwrap();
        assert_eq!(qi.to_string(), "q^-1");
        assert_eq!((&q * &qi).to_string(), "1");
        assert!(PolyExpr::var(&u, "rho").reciprocal().is_err());
    }

    #[test]
    fn partial_rejects_constants() {
        let u = u();
        let p = PolyExpr::parse("rho*x", &u).unwrap();
        let rho = u.symbol("rho").unwrap();
        assert_eq!(p.partial(rho), Err(PolyError::InvalidVariable("rho".into())));
    }

    #[test]
    fn cyclic_bindings() {
        let u = u();
        let rho = u.symbol("rho").unwrap();
        let b = u.symbol("B").unwrap();
        let bind = BTreeMap::from([
            (rho, PolyExpr::var(&u, "B")),
            (b, PolyExpr::parse("2*rho", &u).unwrap()),
        ]);
        assert!(matches!(PolyExpr::var(&u, "rho").substitute(&bind), Err(PolyError::Cycle(_))));
    }

    #[test]
    fn chained_bindings() {
        let u = u();
        let rho = u.symbol("rho").unwrap();
        let b = u.symbol("B").unwrap();
        let bind = BTreeMap::from([
            (rho, PolyExpr::parse("1/2*B", &u).unwrap()),
            (b, PolyExpr::parse("4*q", &u).unwrap()),
        ]);
        let out = PolyExpr::parse("rho*x", &u).unwrap().substitute(&bind).unwrap();
        assert_eq!(out.to_string(), "2*q*x");
    }

    #[test]
    fn mismatched_universe() {
        let a = PolyExpr::var(&u(), "rho");
        let other = Universe::builder().constant("zeta").build().unwrap();
        let b = PolyExpr::var(&other, "zeta");
        assert_eq!(a.try_add(&b), Err(PolyError::UniverseMismatch));
    }
}
