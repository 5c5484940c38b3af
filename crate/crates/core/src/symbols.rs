//! The shared symbol universe used by every physics construction.

use std::sync::{Arc, OnceLock};

use crate::exactpoly::{Coord, PolyExpr, Symbol, Universe};

/// Names of the phase functions available to gauge and chiral transformations.
pub const PHASES: [&str; 3] = ["theta", "theta_R", "theta_L"];

/// Symbol standing for the gradient component `d_mu theta`.
pub fn gradient_name(base: &str, mu: usize) -> String {
    format!("d{mu}_{base}")
}

/// Symbol standing for `d_mu d_nu theta`; index order is irrelevant.
pub fn hessian_name(base: &str, mu: usize, nu: usize) -> String {
    let (a, b) = if mu <= nu { (mu, nu) } else { (nu, mu) };
    format!("d{a}{b}_{base}")
}

/// Gauge-field component `A_mu` as an opaque constant.
pub fn gauge_field_name(mu: usize) -> String {
    format!("A_{mu}")
}

pub fn universe() -> &'static Arc<Universe> {
    static U: OnceLock<Arc<Universe>> = OnceLock::new();
    U.get_or_init(|| {
        let mut b = Universe::builder()
            .constant("rho")
            .constant("zeta")
            .invertible("m")
            .constant("omega")
            .invertible("e")
            .constant("B")
            .constant("B_I")
            .invertible("q")
            .constant("a")
            .invertible("v")
            .invertible("R");
        for mu in 0..4 {
            b = b.constant(&gauge_field_name(mu));
        }
        for base in PHASES {
            b = b.constant(base);
            for mu in 0..4 {
                b = b.constant(&gradient_name(base, mu));
            }
            for mu in 0..4 {
                for nu in mu..4 {
                    b = b.constant(&hessian_name(base, mu, nu));
                }
            }
        }
        b.build().expect("standard universe")
    })
}

pub fn symbol(name: &str) -> Symbol {
    universe().symbol(name).unwrap_or_else(|e| panic!("{e}"))
}

/// A named constant or coordinate of the standard universe.
pub fn var(name: &str) -> PolyExpr {
    PolyExpr::var(universe(), name)
}

pub fn coord(c: Coord) -> PolyExpr {
    PolyExpr::coord(universe(), c)
}

pub fn rat(num: i64, den: i64) -> PolyExpr {
    PolyExpr::rational(universe(), num, den)
}

pub fn i() -> PolyExpr {
    PolyExpr::i(universe())
}

pub fn zero() -> PolyExpr {
    PolyExpr::zero(universe())
}

pub fn one() -> PolyExpr {
    PolyExpr::one(universe())
}

/// Parses text against the standard universe; panics on malformed input.
pub fn poly(text: &str) -> PolyExpr {
    PolyExpr::parse(text, universe()).unwrap_or_else(|e| panic!("{text}: {e}"))
}
