//! Seeded random polynomials for property runs.

use dirosc_core::exactpoly::{Coeff, PolyExpr, Rational};
use dirosc_core::symbols;
use rand::Rng;

/// A random polynomial with up to `terms` terms over `pool`, per-symbol degree up to 2
/// and small Gaussian-rational coefficients.
pub fn random_poly<R: Rng>(rng: &mut R, terms: usize, pool: &[&str]) -> PolyExpr {
    let mut p = symbols::zero();
    for _ in 0..rng.gen_range(0..=terms) {
        let re = Rational::new(rng.gen_range(-5i64..=5).into(), rng.gen_range(1i64..=4).into());
        let im = if rng.gen_bool(0.3) {
            Rational::new(rng.gen_range(-3i64..=3).into(), rng.gen_range(1i64..=3).into())
        } else {
            Rational::from_integer(0i64.into())
        };
        let mut t = PolyExpr::constant(symbols::universe(), Coeff::new(re, im));
        for name in pool {
            for _ in 0..rng.gen_range(0..=2) {
                t = t * symbols::poly(name);
            }
        }
        p = p + t;
    }
    p
}
