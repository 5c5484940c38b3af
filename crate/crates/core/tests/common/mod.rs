#![allow(dead_code)]

use dirosc_core::exactpoly::{Coeff, PolyExpr, Rational};
use dirosc_core::symbols;
use proptest::prelude::*;
use rand::Rng;

/// Symbols random polynomials are drawn from.
pub const POOL: [&str; 8] = ["t", "x", "y", "rho", "zeta", "m", "q", "q^-1"];

fn factor(name: &str) -> PolyExpr {
    symbols::poly(name)
}

pub fn coeff(re: (i64, i64), im: (i64, i64)) -> Coeff {
    Coeff::new(Rational::new(re.0.into(), re.1.into()), Rational::new(im.0.into(), im.1.into()))
}

/// A random polynomial with up to `terms` terms and per-symbol degree up to 2.
pub fn random_poly<R: Rng>(rng: &mut R, terms: usize, pool: &[&str]) -> PolyExpr {
    let mut p = symbols::zero();
    for _ in 0..rng.gen_range(0..=terms) {
        let c = coeff(
            (rng.gen_range(-5..=5), rng.gen_range(1..=4)),
            if rng.gen_bool(0.3) { (rng.gen_range(-3..=3), rng.gen_range(1..=3)) } else { (0, 1) },
        );
        let mut t = PolyExpr::constant(symbols::universe(), c);
        for name in pool {
            for _ in 0..rng.gen_range(0..=2) {
                if rng.gen_bool(0.5) {
                    t = t * factor(name);
                }
            }
        }
        p = p + t;
    }
    p
}

pub fn poly_strategy() -> impl Strategy<Value = PolyExpr> {
    any::<u64>().prop_map(|seed| {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        random_poly(&mut rng, 5, &POOL)
    })
}
