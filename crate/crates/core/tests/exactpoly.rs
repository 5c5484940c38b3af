mod common;

use std::collections::BTreeMap;

use common::poly_strategy;
use dirosc_core::exactpoly::{Coord, PolyError, PolyExpr};
use dirosc_core::symbols::{self, poly, symbol, universe};
use proptest::prelude::*;

#[test]
fn sum_is_commutative_example() {
    assert_eq!(poly("x^2 + y^2") + poly("t^2"), poly("t^2 + x^2 + y^2"));
}

#[test]
fn scale_by_constant_monomial() {
    let p = poly("t*x^2").scale(&poly("-1/4*rho")).unwrap();
    assert_eq!(p.to_string(), "-1/4*rho*t*x^2");
    assert_eq!(poly("x").scale(&poly("x + 1")), Err(PolyError::NotAMonomial));
}

#[test]
fn time_derivative_of_gauge_function() {
    let lambda = poly("-1/4*rho*t*x^2 - 1/4*rho*t*y^2 - 1/12*rho*t^3");
    assert_eq!(lambda.d(Coord::T), poly("-1/4*rho*x^2 - 1/4*rho*y^2 - 1/4*rho*t^2"));
    assert_eq!(poly("x^2").d(Coord::X), poly("2*x"));
    assert!(poly("rho*t*x").d(Coord::Y).is_zero());
}

#[test]
fn equality_is_canonical() {
    assert_eq!(poly("rho*(x^2 + y^2 + t^2)").scale_coeff(&common::coeff((1, 4), (0, 1))), poly("1/4*rho*x^2 + 1/4*rho*y^2 + 1/4*rho*t^2"));
    assert_ne!(poly("-2*rho"), poly("-B"));
}

#[test]
fn substitution_examples() {
    let b = BTreeMap::from([(symbol("rho"), poly("1/2*B"))]);
    assert_eq!(poly("-2*rho").substitute(&b).unwrap(), poly("-B"));
    let w = BTreeMap::from([(symbol("omega"), poly("zeta*m^-1"))]);
    assert_eq!(poly("m*omega").substitute(&w).unwrap(), poly("zeta"));
    let p = poly("rho*t*x + 3/4i*q^-1");
    assert_eq!(p.substitute(&BTreeMap::new()).unwrap(), p);
}

#[test]
fn reciprocal_follows_binding() {
    let b = BTreeMap::from([(symbol("q"), poly("2*m"))]);
    assert_eq!(poly("q^-1*x").substitute(&b).unwrap(), poly("1/2*m^-1*x"));
    let bad = BTreeMap::from([(symbol("q"), poly("m + 1"))]);
    assert!(matches!(poly("q^-1").substitute(&bad), Err(PolyError::NotInvertible(_))));
}

#[test]
fn differentiating_by_constant_fails() {
    assert!(matches!(poly("rho").partial(symbol("rho")), Err(PolyError::InvalidVariable(_))));
}

#[test]
fn parse_rejects_garbage() {
    for bad in ["", "x +", "2**x", "foo", "x^", "(x", "1/0"] {
        assert!(PolyExpr::parse(bad, universe()).is_err(), "{bad}");
    }
}

#[test]
fn mul_by_zero_annihilates() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let p = common::random_poly(&mut rng, 6, &common::POOL);
        assert!((p * symbols::zero()).is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn mixed_partials_commute(p in poly_strategy()) {
        prop_assert_eq!(p.d(Coord::X).d(Coord::Y), p.d(Coord::Y).d(Coord::X));
        prop_assert_eq!(p.d(Coord::T).d(Coord::X), p.d(Coord::X).d(Coord::T));
    }

    #[test]
    fn leibniz_rule(p in poly_strategy(), q in poly_strategy()) {
        for c in [Coord::T, Coord::X, Coord::Y] {
            prop_assert_eq!((&p * &q).d(c), &p.d(c) * &q + &p * &q.d(c));
        }
    }

    #[test]
    fn text_round_trip(p in poly_strategy()) {
        let text = p.to_string();
        let back = PolyExpr::parse(&text, universe()).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn neq_after_adding_x(p in poly_strategy()) {
        prop_assert_ne!(&p + &poly("x"), p);
    }

    #[test]
    fn reciprocals_cancel(p in poly_strategy()) {
        prop_assert_eq!(&(&p * &poly("q")) * &poly("q^-1"), p);
    }
}
