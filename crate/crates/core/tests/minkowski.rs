mod common;

use common::poly_strategy;
use dirosc_core::minkowski::{Dim, FourVector, MinkowskiError};
use dirosc_core::symbols::{poly, universe};
use proptest::prelude::*;

fn vec3() -> impl Strategy<Value = FourVector> {
    (poly_strategy(), poly_strategy(), poly_strategy())
        .prop_map(|(a, b, c)| FourVector::contravariant(Dim::D2, vec![a, b, c]).unwrap())
}

#[test]
fn rest_velocity_is_unit_in_every_dimension() {
    for dim in [Dim::D1, Dim::D2, Dim::D3] {
        let u = FourVector::rest_velocity(dim, universe());
        assert_eq!(u.dot(&u).unwrap(), poly("1"));
    }
}

#[test]
fn one_plus_one_interval() {
    let x = FourVector::coordinates(Dim::D1, universe());
    assert_eq!(x.dot(&x).unwrap(), poly("t^2 - x^2"));
    assert_eq!(x.components().len(), 2);
}

#[test]
fn mismatched_dimensions() {
    let a = FourVector::coordinates(Dim::D1, universe());
    let b = FourVector::coordinates(Dim::D2, universe());
    assert_eq!(a.dot(&b), Err(MinkowskiError::DimensionMismatch(Dim::D1, Dim::D2)));
    assert!(FourVector::contravariant(Dim::D2, vec![poly("t")]).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn dot_is_symmetric(u in vec3(), v in vec3()) {
        prop_assert_eq!(u.dot(&v).unwrap(), v.dot(&u).unwrap());
    }

    #[test]
    fn raise_undoes_lower(v in vec3()) {
        prop_assert_eq!(v.lower().unwrap().raise().unwrap(), v);
    }
}
