use dirosc_core::clifford::{make_rep, GammaRep, RepChoice, SpinorMatrix};
use dirosc_core::minkowski::Dim;
use dirosc_core::symbols::{poly, universe};

fn all_reps() -> Vec<GammaRep> {
    vec![
        make_rep(Dim::D1, false).unwrap(),
        make_rep(Dim::D2, false).unwrap(),
        GammaRep::new(Dim::D2, RepChoice::Alternate).unwrap(),
        make_rep(Dim::D2, true).unwrap(),
        make_rep(Dim::D3, false).unwrap(),
    ]
}

fn eta(mu: usize, nu: usize) -> i64 {
    match (mu, nu) {
        (0, 0) => 1,
        (a, b) if a == b => -1,
        _ => 0,
    }
}

#[test]
fn anticommutation_relations() {
    for rep in all_reps() {
        let id = rep.identity();
        let n = rep.dim().spacetime();
        for mu in 0..n {
            for nu in 0..n {
                let lhs = rep.gamma(mu).unwrap().anticommutator(rep.gamma(nu).unwrap());
                let rhs = id.scale(&poly(&format!("{}", 2 * eta(mu, nu))));
                assert_eq!(lhs, rhs, "{:?} mu={mu} nu={nu}", rep.choice());
            }
        }
    }
}

#[test]
fn traceless_gammas() {
    for rep in all_reps() {
        for g in rep.gammas() {
            assert!(g.trace().is_zero());
        }
    }
}

#[test]
fn hermiticity_pattern() {
    for rep in all_reps() {
        assert!(rep.gamma(0).unwrap().is_hermitian());
        for g in &rep.gammas()[1..] {
            assert!(g.is_antihermitian());
            assert_eq!(g * g, -rep.identity());
        }
        let d = rep.derived();
        assert_eq!(&d.beta * &d.beta, rep.identity());
        for a in &d.alphas {
            assert!(a.is_hermitian());
            assert_eq!(a * a, rep.identity());
            assert_eq!(a * &d.beta, -(&d.beta * a));
        }
    }
}

#[test]
fn alpha_one_in_two_plus_one() {
    // gamma^0 = sigma_3, gamma^1 = i sigma_1: alpha_1 = i sigma_3 sigma_1 = -sigma_2
    let rep = make_rep(Dim::D2, false).unwrap();
    let expected = SpinorMatrix::from_ints(2, &[(0, 0), (0, 1), (0, -1), (0, 0)]);
    assert_eq!(rep.alpha(1).unwrap(), expected);
}

#[test]
fn sigma_properties() {
    for rep in all_reps() {
        let n = rep.dim().spacetime();
        let g0 = rep.gamma(0).unwrap();
        for mu in 0..n {
            assert!(rep.sigma(mu, mu).unwrap().is_zero());
            for nu in 0..n {
                let s = rep.sigma(mu, nu).unwrap();
                assert_eq!(s, -rep.sigma(nu, mu).unwrap());
                assert_eq!(s.dagger(), &(g0 * &s) * g0);
            }
        }
        for j in 1..n {
            // (i/2)(g0 gj - gj g0) = i g0 gj
            let direct = (g0 * rep.gamma(j).unwrap()).scale(&poly("i"));
            assert_eq!(rep.sigma(0, j).unwrap(), direct);
            assert_eq!(rep.sigma(0, j).unwrap(), rep.alpha(j).unwrap().scale(&poly("i")));
        }
    }
}

#[test]
fn chirality_and_projectors() {
    for rep in all_reps() {
        if rep.dim() == Dim::D2 && rep.choice() != RepChoice::Reducible {
            assert!(rep.chiral_projectors().is_err());
            continue;
        }
        let g5 = rep.gamma5().unwrap();
        assert_eq!(g5 * g5, rep.identity());
        assert!(g5.is_hermitian());
        for g in rep.gammas() {
            assert!(g5.anticommutator(g).is_zero());
        }
        let (pr, pl) = rep.chiral_projectors().unwrap();
        assert_eq!(&pr + &pl, rep.identity());
        assert!((&pr * &pl).is_zero());
        assert!((&pl * &pr).is_zero());
        assert_eq!(&pr * &pr, pr);
        assert_eq!(&pl * &pl, pl);
    }
}

#[test]
fn gamma5_one_plus_one_squares_by_anticommutation() {
    // g0 g1 g0 g1 = -g0 g0 g1 g1 = -(1)(-1) = 1
    let rep = make_rep(Dim::D1, false).unwrap();
    let g0 = rep.gamma(0).unwrap();
    let g1 = rep.gamma(1).unwrap();
    let prod = &(&(g0 * g1) * g0) * g1;
    assert_eq!(prod, SpinorMatrix::identity(2, universe()));
    assert_eq!(rep.gamma5().unwrap(), &(g0 * g1));
}

#[test]
fn reducible_only_in_two_plus_one() {
    assert!(make_rep(Dim::D1, true).is_err());
    assert!(make_rep(Dim::D3, true).is_err());
    assert_eq!(make_rep(Dim::D2, true).unwrap().size(), 4);
    assert_eq!(make_rep(Dim::D3, false).unwrap().size(), 4);
}
