//! Exact Clifford-algebra checks on every available representation.

use dirosc_core::clifford::{GammaRep, RepChoice, SpinorMatrix};
use dirosc_core::minkowski::Dim;
use dirosc_core::symbols::rat;

use crate::{CheckResult, CliError};

fn label(rep: &GammaRep) -> String {
    match rep.choice() {
        RepChoice::Standard if rep.dim() == Dim::D2 => format!("{} irreducible", rep.dim()),
        RepChoice::Standard => rep.dim().to_string(),
        RepChoice::Alternate => format!("{} alternate", rep.dim()),
        RepChoice::Reducible => format!("{} reducible", rep.dim()),
    }
}

/// Representations checked for `dim`.
pub fn representations(dim: Dim) -> Result<Vec<GammaRep>, CliError> {
    let choices: &[RepChoice] = match dim {
        Dim::D2 => &[RepChoice::Standard, RepChoice::Alternate, RepChoice::Reducible],
        _ => &[RepChoice::Standard],
    };
    choices.iter().map(|&c| GammaRep::new(dim, c).map_err(|e| CliError::Usage(e.to_string()))).collect()
}

fn all_pairs(rep: &GammaRep, f: impl Fn(usize, usize) -> bool) -> bool {
    let n = rep.dim().spacetime();
    (0..n).all(|mu| (0..n).all(|nu| f(mu, nu)))
}

/// Anticommutation, Hermiticity pattern, sigma antisymmetry and projector algebra.
pub fn clifford_checks(rep: &GammaRep) -> Vec<CheckResult> {
    let dim = label(rep);
    let g = rep.gammas();
    let id = rep.identity();
    let mut out = Vec::new();

    let anti = all_pairs(rep, |mu, nu| {
        let want = if mu == nu { id.scale(&rat(2 * rep.dim().eta(mu), 1)) } else { rep.zero() };
        g[mu].anticommutator(&g[nu]) == want
    });
    out.push(CheckResult::exact("{gamma^mu, gamma^nu} = 2 eta^{mu nu} I", &dim, anti, "true", anti));

    let herm = g[0].is_hermitian() && g[1..].iter().all(SpinorMatrix::is_antihermitian);
    out.push(CheckResult::exact("gamma^0 Hermitian, gamma^j anti-Hermitian", &dim, herm, "true", herm));

    let sigma = all_pairs(rep, |mu, nu| match (rep.sigma(mu, nu), rep.sigma(nu, mu)) {
        (Ok(a), Ok(b)) => a == -&b,
        _ => false,
    });
    out.push(CheckResult::exact("sigma^{mu nu} = -sigma^{nu mu}", &dim, sigma, "true", sigma));

    match rep.chiral_projectors() {
        Ok((pr, pl)) => {
            let ok = &pr + &pl == id && (&pr * &pl).is_zero() && &pr * &pr == pr && &pl * &pl == pl;
            out.push(CheckResult::exact("P_R + P_L = I, P_R P_L = 0, P^2 = P", &dim, ok, "true", ok));
        }
        Err(e) => out.push(CheckResult::skip("P_R + P_L = I, P_R P_L = 0, P^2 = P", &dim, &e.to_string())),
    }
    out
}
