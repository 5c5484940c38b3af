//! U(1) invariance and chiral breaking of the QED plus oscillator density.

use dirosc_core::clifford::{GammaRep, RepChoice};
use dirosc_core::lagrangian::*;
use dirosc_core::minkowski::Dim;
use dirosc_core::symbols::poly;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::random::random_poly;
use crate::{CheckResult, CliError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    U1,
    Chiral,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rep {
    Irreducible,
    Reducible,
}

#[derive(Debug, Clone)]
pub struct SymmetryOptions {
    pub kind: Kind,
    pub dim: Dim,
    /// Set `theta_R = theta_L` for the chiral run.
    pub theta_equal: bool,
    /// Representation; chiral runs in (2+1) default to the reducible one.
    pub rep: Option<Rep>,
    /// Random polynomial phases tried on top of the formal one (U(1) only).
    pub random_cases: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SymmetryPayload {
    pub symmetry: String,
    pub dimension: String,
    pub representation: String,
    /// `None` when the run was skipped.
    pub invariant: Option<bool>,
    /// `transformed - original` in canonical text.
    pub residual: String,
    /// Phase dressing the surviving terms, if any.
    pub residual_phase: Option<String>,
    pub note: Option<String>,
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn pool(dim: Dim) -> Vec<&'static str> {
    match dim {
        Dim::D1 => vec!["t", "x", "zeta"],
        _ => vec!["t", "x", "y", "rho"],
    }
}

fn qed_do(rep: &GammaRep, massless: bool) -> Result<LagrangianDensity, CliError> {
    build_do_lagrangian(rep, BuildOptions { massless, form: OscillatorForm::Qed }).map_err(usage)
}

/// `exp(+-i(theta_R - theta_L))`-dressed oscillator terms minus the originals.
pub fn dressed_oscillator_residual(l: &LagrangianDensity) -> LagrangianDensity {
    let mut expected = LagrangianDensity::new(l.dim(), l.spinor_size());
    for (k, m) in l.bilinears().iter().filter(|(k, _)| k.left != k.right) {
        let angle = if k.left == Chirality::R { poly("theta_R - theta_L") } else { poly("theta_L - theta_R") };
        expected.add_bilinear(TermKey { phase: Phase(angle), ..k.clone() }, m.clone());
        expected.add_bilinear(k.clone(), -m);
    }
    expected
}

/// Runs the requested symmetry check.
pub fn symmetry_checks(o: &SymmetryOptions) -> Result<(Vec<CheckResult>, SymmetryPayload), CliError> {
    let dim = o.dim;
    if dim == Dim::D3 {
        return Err(usage("symmetry checks exist for 1+1 and 2+1 only"));
    }
    match o.kind {
        Kind::U1 => u1(o),
        Kind::Chiral => chiral(o),
    }
}

fn u1(o: &SymmetryOptions) -> Result<(Vec<CheckResult>, SymmetryPayload), CliError> {
    let dim = o.dim;
    let choice = if o.rep == Some(Rep::Reducible) { RepChoice::Reducible } else { RepChoice::Standard };
    let rep = GammaRep::new(dim, choice).map_err(usage)?;
    let l = qed_do(&rep, false)?;
    let mut checks = Vec::new();

    let residual = u1_transform(&l, &Theta::formal("theta").map_err(usage)?).minus(&l);
    checks.push(CheckResult::exact("formal theta leaves the density invariant", dim, residual.is_zero(), "0", &residual));

    let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
    let nonzero = (0..o.random_cases)
        .filter(|_| {
            let theta = Theta::Poly(random_poly(&mut rng, 5, &pool(dim)));
            !u1_transform(&l, &theta).minus(&l).is_zero()
        })
        .count();
    checks.push(CheckResult::exact(
        &format!("{} random polynomial theta leave the density invariant", o.random_cases),
        dim,
        nonzero == 0,
        "0 nonzero residuals",
        format!("{nonzero} nonzero residuals"),
    ));

    let invariant = checks.iter().all(CheckResult::passed);
    let payload = SymmetryPayload {
        symmetry: "U1".into(),
        dimension: dim.to_string(),
        representation: format!("{choice:?}").to_lowercase(),
        invariant: Some(invariant),
        residual: residual.to_string(),
        residual_phase: None,
        note: None,
    };
    Ok((checks, payload))
}

fn chiral(o: &SymmetryOptions) -> Result<(Vec<CheckResult>, SymmetryPayload), CliError> {
    let dim = o.dim;
    let rep = match (dim, o.rep) {
        (Dim::D2, Some(Rep::Irreducible)) => {
            let why = "the irreducible 2+1 representation has no gamma^5, so no chiral projectors";
            let check = CheckResult::skip("chiral transform", dim, why);
            let payload = SymmetryPayload {
                symmetry: "chiral".into(),
                dimension: dim.to_string(),
                representation: "standard".into(),
                invariant: None,
                residual: String::new(),
                residual_phase: None,
                note: Some(why.into()),
            };
            return Ok((vec![check], payload));
        }
        (Dim::D2, _) => GammaRep::new(dim, RepChoice::Reducible),
        (_, Some(Rep::Reducible)) => return Err(usage("a reducible representation exists only in 2+1")),
        _ => GammaRep::new(dim, RepChoice::Standard),
    }
    .map_err(usage)?;
    let l = chiral_decompose(&qed_do(&rep, true)?, &rep).map_err(usage)?;
    let theta = |n: &str| Theta::formal(n).map_err(usage);
    let mut checks = Vec::new();

    let (residual, phase) = if o.theta_equal {
        let th = theta("theta")?;
        let out = chiral_transform(&l, &th, &th, GaugeShift::MatchChirality).map_err(usage)?;
        checks.push(CheckResult::exact("equal phases leave the density invariant", dim, out.residual.is_zero(), "0", &out.residual));
        (out.residual, None)
    } else {
        let out = chiral_transform(&l, &theta("theta_R")?, &theta("theta_L")?, GaugeShift::MatchChirality).map_err(usage)?;
        let r = &out.residual;
        checks.push(CheckResult::exact("unequal phases leave a nonzero residual", dim, !r.is_zero(), "nonzero", r));
        let want = dressed_oscillator_residual(&l);
        checks.push(CheckResult::exact(
            "residual is the phase-dressed oscillator terms minus the originals",
            dim,
            *r == want,
            &want,
            r,
        ));
        (out.residual, Some("theta_R - theta_L".to_string()))
    };

    let payload = SymmetryPayload {
        symmetry: "chiral".into(),
        dimension: dim.to_string(),
        representation: format!("{:?}", rep.choice()).to_lowercase(),
        invariant: Some(residual.is_zero()),
        residual: residual.to_string(),
        residual_phase: phase,
        note: None,
    };
    Ok((checks, payload))
}
