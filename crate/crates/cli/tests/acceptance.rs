//! Acceptance run: one pass/fail line per criterion, nonzero exit if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use dirosc_cli::clifford::{clifford_checks, representations};
use dirosc_cli::gauge::gauge_checks;
use dirosc_cli::random::random_poly;
use dirosc_cli::symmetry::{symmetry_checks, Kind, SymmetryOptions};
use dirosc_cli::{CheckResult, Status};
use dirosc_core::clifford::{make_rep, GammaRep, RepChoice, SpinorMatrix};
use dirosc_core::gaugefields::{covariant_field_tensor, fields_from_potential, gauge_transform, FieldTensor, GaugeFn, Potential};
use dirosc_core::lagrangian::*;
use dirosc_core::minkowski::Dim;
use dirosc_core::symbols::{coord, i, poly, var, zero};
use dirosc_spectra::{
    analyze, discretize_grid, nonrel_limit_check, oscillator_basis, oscillator_operator, Coupling, Methods,
    NumericParams, SpectraError,
};

struct Outcome {
    pass: bool,
    details: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { pass: true, details: Vec::new() }
    }

    fn record(&mut self, ok: bool, what: impl Into<String>) {
        let what = what.into();
        self.pass &= ok;
        self.details.push(format!("{} {what}", if ok { "ok  " } else { "FAIL" }));
    }

    fn checks(&mut self, checks: &[CheckResult]) {
        for c in checks {
            let ok = c.status != Status::Fail;
            let mut line = format!("[{}] {}", c.dimension, c.name);
            match c.status {
                Status::Fail => line.push_str(&format!(": expected {}, got {}", c.expected, c.actual)),
                Status::Skip => line.push_str(&format!(" (skipped: {})", c.actual)),
                Status::Pass => {}
            }
            self.record(ok, line);
        }
    }

    fn within(&mut self, started: Instant, limit: Duration) {
        let took = started.elapsed();
        self.record(took < limit, format!("runtime {:.2?} < {:?}", took, limit));
    }
}

fn gauge_chain() -> Outcome {
    let t = Instant::now();
    let mut o = Outcome::new();
    for dim in [Dim::D2, Dim::D1] {
        o.checks(&gauge_checks(dim).expect("supported dimension"));
    }
    o.within(t, Duration::from_secs(1));
    o
}

fn field_invariance() -> Outcome {
    let t = Instant::now();
    let mut o = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for dim in [Dim::D1, Dim::D2, Dim::D3] {
        let pool: Vec<&str> = match dim {
            Dim::D1 => vec!["t", "x", "rho", "zeta"],
            Dim::D2 => vec!["t", "x", "y", "rho", "zeta"],
            Dim::D3 => vec!["t", "x", "y", "z", "rho"],
        };
        let mut same = 0;
        for _ in 0..200 {
            let comps = (0..dim.spacetime()).map(|_| random_poly(&mut rng, 4, &pool)).collect();
            let a = Potential::from_components(dim, comps).unwrap();
            let g = GaugeFn { dim, lambda: random_poly(&mut rng, 4, &pool) };
            let b = gauge_transform(&a, &g).unwrap();
            same += usize::from(fields_from_potential(&a) == fields_from_potential(&b));
        }
        o.record(same == 200, format!("[{dim}] {same}/200 random (A, Lambda) pairs keep (E, B)"));
    }
    o.within(t, Duration::from_secs(10));
    o
}

fn clifford_suite() -> Outcome {
    let t = Instant::now();
    let mut o = Outcome::new();
    for dim in [Dim::D1, Dim::D2, Dim::D3] {
        for rep in representations(dim).unwrap() {
            o.checks(&clifford_checks(&rep));
        }
    }
    o.within(t, Duration::from_secs(1));
    o
}

/// Literal 2x2 gammas, independent of the library representation.
fn literal_gammas(dim: Dim) -> Vec<SpinorMatrix> {
    let m = |v: &[(i64, i64)]| SpinorMatrix::from_ints(2, v);
    let g = vec![
        m(&[(1, 0), (0, 0), (0, 0), (-1, 0)]),
        m(&[(0, 0), (0, 1), (0, 1), (0, 0)]),
        m(&[(0, 0), (1, 0), (-1, 0), (0, 0)]),
    ];
    g.into_iter().take(dim.spacetime()).collect()
}

/// sum over every (mu, nu) of (i/2)[g^mu, g^nu]_{rc} F_{mu nu}, entry by entry.
fn brute_force_contraction(dim: Dim, f: &FieldTensor) -> SpinorMatrix {
    let g = literal_gammas(dim);
    let mut out = vec![zero(); 4];
    for mu in 0..g.len() {
        for nu in 0..g.len() {
            for r in 0..2 {
                for c in 0..2 {
                    let mut comm = zero();
                    for k in 0..2 {
                        comm = comm + g[mu].get(r, k) * g[nu].get(k, c) - g[nu].get(r, k) * g[mu].get(k, c);
                    }
                    out[2 * r + c] = &out[2 * r + c] + &(poly("1/2i") * comm * f.get(mu, nu));
                }
            }
        }
    }
    SpinorMatrix::from_entries(2, out)
}

fn interaction_identity() -> Outcome {
    let mut o = Outcome::new();
    for (c, dim) in [("rho", Dim::D2), ("zeta", Dim::D1)] {
        let rep = make_rep(dim, false).unwrap();
        let f = covariant_field_tensor(&var(c), dim);
        let got = interaction_contraction(&rep, &f, &poly("1")).unwrap();
        let oracle = brute_force_contraction(dim, &f);
        let g = literal_gammas(dim);
        let mut alpha_x = rep.zero();
        for (j, x) in ["x", "y"].iter().take(dim.spatial()).enumerate() {
            alpha_x = &alpha_x + &(&g[0] * &g[j + 1]).scale(&poly(x));
        }
        let closed = alpha_x.scale(&(poly("2i") * var(c)));
        o.record(got == oracle, format!("[{dim}] contraction equals the index-sum oracle"));
        o.record(got == closed, format!("[{dim}] contraction equals 2i {c} alpha_j x_j"));
    }
    o
}

fn hamiltonian_extraction() -> Outcome {
    let mut o = Outcome::new();
    for dim in [Dim::D2, Dim::D1] {
        let rep = make_rep(dim, false).unwrap();
        let l = build_do_lagrangian(&rep, BuildOptions { massless: false, form: OscillatorForm::Tensor }).unwrap();
        let h = hamiltonian_extract(&l).unwrap();
        // alpha_j (p_j - i m omega beta x_j) + beta m, assembled by hand
        let beta = rep.gamma(0).unwrap().clone();
        let alphas: Vec<SpinorMatrix> = (1..=dim.spatial()).map(|j| &beta * rep.gamma(j).unwrap()).collect();
        let mut v = beta.scale(&var("m"));
        for (j, c) in dim.spatial_coords().enumerate() {
            v = &v - &(&alphas[j] * &beta).scale(&(i() * var("m") * var("omega") * coord(c)));
        }
        o.record(h.momentum == alphas, format!("[{dim}] momentum coefficients are alpha_j"));
        o.record(h.potential == v, format!("[{dim}] potential is beta m - i m omega alpha_j beta x_j: got {}", h.potential));
        let (col, row) = euler_lagrange(&l).unwrap();
        o.record(are_adjoint(&col, &row), format!("[{dim}] psi and psi^dag equations are formal adjoints"));
    }
    o
}

fn u1_invariance() -> Outcome {
    let mut o = Outcome::new();
    for dim in [Dim::D2, Dim::D1] {
        let opts = SymmetryOptions { kind: Kind::U1, dim, theta_equal: false, rep: None, random_cases: 50, seed: 6 };
        let (checks, payload) = symmetry_checks(&opts).unwrap();
        o.checks(&checks);
        o.record(payload.invariant == Some(true), format!("[{dim}] invariant: {:?}", payload.invariant));
    }
    o
}

fn chiral_breaking() -> Outcome {
    let mut o = Outcome::new();
    for dim in [Dim::D2, Dim::D1] {
        for theta_equal in [false, true] {
            let opts = SymmetryOptions { kind: Kind::Chiral, dim, theta_equal, rep: None, random_cases: 0, seed: 0 };
            let (checks, payload) = symmetry_checks(&opts).unwrap();
            o.checks(&checks);
            let want = Some(theta_equal);
            o.record(payload.invariant == want, format!("[{dim}] theta_equal = {theta_equal}: invariant {:?}", payload.invariant));
        }
    }
    o
}

fn spectrum_cross_validation() -> Outcome {
    let t = Instant::now();
    let mut o = Outcome::new();
    let mut p = NumericParams::new(Dim::D1, 1.0, 0.1);
    p.grid_points = 4096;
    p.basis_size = 200;
    p.k = 10;
    match analyze(Dim::D1, &p, Methods::Both, 0) {
        Ok(a) => {
            for c in &a.report.checks {
                o.record(c.pass, format!("[1+1] {} = {:.3e} (tol {:e})", c.name, c.value, c.tolerance));
            }
        }
        Err(e) => o.record(false, format!("[1+1] analysis failed: {e}")),
    }
    let mut p = NumericParams::new(Dim::D2, 1.0, 0.1);
    p.grid_points = 128;
    p.basis_size = 40;
    p.k = 6;
    match analyze(Dim::D2, &p, Methods::Both, 0) {
        Ok(a) => {
            for c in &a.report.checks {
                o.record(c.pass, format!("[2+1] {} = {:.3e} (tol {:e})", c.name, c.value, c.tolerance));
            }
        }
        Err(e) => o.record(false, format!("[2+1] analysis failed: {e}")),
    }
    o.within(t, Duration::from_secs(120));
    o
}

fn nonrelativistic_limit() -> Outcome {
    let mut o = Outcome::new();
    match nonrel_limit_check(&NumericParams::new(Dim::D1, 1.0, 1e-3)) {
        Ok(r) => {
            for (n, s) in r.spacing_ratios.iter().enumerate() {
                o.record((s - 1.0).abs() <= 5e-3, format!("[1+1] (E_{} - E_{n}) / omega = {s:.6}", n + 1));
            }
        }
        Err(e) => o.record(false, format!("[1+1] {e}")),
    }
    o
}

fn negative_controls() -> Outcome {
    let mut o = Outcome::new();
    for dim in [Dim::D1, Dim::D2] {
        let mut p = NumericParams::new(dim, 1.0, 0.1);
        p.grid_points = 64;
        p.basis_size = 16;
        for (coupling, what) in [
            (Coupling::DropIBeta, "the i beta factor"),
            (Coupling::DropI, "the factor i"),
            (Coupling::DropBeta, "the factor beta"),
        ] {
            let h = oscillator_operator(dim, coupling).unwrap();
            let grid = matches!(discretize_grid(&h, &p), Err(SpectraError::NotHermitian(_)));
            let basis = matches!(oscillator_basis(&h, &p), Err(SpectraError::NotHermitian(_)));
            o.record(grid && basis, format!("[{dim}] omitting {what}: grid rejected {grid}, basis rejected {basis}"));
        }
    }
    let rep = GammaRep::new(Dim::D2, RepChoice::Reducible).unwrap();
    let l = chiral_decompose(&build_do_lagrangian(&rep, BuildOptions { massless: true, form: OscillatorForm::Qed }).unwrap(), &rep).unwrap();
    let out = chiral_transform(&l, &Theta::formal("theta_R").unwrap(), &Theta::formal("theta_L").unwrap(), GaugeShift::MatchChirality).unwrap();
    o.record(!out.residual.is_zero(), "[2+1] theta_R != theta_L gives invariant: false");
    let opts = SymmetryOptions { kind: Kind::Chiral, dim: Dim::D2, theta_equal: false, rep: None, random_cases: 0, seed: 0 };
    let (_, payload) = symmetry_checks(&opts).unwrap();
    o.record(payload.invariant == Some(false), format!("[2+1] symmetry report invariant: {:?}", payload.invariant));
    o
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("gauge-chain reproduction", gauge_chain),
        ("gauge invariance of fields", field_invariance),
        ("Clifford suite", clifford_suite),
        ("interaction identity", interaction_identity),
        ("Hamiltonian extraction", hamiltonian_extraction),
        ("U(1) invariance", u1_invariance),
        ("chiral breaking", chiral_breaking),
        ("spectrum cross-validation", spectrum_cross_validation),
        ("nonrelativistic limit", nonrelativistic_limit),
        ("negative controls", negative_controls),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        for d in &o.details {
            println!("      {d}");
        }
        println!("AC{} {name}: {}", n + 1, if o.pass { "PASS" } else { "FAIL" });
        failed += usize::from(!o.pass);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
