use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use dirosc_cli::clifford::{clifford_checks, representations};
use dirosc_cli::gauge::gauge_checks;
use dirosc_cli::spectrum::{spectrum_run, write_spectrum_csv, SpectrumOptions};
use dirosc_cli::symmetry::{symmetry_checks, Kind, Rep, SymmetryOptions};
use dirosc_cli::{CliError, ReportEnvelope, Status};
use dirosc_core::minkowski::Dim;
use dirosc_spectra::Methods;

#[derive(Parser)]
#[command(name = "dirosc", version, about = "Verify Dirac oscillator derivations and compute spectra")]
struct Cli {
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Seed for randomized checks and Krylov probes.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Override the numeric tolerance where a command has one.
    #[arg(long, global = true, value_name = "X")]
    tol: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fields, gauge transform, covariant potential and tensor chain.
    VerifyGauge {
        #[arg(long, value_parser = parse_dim)]
        dim: Dim,
    },
    /// Clifford algebra, Hermiticity, sigma and projector identities.
    VerifyClifford {
        /// All dimensions when omitted.
        #[arg(long, value_parser = parse_dim)]
        dim: Option<Dim>,
    },
    /// U(1) invariance or chiral breaking of the QED plus oscillator density.
    Symmetry {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, value_parser = parse_dim, default_value = "2+1")]
        dim: Dim,
        /// Use theta_R = theta_L.
        #[arg(long)]
        theta_equal: bool,
        #[arg(long, value_enum)]
        rep: Option<RepArg>,
        /// Random polynomial phases for the U(1) run.
        #[arg(long, default_value_t = 50)]
        cases: usize,
    },
    /// Eigenvalues of the oscillator Hamiltonian with convergence checks.
    Spectrum {
        #[arg(long, value_parser = parse_dim)]
        dim: Dim,
        #[arg(long)]
        m: f64,
        #[arg(long)]
        omega: f64,
        #[arg(long, default_value_t = 10)]
        k: usize,
        #[arg(long, value_enum, default_value = "both")]
        method: MethodArg,
        /// Grid points per coordinate.
        #[arg(long)]
        n: Option<usize>,
        /// Oscillator states per coordinate.
        #[arg(long)]
        basis_size: Option<usize>,
        /// Half-width L of the box.
        #[arg(long)]
        half_width: Option<f64>,
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    U1,
    Chiral,
}

#[derive(Clone, Copy, ValueEnum)]
enum RepArg {
    Irreducible,
    Reducible,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Grid,
    Basis,
    Both,
}

fn parse_dim(s: &str) -> Result<Dim, String> {
    s.parse().map_err(|e: dirosc_core::minkowski::MinkowskiError| e.to_string())
}

fn run(cli: Cli) -> Result<ReportEnvelope, CliError> {
    let seed = cli.seed;
    let env = match cli.command {
        Command::VerifyGauge { dim } => ReportEnvelope::new(&format!("verify-gauge --dim {dim}"), seed, gauge_checks(dim)?),
        Command::VerifyClifford { dim } => {
            let dims = dim.map_or_else(|| vec![Dim::D1, Dim::D2, Dim::D3], |d| vec![d]);
            let mut checks = Vec::new();
            for d in dims {
                for rep in representations(d)? {
                    checks.extend(clifford_checks(&rep));
                }
            }
            let cmd = dim.map_or("verify-clifford".to_string(), |d| format!("verify-clifford --dim {d}"));
            ReportEnvelope::new(&cmd, seed, checks)
        }
        Command::Symmetry { kind, dim, theta_equal, rep, cases } => {
            let o = SymmetryOptions {
                kind: match kind {
                    KindArg::U1 => Kind::U1,
                    KindArg::Chiral => Kind::Chiral,
                },
                dim,
                theta_equal,
                rep: rep.map(|r| match r {
                    RepArg::Irreducible => Rep::Irreducible,
                    RepArg::Reducible => Rep::Reducible,
                }),
                random_cases: cases,
                seed,
            };
            let (checks, payload) = symmetry_checks(&o)?;
            let kind = if o.kind == Kind::U1 { "u1" } else { "chiral" };
            let flag = if theta_equal { " --theta-equal" } else { "" };
            ReportEnvelope::new(&format!("symmetry --kind {kind} --dim {dim}{flag}"), seed, checks).with_payload("symmetry", payload)?
        }
        Command::Spectrum { dim, m, omega, k, method, n, basis_size, half_width, csv } => {
            if k == 0 {
                return Err(CliError::Usage("--k must be at least 1".into()));
            }
            let methods = match method {
                MethodArg::Grid => Methods::Grid,
                MethodArg::Basis => Methods::Basis,
                MethodArg::Both => Methods::Both,
            };
            let o = SpectrumOptions { dim, m, omega, k, methods, grid_points: n, basis_size, half_width, tol: cli.tol, seed };
            let (checks, analysis) = spectrum_run(&o)?;
            if let Some(path) = csv {
                write_spectrum_csv(BufWriter::new(File::create(path)?), &analysis, k)?;
            }
            let cmd = format!("spectrum --dim {dim} --m {m} --omega {omega} --k {k}");
            ReportEnvelope::new(&cmd, seed, checks).with_payload("convergence", &analysis.report)?
        }
    };
    Ok(env)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json.clone();
    let env = match run(cli) {
        Ok(env) => env,
        Err(e) => {
            eprintln!("dirosc: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let text = match env.to_json() {
        Ok(t) => t,
        Err(e) => {
            eprintln!("dirosc: {e}");
            return ExitCode::from(1);
        }
    };
    match json {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, text + "\n") {
                eprintln!("dirosc: {}: {e}", path.display());
                return ExitCode::from(1);
            }
            for c in &env.checks {
                let s = match c.status {
                    Status::Pass => "pass",
                    Status::Fail => "FAIL",
                    Status::Skip => "skip",
                };
                println!("{s:4}  [{}] {}", c.dimension, c.name);
            }
        }
        None => println!("{text}"),
    }
    ExitCode::from(env.exit_code() as u8)
}
