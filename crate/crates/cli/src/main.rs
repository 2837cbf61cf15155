use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dunkl_core::birep::rep_summary;
use dunkl_core::ck::monogenic_basis;
use dunkl_core::closedform::{overlap_matrix, psi_wavefunctions, upsilon_basis, MomentTable, NormalizedWavefunction};
use dunkl_core::exactnum::{format_rational, Params};
use dunkl_core::poly::MultiIndex;
use dunkl_core::suite::{parse_params, run_all, sample_params, Perturbation, SuiteConfig};
use serde::Serialize;

/// Exact Dirac–Dunkl and Bannai–Ito computations on R^3.
#[derive(Parser, Debug)]
#[command(name = "dunkl", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Multiplicities as `m1,m2,m3`, each `p/q` or an integer.
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<String>,

    /// Write JSON here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run every identity suite and write a consolidated report.
    Verify {
        #[arg(short, long, default_value_t = 4)]
        degree: u32,
        /// Seed for the μ sweep used when --mu is absent.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Deliberately break one ingredient to show the checks can fail.
        #[arg(long)]
        perturb: Option<Perturbation>,
        #[command(flatten)]
        common: Common,
    },
    /// Cauchy–Kovalevskaia monogenic basis of degree N.
    Basis {
        #[arg(long = "N")]
        n: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Normalized wavefunctions of degree N.
    Wavefunctions {
        #[arg(long = "N")]
        n: u32,
        #[arg(long, value_enum, default_value_t = BasisKind::Psi)]
        basis: BasisKind,
        #[command(flatten)]
        common: Common,
    },
    /// Finite-dimensional Bannai–Ito representation of degree N.
    Rep {
        #[arg(long = "N")]
        n: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Overlaps between the Ψ and Υ bases of degree N.
    Overlaps {
        #[arg(long = "N")]
        n: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Sphere moments of all monomials up to the given degree.
    Moments {
        #[arg(short, long, default_value_t = 4)]
        degree: u32,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum BasisKind {
    Psi,
    Upsilon,
}

#[derive(Serialize)]
struct Wavefunctions {
    basis: BasisKind,
    #[serde(rename = "N")]
    n: u32,
    mu: Params,
    elements: Vec<NormalizedWavefunction>,
}

#[derive(Serialize)]
struct Moment {
    exp: [u32; 3],
    value: String,
}

#[derive(Serialize)]
struct Moments {
    mu: Params,
    max_degree: u32,
    moments: Vec<Moment>,
}

fn single_params(common: &Common) -> Result<Params, String> {
    match &common.mu {
        Some(text) => parse_params(text).map_err(|e| e.to_string()),
        None => Ok(Params::zero()),
    }
}

fn emit(value: &impl Serialize, out: &Option<PathBuf>) -> Result<(), String> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    text.push('\n');
    match out {
        Some(path) => fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

enum Failure {
    Usage(String),
    Identity,
}

fn run(cli: Cli) -> Result<(), Failure> {
    let usage = Failure::Usage;
    match cli.command {
        Command::Verify { degree, seed, perturb, common } => {
            let samples = match &common.mu {
                Some(text) => vec![parse_params(text).map_err(|e| usage(e.to_string()))?],
                None => sample_params(seed, 5),
            };
            let report = run_all(&samples, &SuiteConfig::with_degree(degree, seed), perturb);
            emit(&report, &common.out).map_err(usage)?;
            let failures: Vec<_> = report
                .suites
                .iter()
                .flat_map(|s| s.checks.iter().filter(|c| !c.passed()).map(move |c| (s, c)))
                .collect();
            for (suite, check) in &failures {
                eprintln!("{} (μ = {}): {check}", suite.suite.name(), suite.mu.to_strings().join(","));
            }
            if failures.is_empty() {
                Ok(())
            } else {
                Err(Failure::Identity)
            }
        }
        Command::Basis { n, common } => {
            let params = single_params(&common).map_err(usage)?;
            emit(&monogenic_basis(n, &params), &common.out).map_err(usage)
        }
        Command::Wavefunctions { n, basis, common } => {
            let params = single_params(&common).map_err(usage)?;
            let elements = match basis {
                BasisKind::Psi => psi_wavefunctions(n, &params),
                BasisKind::Upsilon => upsilon_basis(n, &params),
            };
            emit(&Wavefunctions { basis, n, mu: params, elements }, &common.out).map_err(usage)
        }
        Command::Rep { n, common } => {
            let params = single_params(&common).map_err(usage)?;
            emit(&rep_summary(n, &params), &common.out).map_err(usage)
        }
        Command::Overlaps { n, common } => {
            let params = single_params(&common).map_err(usage)?;
            emit(&overlap_matrix(n, &params), &common.out).map_err(usage)
        }
        Command::Moments { degree, common } => {
            let params = single_params(&common).map_err(usage)?;
            let table = MomentTable::new(&params);
            let moments = (0..=degree)
                .flat_map(MultiIndex::of_degree)
                .map(|e| Moment { exp: e.0, value: format_rational(&table.monomial(&e)) })
                .collect();
            emit(&Moments { mu: params, max_degree: degree, moments }, &common.out).map_err(usage)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Identity) => ExitCode::from(1),
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
