//! `cliffa`: exact Clifford algebra computations from JSON problem
//! documents, plus a built-in verification suite.
//!
//! Exit codes: 0 success, 1 error (parse or engine), 2 verification
//! mismatch or suite failure.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cliffa_cli::problem::{parse_form, parse_rational, ProblemError, ProblemSpec};
use cliffa_cli::report::{
    matrix_repr, AlgebraRepr, ClassRepr, EvenPartRepr, ReportDoc, SquareClassRepr,
};
use cliffa_cli::suites;
use cliffa_core::clifford::{classify_quadratic, verify_deg2};
use cliffa_core::csa::{Antiaut, StructAlgebra};
use cliffa_core::error::Error as CoreError;
use cliffa_core::exactmath::Rational;
use cliffa_core::forms::{asymmetry, clifford_form, discriminant};

#[derive(Parser)]
#[command(
    name = "cliffa",
    version,
    about = "exact Clifford algebras of bilinear forms and degree-2 antiautomorphisms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a Clifford algebra from a problem document (or a list).
    Clifford {
        /// Path to a JSON problem document; an array runs in batch mode.
        #[arg(long)]
        spec: PathBuf,
        /// Seed echoed into reports (problems may override).
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Override the engine degree cap.
        #[arg(long)]
        degree_cap: Option<usize>,
        /// Override the engine slack cap.
        #[arg(long)]
        slack: Option<usize>,
        /// Compact JSON output (default).
        #[arg(long, conflicts_with = "pretty")]
        json: bool,
        /// Pretty-printed JSON output.
        #[arg(long)]
        pretty: bool,
    },
    /// Run the built-in verification suites on seeded random instances.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Instances per suite.
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long, conflicts_with = "pretty")]
        json: bool,
        #[arg(long)]
        pretty: bool,
        /// Corrupt one structure-constant table first (negative control for
        /// the associativity suite).
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Clifford {
            spec,
            seed,
            degree_cap,
            slack,
            pretty,
            ..
        } => run_clifford(&spec, seed, degree_cap, slack, pretty),
        Command::Selftest {
            seed,
            count,
            pretty,
            inject_fault,
            ..
        } => run_selftest(seed, count, pretty, inject_fault),
    }
}

fn run_clifford(
    path: &PathBuf,
    seed: u64,
    degree_cap: Option<usize>,
    slack: Option<usize>,
    pretty: bool,
) -> ExitCode {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return ExitCode::from(1);
        }
    };
    let value: serde_json::Value = match serde_json::from_str(&text) {
        Ok(v) => v,
        Err(e) => {
            eprintln!(
                "error: {} is not valid JSON (line {}, column {}): {e}",
                path.display(),
                e.line(),
                e.column()
            );
            return ExitCode::from(1);
        }
    };
    let (batch, specs) = match value {
        serde_json::Value::Array(items) => (true, items),
        other => (false, vec![other]),
    };
    let mut reports = Vec::new();
    let mut any_mismatch = false;
    for (idx, item) in specs.into_iter().enumerate() {
        let spec: ProblemSpec = match serde_json::from_value(item) {
            Ok(s) => s,
            Err(e) => {
                eprintln!("error: problem {idx}: {e}");
                return ExitCode::from(1);
            }
        };
        match run_problem(&spec, seed, degree_cap, slack) {
            Ok(report) => {
                if report.matches == Some(false) {
                    any_mismatch = true;
                }
                reports.push(report);
            }
            Err(e) => {
                eprintln!("error: problem {idx}: {e}");
                return ExitCode::from(1);
            }
        }
    }
    let rendered = if batch {
        to_json(&reports, pretty)
    } else {
        to_json(&reports[0], pretty)
    };
    println!("{rendered}");
    if any_mismatch {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    }
}

fn to_json<T: serde::Serialize>(value: &T, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(value).expect("reports serialize")
    } else {
        serde_json::to_string(value).expect("reports serialize")
    }
}

#[derive(Debug)]
enum RunError {
    Problem(ProblemError),
    Core(CoreError),
}

impl std::fmt::Display for RunError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RunError::Problem(e) => write!(f, "{e}"),
            RunError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<ProblemError> for RunError {
    fn from(e: ProblemError) -> Self {
        RunError::Problem(e)
    }
}

impl From<CoreError> for RunError {
    fn from(e: CoreError) -> Self {
        RunError::Core(e)
    }
}

fn run_problem(
    spec: &ProblemSpec,
    cli_seed: u64,
    degree_cap: Option<usize>,
    slack: Option<usize>,
) -> Result<ReportDoc, RunError> {
    let seed = spec.seed().unwrap_or(cli_seed);
    match spec {
        ProblemSpec::Bilinear { matrix, .. } => {
            let form = parse_form(matrix)?;
            let cfg = spec.engine_config(form.dim(), degree_cap, slack);
            let algebra = clifford_form(&form, &cfg)?;
            let even = algebra.even_part()?;
            let letter_names: Vec<String> = (0..form.dim()).map(|i| format!("e{i}")).collect();
            let even_classification = match classify_quadratic(&even) {
                Ok(c) => Some(ClassRepr::from_class(&c)),
                Err(CoreError::WrongDimension { .. }) => None,
                Err(e) => return Err(e.into()),
            };
            let generator_minpoly = (even.dim() == 2).then(|| {
                let unit = even.unit_index().expect("unital");
                even.minpoly_vec(&even.basis_vector(1 - unit)).to_string()
            });
            Ok(ReportDoc {
                input: spec.clone(),
                seed,
                asymmetry_matrix: Some(matrix_repr(asymmetry(&form).matrix())),
                asymmetry_coords: None,
                disc: SquareClassRepr::from_class(&discriminant(&form)?),
                clifford: AlgebraRepr::from_algebra(&algebra, &letter_names),
                classification: None,
                predicted: None,
                matches: None,
                even_part: Some(EvenPartRepr {
                    dim: even.dim(),
                    basis: even
                        .basis()
                        .iter()
                        .map(|w| w.label(&letter_names))
                        .collect(),
                    structure_constants: (0..even.dim())
                        .map(|i| {
                            (0..even.dim())
                                .map(|j| {
                                    even.structure_constant(i, j)
                                        .iter()
                                        .map(Rational::to_string)
                                        .collect()
                                })
                                .collect()
                        })
                        .collect(),
                    classification: even_classification,
                    generator_minpoly,
                }),
            })
        }
        ProblemSpec::Quaternion { alpha, beta, u, .. } => {
            let algebra = StructAlgebra::quaternion(parse_rational(alpha)?, parse_rational(beta)?)?;
            let coords: Vec<Rational> = u
                .iter()
                .map(|s| parse_rational(s))
                .collect::<Result<_, _>>()?;
            let antiaut = Antiaut::from_u(algebra.clone(), &coords)?;
            let cfg = spec.engine_config(4, degree_cap, slack);
            let report = verify_deg2(&antiaut, &cfg, "quaternion problem")?;
            let letter_names = algebra.labels().to_vec();
            Ok(ReportDoc::from_antiaut_report(
                spec.clone(),
                seed,
                &report,
                &letter_names,
                None,
            ))
        }
        ProblemSpec::MatrixAdjoint { matrix, .. } => {
            let form = parse_form(matrix)?;
            let antiaut = Antiaut::adjoint(&form)?;
            let cfg = spec.engine_config(4, degree_cap, slack);
            let report = verify_deg2(&antiaut, &cfg, "matrix adjoint problem")?;
            let letter_names = antiaut.algebra().labels().to_vec();
            Ok(ReportDoc::from_antiaut_report(
                spec.clone(),
                seed,
                &report,
                &letter_names,
                Some(asymmetry(&form).matrix()),
            ))
        }
    }
}

fn run_selftest(seed: u64, count: usize, pretty: bool, inject_fault: bool) -> ExitCode {
    let results = suites::run_all(seed, count, inject_fault);
    #[derive(serde::Serialize)]
    struct Summary<'a> {
        seed: u64,
        count: usize,
        suites: &'a [suites::SuiteResult],
        ok: bool,
    }
    let ok = suites::all_passed(&results);
    let summary = Summary {
        seed,
        count,
        suites: &results,
        ok,
    };
    println!("{}", to_json(&summary, pretty));
    for r in &results {
        eprintln!("{:<24} pass {:>4}  fail {:>4}", r.name, r.pass, r.fail);
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}
