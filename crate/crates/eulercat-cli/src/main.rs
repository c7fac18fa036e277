use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use eulercat::catcore::check_adjunction_matrices;
use eulercat::io;
use eulercat::laws::{run_all, LawRunConfig};
use eulercat::ratmat::RatMatrix;
use eulercat::{constructions, weights};

/// Exact Euler characteristics of finite categories over the rationals.
///
/// Exit codes: 0 ok, 1 input error, 2 semantic validation failure,
/// 3 law or expectation failure.
#[derive(Parser)]
#[command(name = "eulercat", version)]
struct Cli {
    /// Pretty-print JSON output (default is compact JSON).
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Euler measure and (co)weighting report of a category file.
    Chi { file: PathBuf },
    /// Exact Moore-Penrose pseudoinverse of a square matrix file.
    Pinv { file: PathBuf },
    /// Weighting of a square matrix file, if one exists.
    Weighting { file: PathBuf },
    /// Coweighting of a square matrix file, if one exists.
    Coweighting { file: PathBuf },
    /// Product of two category files.
    Product { a: PathBuf, b: PathBuf },
    /// Disjoint union of two category files.
    Coproduct { a: PathBuf, b: PathBuf },
    /// Grothendieck construction of a diagram file: total adjacency, actual
    /// and predicted chi, and whether the inclusion-exclusion theorem applies.
    Groth { file: PathBuf },
    /// Validate a category file against the category axioms.
    Check { file: PathBuf },
    /// Check the adjunction matrix identity [A][R] = [L]'[B] for L: A -> B
    /// and R: B -> A given as functor files.
    Adjoint { l: PathBuf, r: PathBuf },
    /// Run the randomized law-verification suites.
    VerifyLaws(VerifyArgs),
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 50)]
    count: usize,
    #[arg(long, default_value_t = 4)]
    max_objects: usize,
    #[arg(long, default_value_t = 4)]
    max_hom: usize,
}

const EXIT_INPUT: u8 = 1;
const EXIT_SEMANTIC: u8 = 2;
const EXIT_LAW: u8 = 3;

struct Failure {
    code: u8,
    message: String,
}

fn input_err(e: impl std::fmt::Display) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: e.to_string(),
    }
}

fn semantic_err(e: impl std::fmt::Display) -> Failure {
    Failure {
        code: EXIT_SEMANTIC,
        message: e.to_string(),
    }
}

fn print_json(pretty: bool, v: &Value) {
    if pretty {
        println!("{}", serde_json::to_string_pretty(v).unwrap());
    } else {
        println!("{v}");
    }
}

fn load_square_matrix(path: &PathBuf) -> Result<RatMatrix, Failure> {
    let m = io::load_matrix(path).map_err(input_err)?;
    if !m.is_square() {
        return Err(input_err(format!(
            "matrix is {}x{}, expected square",
            m.rows(),
            m.cols()
        )));
    }
    Ok(m)
}

fn load_valid_category(path: &PathBuf) -> Result<eulercat::FinCategory, Failure> {
    let c = io::load_category(path).map_err(input_err)?;
    let report = c.validate();
    if !report.is_valid() {
        return Err(semantic_err(format!("category axioms violated:\n{report}")));
    }
    Ok(c)
}

fn fraction_row(m: &RatMatrix) -> Vec<String> {
    m.entries().iter().map(io::rational_to_string).collect()
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Chi { file } => {
            let c = load_valid_category(file)?;
            let report = weights::chi_report(&c).map_err(semantic_err)?;
            print_json(cli.pretty, &serde_json::to_value(&report).unwrap());
        }
        Command::Pinv { file } => {
            let m = load_square_matrix(file)?;
            let p = m.pinv().map_err(input_err)?;
            print_json(cli.pretty, &io::matrix_to_json(&p));
        }
        Command::Weighting { file } => {
            let m = load_square_matrix(file)?;
            let w = weights::weighting(&m);
            print_json(cli.pretty, &json!({ "weighting": w.map(|w| fraction_row(&w)) }));
        }
        Command::Coweighting { file } => {
            let m = load_square_matrix(file)?;
            let v = weights::coweighting(&m);
            print_json(cli.pretty, &json!({ "coweighting": v.map(|v| fraction_row(&v)) }));
        }
        Command::Product { a, b } => {
            let a = load_valid_category(a)?;
            let b = load_valid_category(b)?;
            let p = constructions::product(&a, &b).map_err(semantic_err)?;
            print_json(cli.pretty, &io::category_to_json(&p));
        }
        Command::Coproduct { a, b } => {
            let a = load_valid_category(a)?;
            let b = load_valid_category(b)?;
            let c = constructions::coproduct(&a, &b).map_err(semantic_err)?;
            print_json(cli.pretty, &io::category_to_json(&c));
        }
        Command::Groth { file } => {
            let d = io::load_diagram(file).map_err(input_err)?;
            d.validate().map_err(semantic_err)?;
            let total = constructions::grothendieck(&d).map_err(semantic_err)?;
            let report = constructions::chi_inclusion_exclusion(&d).map_err(semantic_err)?;
            print_json(
                cli.pretty,
                &json!({
                    "adjacency": io::matrix_to_json(&total.total.adjacency().unwrap()),
                    "actual": io::rational_to_string(&report.actual),
                    "predicted": io::rational_to_string(&report.predicted),
                    "applies": report.applies,
                }),
            );
        }
        Command::Check { file } => {
            let c = io::load_category(file).map_err(input_err)?;
            let report = c.validate();
            print_json(
                cli.pretty,
                &json!({ "valid": report.is_valid(), "violations": report.violations }),
            );
            if !report.is_valid() {
                return Err(Failure {
                    code: EXIT_SEMANTIC,
                    message: "category axioms violated".into(),
                });
            }
        }
        Command::Adjoint { l, r } => {
            let (a, b, l_data) = io::load_functor(l).map_err(input_err)?;
            let (b2, a2, r_data) = io::load_functor(r).map_err(input_err)?;
            if a != a2 || b != b2 {
                return Err(input_err(
                    "functor files do not describe opposite directions between the same categories",
                ));
            }
            let compatible =
                check_adjunction_matrices(&a, &b, &l_data, &r_data).map_err(semantic_err)?;
            print_json(cli.pretty, &json!({ "adjoint_compatible": compatible }));
        }
        Command::VerifyLaws(args) => {
            let cfg = LawRunConfig {
                seed: args.seed,
                count: args.count,
                max_objects: args.max_objects,
                max_hom: args.max_hom,
            };
            let summaries = run_all(&cfg).map_err(input_err)?;
            let mut any_failed = false;
            for s in &summaries {
                println!(
                    "{}: {} passed, {} failed{}",
                    s.name,
                    s.passed,
                    s.failed,
                    match &s.first_failure {
                        Some(w) => format!(", first witness: {w}"),
                        None => String::new(),
                    }
                );
                any_failed |= s.failed > 0;
            }
            if any_failed {
                return Err(Failure {
                    code: EXIT_LAW,
                    message: "law verification failed".into(),
                });
            }
            println!("all laws passed (seed={}, count={})", cfg.seed, cfg.count);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
