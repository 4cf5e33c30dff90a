//! Command-line driver for the resummation toolkit: generates exact
//! perturbation-series coefficients into cache files and turns them
//! into summation tables, Stieltjes diagnostics, and coefficient
//! predictions.
//!
//! Exit codes: 0 success; 1 general errors (arguments, IO, corrupt
//! cache); 2 insufficient data; 3 numeric degeneracy.

use std::path::PathBuf;

use clap::{Parser, Subcommand};

mod cache;
mod commands;
mod config;
mod emit;
mod error;

use commands::{CouplingArg, PredictMode};
use config::{OutputFormat, RunConfig};
use error::CliError;

#[derive(Parser)]
#[command(
    name = "padesum",
    version,
    about = "Arbitrary-precision resummation of divergent perturbation series"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate exact series coefficients into a cache file (idempotent:
    /// an up-to-date cache is verified, not rewritten).
    Generate {
        /// Oscillator: `pt-cubic` or `quartic`.
        #[arg(long)]
        hamiltonian: String,
        /// Number of coefficients to generate.
        #[arg(long)]
        order: usize,
        /// Cache file to write or verify.
        #[arg(long)]
        cache: PathBuf,
    },
    /// Tabulate partial sums beside staircase approximants.
    Sum {
        /// Cache file produced by `generate`.
        #[arg(long)]
        cache: PathBuf,
        /// Cubic-oscillator coupling `p/q` (series variable is its square).
        #[arg(long, conflicts_with = "beta")]
        lambda: Option<String>,
        /// Quartic-oscillator coupling `p/q` (series variable itself).
        #[arg(long)]
        beta: Option<String>,
        /// Decimal digits carried internally (minimum 50).
        #[arg(long, default_value_t = 600)]
        precision: u32,
        /// Rows to print, e.g. `0..5,50..54`; all rows when omitted.
        #[arg(long)]
        rows: Option<String>,
        /// Output rendering.
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Run the series-of-Stieltjes diagnostics battery.
    Diagnose {
        /// Cache file produced by `generate`.
        #[arg(long)]
        cache: PathBuf,
        /// Comma-separated couplings in the oscillator's own parameter.
        #[arg(long)]
        couplings: String,
        /// Largest moment-matrix order to test.
        #[arg(long, default_value_t = 20)]
        hankel_max: usize,
        /// Highest denominator degree in the exact monotonicity sweep.
        #[arg(long)]
        monotonicity_max: Option<usize>,
        /// Decimal digits carried internally (minimum 50).
        #[arg(long, default_value_t = 600)]
        precision: u32,
        /// Output rendering.
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Predict coefficients beyond the cached window.
    Predict {
        /// Cache file produced by `generate`.
        #[arg(long)]
        cache: PathBuf,
        /// Superscript of the table entry to expand.
        #[arg(long, requires = "k", requires = "terms", conflicts_with = "sweep")]
        n: Option<usize>,
        /// Half-subscript: expand the entry in even column `2k`.
        #[arg(long, requires = "n")]
        k: Option<usize>,
        /// How many predicted coefficients to report.
        #[arg(long, requires = "n")]
        terms: Option<usize>,
        /// Sweep the staircase schedule, reporting relative errors.
        #[arg(long)]
        sweep: bool,
        /// Sweep rows to print, e.g. `2..7,50..54`; all when omitted.
        #[arg(long, requires = "sweep")]
        rows: Option<String>,
        /// Decimal digits carried internally (minimum 50).
        #[arg(long, default_value_t = 600)]
        precision: u32,
        /// Output rendering.
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Generate { hamiltonian, order, cache } => {
            let hamiltonian = config::parse_hamiltonian(&hamiltonian)?;
            let report = commands::cmd_generate(hamiltonian, order, &cache)?;
            Ok(report.render(OutputFormat::Text))
        }
        Command::Sum { cache, lambda, beta, precision, rows, format } => {
            let config = RunConfig::new(cache, precision, format)?;
            let coupling = match (lambda, beta) {
                (Some(l), None) => CouplingArg::Lambda(l),
                (None, Some(b)) => CouplingArg::Beta(b),
                _ => {
                    return Err(CliError::General(
                        "pass exactly one of --lambda or --beta".into(),
                    ))
                }
            };
            let report = commands::cmd_sum(&config, coupling, rows.as_deref())?;
            Ok(report.render(config.format))
        }
        Command::Diagnose {
            cache,
            couplings,
            hankel_max,
            monotonicity_max,
            precision,
            format,
        } => {
            let config = RunConfig::new(cache, precision, format)?;
            let report =
                commands::cmd_diagnose(&config, &couplings, hankel_max, monotonicity_max)?;
            Ok(report.render(config.format))
        }
        Command::Predict { cache, n, k, terms, sweep, rows, precision, format } => {
            let config = RunConfig::new(cache, precision, format)?;
            let mode = match (n, sweep) {
                (Some(n), false) => PredictMode::Point {
                    n,
                    k: k.expect("clap enforces --k with --n"),
                    terms: terms.expect("clap enforces --terms with --n"),
                },
                (None, true) => PredictMode::Sweep { rows },
                _ => {
                    return Err(CliError::General(
                        "pass either --n/--k/--terms or --sweep".into(),
                    ))
                }
            };
            let report = commands::cmd_predict(&config, mode)?;
            Ok(report.render(config.format))
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version requests are successes; real usage
            // errors are general failures.
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            std::process::exit(code);
        }
    };
    match run(cli) {
        Ok(output) => print!("{output}"),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(err.exit_code());
        }
    }
}
