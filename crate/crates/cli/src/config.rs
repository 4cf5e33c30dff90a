//! Run configuration shared by the summation, diagnostics, and
//! prediction commands, plus the small parsers behind it.
//!
//! Invariants:
//! * Couplings are exact rationals entered as `p/q` (or a plain
//!   integer) with a positive denominator; nothing is ever parsed
//!   through floating point.
//! * Working precision is at least 50 decimal digits.
//! * Row specifications expand to the listed order: `"0..5,50..54"` is
//!   rows 0–5 then 50–54, both ends included.

use std::path::PathBuf;

use padesum_core::oscillator::Hamiltonian;
use padesum_core::rational::ExactRational;

use crate::error::CliError;

/// Fewest decimal digits a run may ask for.
pub const MIN_PRECISION: u32 = 50;

/// How a report is rendered.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    /// Aligned human-readable table.
    Text,
    /// Comma-separated values with a header row.
    Csv,
    /// One JSON object; numeric cells are strings.
    Json,
}

/// Validated settings shared by the report-producing commands.
#[derive(Clone, Debug)]
pub struct RunConfig {
    /// Coefficient cache backing the run.
    pub cache: PathBuf,
    /// Decimal digits carried by float-mode computations.
    pub precision: u32,
    /// Output rendering.
    pub format: OutputFormat,
}

impl RunConfig {
    /// Bundles the settings, enforcing the precision floor.
    pub fn new(cache: PathBuf, precision: u32, format: OutputFormat) -> Result<Self, CliError> {
        if precision < MIN_PRECISION {
            return Err(CliError::General(format!(
                "precision {precision} is below the floor of {MIN_PRECISION} digits"
            )));
        }
        Ok(RunConfig { cache, precision, format })
    }
}

/// Parses an oscillator tag (`pt-cubic` or `quartic`).
pub fn parse_hamiltonian(tag: &str) -> Result<Hamiltonian, CliError> {
    match tag {
        "pt-cubic" => Ok(Hamiltonian::PtCubic),
        "quartic" => Ok(Hamiltonian::Quartic),
        other => Err(CliError::General(format!(
            "unknown hamiltonian `{other}` (expected `pt-cubic` or `quartic`)"
        ))),
    }
}

/// Parses an exact rational argument such as `1/7`, `40/49`, or `0`.
pub fn parse_rational(text: &str) -> Result<ExactRational, CliError> {
    text.parse::<ExactRational>().map_err(|err| {
        CliError::General(format!("cannot parse `{text}` as an exact rational: {err}"))
    })
}

/// Expands a row specification like `0..5,50..54,192` (ranges are
/// inclusive) in the order written.
pub fn parse_row_spec(spec: &str) -> Result<Vec<usize>, CliError> {
    let mut rows = Vec::new();
    for piece in spec.split(',') {
        let piece = piece.trim();
        if piece.is_empty() {
            return Err(CliError::General(format!("empty entry in row spec `{spec}`")));
        }
        let (lo, hi) = match piece.split_once("..") {
            Some((a, b)) => (parse_row(a, spec)?, parse_row(b, spec)?),
            None => {
                let n = parse_row(piece, spec)?;
                (n, n)
            }
        };
        if lo > hi {
            return Err(CliError::General(format!(
                "descending range `{piece}` in row spec `{spec}`"
            )));
        }
        rows.extend(lo..=hi);
    }
    Ok(rows)
}

fn parse_row(text: &str, spec: &str) -> Result<usize, CliError> {
    text.trim().parse::<usize>().map_err(|_| {
        CliError::General(format!("bad row `{text}` in row spec `{spec}`"))
    })
}
