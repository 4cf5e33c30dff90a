//! Process-level error taxonomy and exit codes.
//!
//! Every failure surfaces as one of three categories, each with a fixed
//! exit code so scripts can branch on outcomes:
//!
//! * general errors (bad arguments, IO trouble, corrupt cache) → 1
//! * insufficient data (missing cache, too few coefficients) → 2
//! * numeric degeneracy (vanishing denominators, singular systems) → 3
//!
//! Invariants:
//! * Exit code 0 is reserved for full success and never produced here.
//! * Every variant carries a human-readable message; insufficient-data
//!   messages include a remediation hint naming the command to run.

use std::fmt;

/// A command failed; the variant selects the process exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliError {
    /// Bad arguments, IO failure, or a corrupt cache file. Exit 1.
    General(String),
    /// The cached data cannot support the request. Exit 2.
    Insufficient(String),
    /// The computation hit a numeric degeneracy. Exit 3.
    Degenerate(String),
}

impl CliError {
    /// Process exit code for this failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::General(_) => 1,
            CliError::Insufficient(_) => 2,
            CliError::Degenerate(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::General(msg)
            | CliError::Insufficient(msg)
            | CliError::Degenerate(msg) => f.write_str(msg),
        }
    }
}

impl std::error::Error for CliError {}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::General(format!("io error: {err}"))
    }
}
