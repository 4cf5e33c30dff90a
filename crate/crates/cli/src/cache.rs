//! Line-oriented coefficient cache with corruption detection.
//!
//! Layout (text, one value per line, exact decimal strings only):
//!
//! ```text
//! padesum coefficient cache v1
//! hamiltonian: pt-cubic
//! generator-version: 1
//! max-order: 3
//! checksum: sha256:<64 hex digits>
//! 1 11
//! 2 -930
//! 3 158836
//! ```
//!
//! Invariants:
//! * Saving and loading round-trip byte-for-byte: values are stored as
//!   canonical reduced rationals, so regenerating the same orders
//!   rewrites identical bytes.
//! * The checksum covers exactly the coefficient lines; any edit to
//!   them is caught at load time.
//! * `max-order` always equals the number of coefficient lines; a
//!   header-only file (order 0) is valid and carries no coefficients.

use std::fmt::Write as _;
use std::path::Path;

use padesum_core::oscillator::{Hamiltonian, PerturbationSeries};
use padesum_core::rational::ExactRational;
use sha2::{Digest, Sha256};

use crate::config::parse_hamiltonian;
use crate::error::CliError;

/// Magic first line; bump the trailing version on format changes.
const MAGIC: &str = "padesum coefficient cache v1";

/// Version of the coefficient generator whose output is stored.
pub const GENERATOR_VERSION: u32 = 1;

/// Exact series coefficients plus the header identifying them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientCache {
    pub hamiltonian: Hamiltonian,
    pub generator_version: u32,
    /// Order-`i+1` energy coefficient at index `i`.
    pub coefficients: Vec<ExactRational>,
}

impl CoefficientCache {
    /// Captures a generated series.
    pub fn from_series(series: &PerturbationSeries) -> Self {
        CoefficientCache {
            hamiltonian: series.hamiltonian(),
            generator_version: GENERATOR_VERSION,
            coefficients: series.shift_coefficients().to_vec(),
        }
    }

    /// Rebuilds the series view over the cached coefficients.
    pub fn series(&self) -> PerturbationSeries {
        PerturbationSeries::from_coefficients(self.hamiltonian, self.coefficients.clone())
    }

    /// Number of coefficients held.
    pub fn max_order(&self) -> usize {
        self.coefficients.len()
    }

    fn coefficient_block(&self) -> String {
        let mut block = String::new();
        for (i, value) in self.coefficients.iter().enumerate() {
            writeln!(block, "{} {value}", i + 1).expect("string writes cannot fail");
        }
        block
    }

    /// The exact file content this cache serializes to.
    pub fn to_bytes(&self) -> String {
        let block = self.coefficient_block();
        format!(
            "{MAGIC}\nhamiltonian: {}\ngenerator-version: {}\nmax-order: {}\nchecksum: sha256:{}\n{block}",
            self.hamiltonian.label(),
            self.generator_version,
            self.coefficients.len(),
            checksum_hex(&block),
        )
    }

    /// Writes the cache; the file is replaced atomically-enough for a
    /// single-writer workflow (write then rename is unnecessary here).
    pub fn save(&self, path: &Path) -> Result<(), CliError> {
        std::fs::write(path, self.to_bytes())
            .map_err(|err| CliError::General(format!("cannot write {}: {err}", path.display())))
    }

    /// Reads and fully validates a cache file.
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = match std::fs::read_to_string(path) {
            Ok(text) => text,
            Err(err) if err.kind() == std::io::ErrorKind::NotFound => {
                return Err(CliError::Insufficient(format!(
                    "cache {} does not exist; create it with `padesum generate \
                     --hamiltonian pt-cubic|quartic --order N --cache {}`",
                    path.display(),
                    path.display(),
                )));
            }
            Err(err) => {
                return Err(CliError::General(format!(
                    "cannot read {}: {err}",
                    path.display()
                )));
            }
        };
        Self::parse(&text, path)
    }

    fn parse(text: &str, path: &Path) -> Result<Self, CliError> {
        let malformed = |what: &str| {
            CliError::General(format!("cache {} is malformed: {what}", path.display()))
        };
        let mut lines = text.lines();
        if lines.next() != Some(MAGIC) {
            return Err(malformed("missing magic line"));
        }
        let hamiltonian = parse_hamiltonian(header_value(lines.next(), "hamiltonian")?)?;
        let generator_version = header_value(lines.next(), "generator-version")?
            .parse::<u32>()
            .map_err(|_| malformed("generator-version is not a number"))?;
        let max_order = header_value(lines.next(), "max-order")?
            .parse::<usize>()
            .map_err(|_| malformed("max-order is not a number"))?;
        let stored_sum = header_value(lines.next(), "checksum")?
            .strip_prefix("sha256:")
            .ok_or_else(|| malformed("checksum is not sha256"))?
            .to_string();

        let mut coefficients = Vec::with_capacity(max_order);
        let mut block = String::new();
        for line in lines {
            writeln!(block, "{line}").expect("string writes cannot fail");
            let (index, value) = line
                .split_once(' ')
                .ok_or_else(|| malformed("coefficient line has no separator"))?;
            let index: usize = index
                .parse()
                .map_err(|_| malformed("coefficient order is not a number"))?;
            if index != coefficients.len() + 1 {
                return Err(malformed("coefficient orders are not consecutive from 1"));
            }
            let value: ExactRational = value
                .parse()
                .map_err(|_| malformed("coefficient value is not a rational"))?;
            coefficients.push(value);
        }
        if coefficients.len() != max_order {
            return Err(malformed("max-order disagrees with the coefficient count"));
        }
        let actual_sum = checksum_hex(&block);
        if actual_sum != stored_sum {
            return Err(CliError::General(format!(
                "cache {} failed its checksum (stored {stored_sum}, computed {actual_sum}); \
                 regenerate it with `padesum generate`",
                path.display()
            )));
        }
        Ok(CoefficientCache { hamiltonian, generator_version, coefficients })
    }

    /// Loads a cache and insists it holds at least `needed`
    /// coefficients, with a remediation hint otherwise.
    pub fn load_at_least(path: &Path, needed: usize) -> Result<Self, CliError> {
        let cache = Self::load(path)?;
        if cache.max_order() < needed.max(1) {
            return Err(CliError::Insufficient(format!(
                "cache {} holds {} coefficients but the request needs {}; \
                 regenerate with `padesum generate --hamiltonian {} --order {} --cache {}`",
                path.display(),
                cache.max_order(),
                needed.max(1),
                cache.hamiltonian.label(),
                needed.max(1),
                path.display(),
            )));
        }
        Ok(cache)
    }
}

fn header_value<'a>(line: Option<&'a str>, key: &str) -> Result<&'a str, CliError> {
    line.and_then(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(": ")))
        .ok_or_else(|| CliError::General(format!("cache is malformed: missing `{key}` header")))
}

fn checksum_hex(block: &str) -> String {
    let digest = Sha256::digest(block.as_bytes());
    let mut hex = String::with_capacity(64);
    for byte in digest {
        write!(hex, "{byte:02x}").expect("string writes cannot fail");
    }
    hex
}
