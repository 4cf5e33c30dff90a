//! Report rendering: one table of string cells, three faithful views.
//!
//! Every command reduces its output to a [`Report`] — metadata pairs
//! plus a rectangular grid of pre-formatted cells — and the text, CSV,
//! and JSON emitters lay out that same grid without reformatting
//! anything.
//!
//! Invariants:
//! * A numeric cell is formatted exactly once; the three views always
//!   agree on every cell.
//! * JSON carries all numbers as strings, never as floats, so exact
//!   values survive any consumer.
//! * CSV cells never need quoting: formatted numbers contain no commas,
//!   quotes, or line breaks (enforced at render time).

use std::fmt::Write as _;

use padesum_core::real::BigReal;

use crate::config::OutputFormat;

/// A rendered-once table: metadata plus rows of string cells.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    /// One-line description of what the table shows.
    pub title: String,
    /// Ordered key/value context (series, coupling, precision, …).
    pub meta: Vec<(String, String)>,
    /// Column headers, one per cell position.
    pub columns: Vec<String>,
    /// Row-major cells; every row has `columns.len()` entries.
    pub rows: Vec<Vec<String>>,
}

impl Report {
    /// Renders in the requested format.
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => self.to_text(),
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Json => self.to_json(),
        }
    }

    fn check_shape(&self) {
        for row in &self.rows {
            assert_eq!(row.len(), self.columns.len(), "ragged report row");
        }
    }

    /// Aligned, human-readable table.
    pub fn to_text(&self) -> String {
        self.check_shape();
        let mut out = String::new();
        writeln!(out, "# {}", self.title).expect("string writes cannot fail");
        for (key, value) in &self.meta {
            writeln!(out, "# {key}: {value}").expect("string writes cannot fail");
        }
        if self.columns.is_empty() {
            return out;
        }
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.len()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let mut line = String::new();
        for (i, (column, w)) in self.columns.iter().zip(&widths).enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            write!(line, "{column:>w$}").expect("string writes cannot fail");
        }
        writeln!(out, "{line}").expect("string writes cannot fail");
        for row in &self.rows {
            let mut line = String::new();
            for (i, (cell, w)) in row.iter().zip(&widths).enumerate() {
                if i > 0 {
                    line.push_str("  ");
                }
                write!(line, "{cell:>w$}").expect("string writes cannot fail");
            }
            writeln!(out, "{line}").expect("string writes cannot fail");
        }
        out
    }

    /// Header row plus data rows; metadata is omitted.
    pub fn to_csv(&self) -> String {
        self.check_shape();
        let mut out = String::new();
        let clean = |cell: &str| {
            assert!(
                !cell.contains([',', '"', '\n']),
                "csv cell would need quoting: {cell:?}"
            );
            cell.to_string()
        };
        writeln!(out, "{}", self.columns.iter().map(|c| clean(c)).collect::<Vec<_>>().join(","))
            .expect("string writes cannot fail");
        for row in &self.rows {
            writeln!(out, "{}", row.iter().map(|c| clean(c)).collect::<Vec<_>>().join(","))
                .expect("string writes cannot fail");
        }
        out
    }

    /// One JSON object with title, meta, columns, and rows of strings.
    pub fn to_json(&self) -> String {
        self.check_shape();
        let meta: serde_json::Map<String, serde_json::Value> = self
            .meta
            .iter()
            .map(|(k, v)| (k.clone(), serde_json::Value::String(v.clone())))
            .collect();
        let value = serde_json::json!({
            "title": self.title,
            "meta": meta,
            "columns": self.columns,
            "rows": self.rows,
        });
        let mut text =
            serde_json::to_string_pretty(&value).expect("report serialization cannot fail");
        text.push('\n');
        text
    }
}

/// Scientific form at `sig` significant digits: `0.110e+002`.
pub fn sci(value: &BigReal, sig: u32) -> String {
    value.to_sci_string(sig)
}

/// Table-style fixed-point: 14 decimal places for magnitudes of one or
/// more, 15 below one — `11.00000000000000`, `5.52416721306031`,
/// `0.419249416033487`.
pub fn fixed_point(value: &BigReal) -> String {
    if value.is_zero() {
        return BigReal::zero(15).to_fixed_string(15);
    }
    let e = value.magnitude_exponent();
    let sig = if e >= 1 { e + 14 } else { e + 15 };
    if sig < 1 {
        // Too small for the table scale: everything rounds to zero.
        return BigReal::zero(15).to_fixed_string(15);
    }
    value.to_fixed_string(sig as u32)
}
