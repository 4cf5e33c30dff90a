//! Truncated power series over a fixed coefficient window.
//!
//! A [`TruncatedSeries`] holds coefficients of `z^0 … z^M` and stands for
//! a power series known *through order M*. Arithmetic keeps only
//! coefficients both operands can vouch for: binary operations truncate
//! to the shorter window, and multiplying by `z` shifts coefficients up
//! within the window (the top one falls off). Nothing here extrapolates —
//! a coefficient is either implied by the inputs or absent.
//!
//! Division is the usual power-series recurrence and requires a constant
//! term that passes the [`Scalar::is_negligible`] guard: exactly nonzero
//! in exact mode, comfortably above the rounding floor in float mode.
//!
//! Invariants:
//! * The window is never empty (`order() >= 0`).
//! * `mul` and `div` are mutually inverse on the shared window whenever
//!   the divisor's constant term is usable.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::scalar::Scalar;

/// Series coefficients `c_0 … c_M` of `z^0 … z^M`, constant term first.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries<C> {
    coeffs: Vec<C>,
}

/// A series operation that cannot proceed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesError {
    /// Division by a series whose constant term is zero (or, in float
    /// mode, indistinguishable from rounding noise).
    ZeroConstantTerm,
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::ZeroConstantTerm => {
                write!(f, "series division by a vanishing constant term")
            }
        }
    }
}

impl<C: Scalar> TruncatedSeries<C> {
    /// Wraps explicit coefficients; panics on an empty window.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "series window must hold at least the constant term");
        TruncatedSeries { coeffs }
    }

    /// The constant series `c` on the window `z^0 … z^order`.
    pub fn constant(c: C, order: usize) -> Self {
        let zero = c.zero_like();
        let mut coeffs = vec![zero; order + 1];
        coeffs[0] = c;
        TruncatedSeries { coeffs }
    }

    /// Highest retained order `M`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `z^j`; panics beyond the window.
    pub fn coeff(&self, j: usize) -> &C {
        &self.coeffs[j]
    }

    /// All retained coefficients, constant term first.
    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// True when every retained coefficient is exactly zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// Restricts to the window `z^0 … z^order` (no-op if already shorter).
    pub fn truncate(&self, order: usize) -> Self {
        if order >= self.order() {
            return self.clone();
        }
        TruncatedSeries { coeffs: self.coeffs[..=order].to_vec() }
    }

    /// Sum on the shared window.
    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        TruncatedSeries {
            coeffs: (0..n).map(|j| self.coeffs[j].add(&rhs.coeffs[j])).collect(),
        }
    }

    /// Difference on the shared window.
    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        TruncatedSeries {
            coeffs: (0..n).map(|j| self.coeffs[j].sub(&rhs.coeffs[j])).collect(),
        }
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(Scalar::neg).collect() }
    }

    /// Scales every coefficient by `c`.
    pub fn scale(&self, c: &C) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect() }
    }

    /// Adds `c` to the constant term.
    pub fn add_constant(&self, c: &C) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs[0] = coeffs[0].add(c);
        TruncatedSeries { coeffs }
    }

    /// Multiplies by `z^k` inside the window: coefficients shift up, the
    /// top `k` fall off, the window length is unchanged.
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.coeffs.len();
        let zero = self.coeffs[0].zero_like();
        let mut coeffs = vec![zero; n];
        for j in k..n {
            coeffs[j] = self.coeffs[j - k].clone();
        }
        TruncatedSeries { coeffs }
    }

    /// Cauchy product on the shared window.
    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n - i) {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// Quotient on the shared window by the standard recurrence
    /// `c_j = (a_j − Σ_{i=1..j} b_i c_{j−i}) / b_0`.
    pub fn div(&self, rhs: &Self) -> Result<Self, SeriesError> {
        let b0 = &rhs.coeffs[0];
        if b0.is_negligible() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let n = self.coeffs.len().min(rhs.coeffs.len());
        let mut out: Vec<C> = Vec::with_capacity(n);
        for j in 0..n {
            let mut acc = self.coeffs[j].clone();
            for i in 1..=j {
                let b = &rhs.coeffs[i];
                if b.is_zero() {
                    continue;
                }
                acc = acc.sub(&b.mul(&out[j - i]));
            }
            out.push(acc.div(b0));
        }
        Ok(TruncatedSeries { coeffs: out })
    }
}

impl<C: Scalar> fmt::Display for TruncatedSeries<C> {
    /// `c0 + c1·z + … + O(z^(M+1))` with zero terms skipped.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            wrote = true;
            match j {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*z")?,
                _ => write!(f, "({c})*z^{j}")?,
            }
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(z^{})", self.coeffs.len())
    }
}

impl<C: Scalar> fmt::Debug for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
