//! Partial sums, the epsilon extrapolation table, and an independent
//! linear-system Padé constructor.
//!
//! The summation pipeline evaluates a divergent energy-shift series at a
//! fixed positive coupling: [`partial_sums`] produces the raw truncation
//! values, [`EpsilonTable`] applies the two-term lozenge recursion
//!
//! ```text
//! e[-1][n] = 0,    e[0][n] = s_n,
//! e[k+1][n] = e[k-1][n+1] + 1 / (e[k][n+1] - e[k][n]),
//! ```
//!
//! and [`staircase_index`] names the schedule that uses each new partial
//! sum as soon as it exists. Even-subscript entries are rational
//! (Padé-type) approximants — `e[2k][n]` equals the approximant with
//! numerator degree `k+n` and denominator degree `k` evaluated at the
//! coupling; odd-subscript entries are auxiliary and blow up when the
//! even ones converge.
//!
//! [`direct_pade`] builds the same approximants a completely different
//! way — an exact fraction-free linear solve for the denominator
//! coefficients — and exists to cross-check the table, not to be fast.
//!
//! Invariants:
//! * Every populated cell satisfies the lozenge recursion (exactly for
//!   rational scalars, to working precision for floating ones).
//! * A vanishing lozenge denominator marks the dependent cell instead of
//!   panicking; dependent cells are never reported as approximants.
//! * `direct_pade` output always has denominator constant term 1 and its
//!   Taylor expansion reproduces the input coefficients through order
//!   `l + m` (checkable via [`accuracy_through_order_check`]).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use malachite_base::num::arithmetic::traits::DivExact;
use malachite_base::num::basic::traits::{One, Zero};
use malachite_nz::integer::Integer;
use malachite_nz::natural::Natural;

use crate::oscillator::PerturbationSeries;
use crate::poly::Polynomial;
use crate::rational::ExactRational;
use crate::real::BigReal;
use crate::scalar::Scalar;
use crate::series::TruncatedSeries;

/// Request for more series coefficients than a source holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InsufficientCoefficients {
    /// Coefficient count the operation needed.
    pub needed: usize,
    /// Coefficient count actually available.
    pub available: usize,
}

impl fmt::Display for InsufficientCoefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "needs {} series coefficients but only {} are available",
            self.needed, self.available
        )
    }
}

/// Exact partial sums `s_n = Σ_{ν=0}^{n} c_{ν+1}·coupling^ν` of the
/// energy-shift series, for `n = 0..=n_max`.
pub fn partial_sums(
    series: &PerturbationSeries,
    coupling: &ExactRational,
    n_max: usize,
) -> Result<Vec<ExactRational>, InsufficientCoefficients> {
    assert!(!coupling.is_negative(), "partial sums are defined for couplings >= 0");
    if n_max >= series.max_order() {
        return Err(InsufficientCoefficients {
            needed: n_max + 1,
            available: series.max_order(),
        });
    }
    let coeffs = series.shift_coefficients();
    let mut out = Vec::with_capacity(n_max + 1);
    let mut power = ExactRational::one();
    let mut sum = ExactRational::zero();
    for c in coeffs.iter().take(n_max + 1) {
        sum = &sum + &(c * &power);
        power = &power * coupling;
        out.push(sum.clone());
    }
    Ok(out)
}

/// Partial sums rounded to `digits` significant digits each — summed
/// exactly first, so every entry is individually correctly rounded.
pub fn partial_sums_real(
    series: &PerturbationSeries,
    coupling: &ExactRational,
    n_max: usize,
    digits: u32,
) -> Result<Vec<BigReal>, InsufficientCoefficients> {
    let exact = partial_sums(series, coupling, n_max)?;
    Ok(exact.iter().map(|s| BigReal::from_rational(s, digits)).collect())
}

/// Partial sums carrying `digits` significant digits *plus* the
/// decimal magnitude of the largest sum.
///
/// A sum of magnitude `10^M` rounded to `p` significant digits has
/// absolute error `~10^(M−p)`. Downstream lozenge arithmetic cancels
/// against those large intermediates, so its noise floor is set by the
/// absolute input error, not the relative one; lifting the precision
/// by `M` keeps that floor where `digits` alone would put it for
/// order-one inputs. The lift never loses anything — every entry
/// remains correctly rounded at the higher precision.
pub fn compensated_partial_sums_real(
    series: &PerturbationSeries,
    coupling: &ExactRational,
    n_max: usize,
    digits: u32,
) -> Result<Vec<BigReal>, InsufficientCoefficients> {
    let exact = partial_sums(series, coupling, n_max)?;
    let magnitude = exact
        .iter()
        .map(|s| BigReal::from_rational(s, 8).magnitude_exponent())
        .max()
        .unwrap_or(0)
        .max(0) as u32;
    let lifted = digits + magnitude;
    Ok(exact.iter().map(|s| BigReal::from_rational(s, lifted)).collect())
}

/// Position of the best table entry after `n+1` partial sums, and the
/// rational-approximant degrees it corresponds to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StaircaseIndex {
    /// Even table subscript `2⌊n/2⌋`.
    pub subscript: usize,
    /// Table superscript `n mod 2`.
    pub superscript: usize,
    /// Numerator degree `n − ⌊n/2⌋` of the equivalent approximant.
    pub numerator_degree: usize,
    /// Denominator degree `⌊n/2⌋` of the equivalent approximant.
    pub denominator_degree: usize,
}

/// The schedule entry consuming partial sums `s_0..s_n`.
pub fn staircase_index(n: usize) -> StaircaseIndex {
    let half = n / 2;
    StaircaseIndex {
        subscript: 2 * half,
        superscript: n - 2 * half,
        numerator_degree: n - half,
        denominator_degree: half,
    }
}

/// One cell of the extrapolation table.
#[derive(Clone, Debug, PartialEq)]
enum Cell<T> {
    Value(T),
    /// The lozenge denominator vanished; the cell behaves like the point
    /// at infinity of the projective line.
    Infinity,
}

/// The full epsilon extrapolation table over a list of partial sums.
///
/// Column `k` holds entries for superscripts `n = 0..input_count−k`.
/// Cells whose lozenge denominator vanished are marked rather than
/// computed; arithmetic involving marked cells follows the projective
/// conventions `1/(∞ − v) = 0`, `1/(∞ − ∞) = 0`, and `∞ + v = ∞`, which
/// reduce to the classical behavior on constant tails.
#[derive(Clone, Debug)]
pub struct EpsilonTable<T> {
    cols: Vec<Vec<Cell<T>>>,
    degenerate: Vec<(usize, usize)>,
    input_count: usize,
}

impl<T: Scalar> EpsilonTable<T> {
    /// Runs the lozenge recursion over `inputs` (the `ε_0` column).
    pub fn build(inputs: Vec<T>) -> Self {
        assert!(!inputs.is_empty(), "the table needs at least one partial sum");
        let zero = inputs[0].zero_like();
        let input_count = inputs.len();
        let mut degenerate = Vec::new();
        let mut cols: Vec<Vec<Cell<T>>> = Vec::with_capacity(input_count);
        cols.push(inputs.into_iter().map(Cell::Value).collect());
        for k in 1..input_count {
            let len = input_count - k;
            let mut col = Vec::with_capacity(len);
            for n in 0..len {
                let upper = &cols[k - 1][n + 1];
                let lower = &cols[k - 1][n];
                let back = if k >= 2 { &cols[k - 2][n + 1] } else { &Cell::Value(zero.clone()) };
                let cell = match (upper, lower) {
                    (Cell::Value(u), Cell::Value(l)) => {
                        let diff = u.sub(l);
                        if diff.is_negligible() {
                            degenerate.push((k, n));
                            Cell::Infinity
                        } else {
                            match back {
                                Cell::Value(b) => Cell::Value(b.add(&diff.recip())),
                                Cell::Infinity => Cell::Infinity,
                            }
                        }
                    }
                    // One or both neighbors at infinity: the correction
                    // term 1/(…) is zero, so the cell collapses onto the
                    // back neighbor.
                    _ => back.clone(),
                };
                if matches!(cell, Cell::Infinity) && !degenerate.contains(&(k, n)) {
                    degenerate.push((k, n));
                }
                col.push(cell);
            }
            cols.push(col);
        }
        EpsilonTable { cols, degenerate, input_count }
    }

    /// Number of partial sums consumed.
    pub fn input_count(&self) -> usize {
        self.input_count
    }

    /// Raw entry `ε_k^{(n)}`; `None` when out of range or marked.
    pub fn entry(&self, k: usize, n: usize) -> Option<&T> {
        match self.cols.get(k)?.get(n)? {
            Cell::Value(v) => Some(v),
            Cell::Infinity => None,
        }
    }

    /// Even-subscript entry `ε_{2k}^{(n)}` — the approximant with
    /// numerator degree `k+n` and denominator degree `k`.
    pub fn approximant(&self, k: usize, n: usize) -> Option<&T> {
        self.entry(2 * k, n)
    }

    /// The schedule entry consuming inputs `s_0..s_n`.
    pub fn staircase(&self, n: usize) -> Option<&T> {
        let idx = staircase_index(n);
        self.entry(idx.subscript, idx.superscript)
    }

    /// All schedule entries in order, one per input consumed.
    pub fn staircase_values(&self) -> Vec<Option<&T>> {
        (0..self.input_count).map(|n| self.staircase(n)).collect()
    }

    /// Cells whose lozenge denominator vanished, in creation order.
    pub fn degenerate_cells(&self) -> &[(usize, usize)] {
        &self.degenerate
    }

    /// Whether a populated cell is marked degenerate.
    pub fn is_degenerate(&self, k: usize, n: usize) -> bool {
        matches!(self.cols.get(k).and_then(|c| c.get(n)), Some(Cell::Infinity))
    }

    /// Largest magnitude over a whole column, ignoring marked cells —
    /// used to watch the auxiliary odd columns blow up.
    pub fn column_max_magnitude(&self, k: usize) -> Option<T> {
        let mut best: Option<T> = None;
        for cell in self.cols.get(k)? {
            if let Cell::Value(v) = cell {
                let mag = v.abs();
                if best
                    .as_ref()
                    .map_or(true, |b| mag.cmp_value(b) == core::cmp::Ordering::Greater)
                {
                    best = Some(mag);
                }
            }
        }
        best
    }
}

/// A rational approximant `numerator / denominator` in explicit
/// polynomial form, normalized so the denominator's constant term is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadeApproximant {
    numerator: Polynomial,
    denominator: Polynomial,
}

/// The denominator linear system had no unique solution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SingularSystem {
    /// Requested numerator degree.
    pub numerator_degree: usize,
    /// Requested denominator degree.
    pub denominator_degree: usize,
}

impl fmt::Display for SingularSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "the denominator system for degrees ({}, {}) is singular",
            self.numerator_degree, self.denominator_degree
        )
    }
}

impl PadeApproximant {
    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    /// Evaluates the approximant; `None` on a denominator zero.
    pub fn eval(&self, z: &ExactRational) -> Option<ExactRational> {
        self.numerator.eval(z).checked_div(&self.denominator.eval(z))
    }

    /// Taylor coefficients of the approximant through `z^order`.
    pub fn taylor(&self, order: usize) -> TruncatedSeries<ExactRational> {
        let num = TruncatedSeries::from_coeffs(self.numerator.taylor_prefix(order + 1));
        let den = TruncatedSeries::from_coeffs(self.denominator.taylor_prefix(order + 1));
        // The denominator's constant term is 1 by construction.
        num.div(&den).expect("normalized denominator cannot have zero constant term")
    }
}

/// Builds the approximant with numerator degree `l` and denominator
/// degree `m` from exact series coefficients `γ_0..γ_{l+m}` by solving
/// the matching conditions directly.
///
/// The denominator system is solved by integer-preserving elimination on
/// a common-denominator scaling of the coefficient rows; exactness is
/// the point, speed is not.
pub fn direct_pade(
    coefficients: &[ExactRational],
    l: usize,
    m: usize,
) -> Result<PadeApproximant, SingularSystem> {
    assert!(
        coefficients.len() >= l + m + 1,
        "needs coefficients through order l+m = {}",
        l + m
    );
    let gamma = |i: isize| -> ExactRational {
        if i < 0 { ExactRational::zero() } else { coefficients[i as usize].clone() }
    };

    // Matching orders l+1..l+m:  Σ_{j=1}^{m} γ_{i−j}·d_j = −γ_i
    // determines the non-constant denominator coefficients d_j.
    let d = if m == 0 {
        Vec::new()
    } else {
        let mut rows: Vec<Vec<ExactRational>> = Vec::with_capacity(m);
        for r in 0..m {
            let i = (l + 1 + r) as isize;
            let mut row: Vec<ExactRational> = (1..=m as isize).map(|j| gamma(i - j)).collect();
            row.push(-&gamma(i));
            rows.push(row);
        }
        solve_fraction_free(rows).ok_or(SingularSystem {
            numerator_degree: l,
            denominator_degree: m,
        })?
    };

    let mut den_coeffs = Vec::with_capacity(m + 1);
    den_coeffs.push(ExactRational::one());
    den_coeffs.extend(d.iter().cloned());
    let denominator = Polynomial::new(den_coeffs);

    // Numerator orders 0..l:  a_i = Σ_{j=0}^{min(i,m)} γ_{i−j}·d_j.
    let mut num_coeffs = Vec::with_capacity(l + 1);
    for i in 0..=l as isize {
        let mut a = gamma(i);
        for j in 1..=m.min(i as usize) as isize {
            a = &a + &(&gamma(i - j) * &d[(j - 1) as usize]);
        }
        num_coeffs.push(a);
    }
    let numerator = Polynomial::new(num_coeffs);

    Ok(PadeApproximant { numerator, denominator })
}

/// Solves the square rational system given as rows `[A | rhs]` by
/// clearing each row to integers and running fraction-free elimination;
/// `None` when the system is singular.
fn solve_fraction_free(rows: Vec<Vec<ExactRational>>) -> Option<Vec<ExactRational>> {
    let m = rows.len();
    let mut a: Vec<Vec<Integer>> = rows.into_iter().map(integer_scaled_row).collect();

    let mut prev = Integer::ONE;
    for col in 0..m {
        let pivot_row = (col..m).find(|&r| a[r][col] != 0)?;
        a.swap(col, pivot_row);
        let pivot = a[col][col].clone();
        for r in col + 1..m {
            for c in col + 1..=m {
                let t = &pivot * &a[r][c] - &a[r][col] * &a[col][c];
                a[r][c] = t.div_exact(&prev);
            }
            a[r][col] = Integer::ZERO;
        }
        prev = pivot;
    }

    let mut x = vec![ExactRational::zero(); m];
    for r in (0..m).rev() {
        let mut acc = ExactRational::from_integer(a[r][m].clone());
        for c in r + 1..m {
            acc = &acc - &(&ExactRational::from_integer(a[r][c].clone()) * &x[c]);
        }
        x[r] = acc.checked_div(&ExactRational::from_integer(a[r][r].clone()))?;
    }
    Some(x)
}

/// Scales one rational row by the least common multiple of its
/// denominators, yielding integers.
fn integer_scaled_row(row: Vec<ExactRational>) -> Vec<Integer> {
    let mut scale = Natural::ONE;
    for v in &row {
        if !v.is_zero() {
            scale = malachite_base::num::arithmetic::traits::Lcm::lcm(scale, v.denominator());
        }
    }
    row.iter()
        .map(|v| v.numerator() * Integer::from(&(&scale).div_exact(v.denominator())))
        .collect()
}

/// Outcome of re-expanding an approximant against its input series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AccuracyReport {
    /// Orders `0..=through` were compared.
    pub through: usize,
    /// First order whose coefficients differ, if any.
    pub first_disagreement: Option<usize>,
}

/// Expands `p` as far as `coefficients` reaches and reports the first
/// order where the two disagree. For an approximant with numerator
/// degree `l` and denominator degree `m` built from these coefficients,
/// any disagreement must sit beyond order `l + m`.
pub fn accuracy_through_order_check(
    p: &PadeApproximant,
    coefficients: &[ExactRational],
) -> AccuracyReport {
    assert!(!coefficients.is_empty(), "nothing to compare against");
    let through = coefficients.len() - 1;
    let expansion = p.taylor(through);
    let first_disagreement =
        (0..=through).find(|&i| expansion.coeff(i) != &coefficients[i]);
    AccuracyReport { through, first_disagreement }
}
