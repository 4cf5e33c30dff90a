//! Predicting power-series coefficients the fit never saw.
//!
//! A rational approximant built from `γ_0 … γ_{n+2k}` keeps going past
//! its fitted window: its Taylor expansion at order `n+2k+1+ν` is an
//! estimate of the true coefficient `γ_{n+2k+1+ν}`. Writing the
//! even-column epsilon entry as
//!
//! ```text
//! ε_{2k}^{(n)} = f_{n+2k}(z) + z^{n+2k+1} · φ_{2k}^{(n)}(z)
//! ```
//!
//! (with `f_m` the `m`-th partial sum) isolates exactly that
//! continuation: the coefficients `g_ν^{(n,2k)}` of `φ_{2k}^{(n)}` are
//! the predictions. Two evaluation routes are provided:
//!
//! * [`phi_series`] runs the three-line remainder recursion in
//!   truncated-power-series arithmetic and yields a whole prediction
//!   vector at once.
//! * [`first_prediction`] is the same recursion with `z = 0`: a purely
//!   numeric scheme that yields only `g_0^{(n,2k)}`, the prediction for
//!   the first unseen coefficient — far cheaper, and the workhorse for
//!   long relative-error sweeps ([`staircase_prediction_errors`]).
//!
//! Invariants:
//! * The two routes agree exactly: `first_prediction(n, k)` equals the
//!   `ν = 0` coefficient of `phi_series(n, k)` in exact arithmetic.
//! * Reconstruction: partial sum plus shifted remainder reproduces the
//!   Taylor expansion of the matching single-shot approximant through
//!   order `n+2k+M`.
//! * For a series of Stieltjes, predictions undershoot: each predicted
//!   coefficient has the true sign and magnitude at most the true
//!   magnitude ([`check_prediction_bound`]).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::scalar::Scalar;
use crate::series::TruncatedSeries;

/// The remainder expansion attached to one even-column table entry.
#[derive(Clone, Debug)]
pub struct PhiFunction<T: Scalar> {
    n: usize,
    k: usize,
    expansion: TruncatedSeries<T>,
}

impl<T: Scalar> PhiFunction<T> {
    /// Superscript of the table entry this remainder belongs to.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Half-subscript: the entry is in even column `2k`.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Remainder coefficients `g_ν` for `ν = 0 ..= M`.
    pub fn expansion(&self) -> &TruncatedSeries<T> {
        &self.expansion
    }

    /// Index of the series coefficient that `g_ν` predicts.
    pub fn target_index(&self, nu: usize) -> usize {
        self.n + 2 * self.k + nu + 1
    }
}

/// The remainder recursion hit a vanishing series constant term: the
/// table entry at this position is degenerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegenerateTableEntry {
    pub n: usize,
    pub k: usize,
}

impl fmt::Display for DegenerateTableEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "remainder recursion degenerate at superscript {} half-subscript {}",
            self.n, self.k
        )
    }
}

/// The numeric scheme hit a vanishing denominator at this position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZeroDenominator {
    pub n: usize,
    pub k: usize,
}

impl fmt::Display for ZeroDenominator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "prediction scheme denominator vanishes at superscript {} half-subscript {}",
            self.n, self.k
        )
    }
}

/// Runs the remainder recursion in truncated-series arithmetic and
/// returns `φ_{2k}^{(n)}` on the window `z^0 … z^truncation`.
///
/// Needs `coefficients[0 ..= n + 2k]`. Works over any scalar: exact
/// rationals give exact remainder coefficients; decimal floats trade
/// exactness for speed at high orders.
pub fn phi_series<T: Scalar>(
    coefficients: &[T],
    n: usize,
    k: usize,
    truncation: usize,
) -> Result<PhiFunction<T>, DegenerateTableEntry> {
    assert!(
        coefficients.len() > n + 2 * k,
        "remainder recursion needs coefficients through index n + 2k"
    );
    let zero = coefficients[0].zero_like();
    let one = coefficients[0].one_like();
    if k == 0 {
        return Ok(PhiFunction {
            n,
            k,
            expansion: TruncatedSeries::constant(zero, truncation),
        });
    }

    // Level j holds φ_{2j}^{(n + i)} for offsets i = 0 ..= 2(k − j);
    // building level j+1 at offset i consumes level j at offsets
    // i, i+1, i+2 and level j−1 at offset i+2.
    let zero_series = TruncatedSeries::constant(zero.clone(), truncation);
    let one_series = TruncatedSeries::constant(one, truncation);
    let mut below: Vec<TruncatedSeries<T>> = vec![zero_series; 2 * k + 1];
    let mut level: Vec<TruncatedSeries<T>> = Vec::with_capacity(2 * (k - 1) + 1);
    for i in 0..=2 * (k - 1) {
        let s = n + i;
        let head = &coefficients[s + 2];
        let numerator = TruncatedSeries::constant(head.mul(head), truncation);
        let mut den_coeffs = vec![zero.clone(); truncation + 1];
        den_coeffs[0] = coefficients[s + 1].clone();
        if truncation >= 1 {
            den_coeffs[1] = head.neg();
        }
        let denominator = TruncatedSeries::from_coeffs(den_coeffs);
        let entry = numerator
            .div(&denominator)
            .map_err(|_| DegenerateTableEntry { n: s, k: 1 })?;
        level.push(entry);
    }

    for j in 1..k {
        let mut next = Vec::with_capacity(2 * (k - j - 1) + 1);
        for i in 0..=2 * (k - j - 1) {
            let s = n + i;
            let fail = DegenerateTableEntry { n: s, k: j + 1 };
            let gamma_hi = &coefficients[s + 2 * j + 2];
            let gamma_lo = &coefficients[s + 2 * j + 1];
            let z_phi_s1 = level[i + 1].shift_up(1);
            // Forward differences δφ^{(s)} = zφ^{(s+1)} − φ^{(s)}.
            let delta_s = z_phi_s1.sub(&level[i]);
            let delta_s1 = level[i + 2].shift_up(1).sub(&level[i + 1]);
            let a = delta_s1.add_constant(gamma_hi);
            let b = delta_s.add_constant(gamma_lo);
            let c = z_phi_s1.sub(&below[i + 2]).add_constant(gamma_lo);
            let alpha = a.div(&b).map_err(|_| fail)?.sub(&a.div(&c).map_err(|_| fail)?);
            let beta = one_series
                .div(&a)
                .map_err(|_| fail)?
                .sub(&one_series.div(&b).map_err(|_| fail)?.shift_up(1))
                .add(&one_series.div(&c).map_err(|_| fail)?.shift_up(1));
            let update = alpha.div(&beta).map_err(|_| fail)?;
            next.push(level[i + 2].add(&update));
        }
        below = core::mem::replace(&mut level, next);
    }
    let _ = below;
    Ok(PhiFunction { n, k, expansion: level.into_iter().next().expect("level k is nonempty") })
}

/// One predicted coefficient, with the truth beside it when available.
#[derive(Clone, Debug)]
pub struct PredictionRecord<T> {
    /// Index (into the `γ` list) of the coefficient being predicted.
    pub target_index: usize,
    pub predicted: T,
    /// True coefficient, when the input list reaches far enough.
    pub truth: Option<T>,
    /// `(predicted − truth) / truth`, when the truth is known and nonzero.
    pub relative_error: Option<T>,
}

fn make_record<T: Scalar>(
    target_index: usize,
    predicted: T,
    coefficients: &[T],
) -> PredictionRecord<T> {
    let truth = coefficients.get(target_index).cloned();
    let relative_error = truth.as_ref().and_then(|t| {
        if t.is_negligible() {
            None
        } else {
            Some(predicted.sub(t).div(t))
        }
    });
    PredictionRecord { target_index, predicted, truth, relative_error }
}

/// Reads predictions for `γ_{n+2k+ν+1}`, `ν = 0 .. count`, off a
/// remainder expansion, pairing each with the truth where the
/// coefficient list reaches that far.
pub fn predict_coefficients<T: Scalar>(
    phi: &PhiFunction<T>,
    coefficients: &[T],
    count: usize,
) -> Vec<PredictionRecord<T>> {
    assert!(
        count <= phi.expansion.order() + 1,
        "prediction count exceeds the remainder truncation window"
    );
    (0..count)
        .map(|nu| {
            make_record(phi.target_index(nu), phi.expansion.coeff(nu).clone(), coefficients)
        })
        .collect()
}

/// The numeric prediction scheme: the remainder recursion at `z = 0`.
///
/// Returns `g_{2j}^{(base)}` for `j = 0 ..= k_max` — the first-term
/// predictions from every even column along one superscript.
fn g_sweep<T: Scalar>(
    coefficients: &[T],
    base: usize,
    k_max: usize,
) -> Result<Vec<T>, ZeroDenominator> {
    assert!(
        coefficients.len() > base + 2 * k_max,
        "numeric scheme needs coefficients through index base + 2·k_max"
    );
    let zero = coefficients[0].zero_like();
    let mut out = Vec::with_capacity(k_max + 1);
    out.push(zero.clone());
    if k_max == 0 {
        return Ok(out);
    }
    let mut below: Vec<T> = vec![zero; 2 * k_max + 1];
    let mut level: Vec<T> = Vec::with_capacity(2 * (k_max - 1) + 1);
    for i in 0..=2 * (k_max - 1) {
        let s = base + i;
        let head = &coefficients[s + 2];
        let den = &coefficients[s + 1];
        if den.is_negligible() {
            return Err(ZeroDenominator { n: s, k: 1 });
        }
        level.push(head.mul(head).div(den));
    }
    out.push(level[0].clone());
    for j in 1..k_max {
        let mut next = Vec::with_capacity(2 * (k_max - j - 1) + 1);
        for i in 0..=2 * (k_max - j - 1) {
            let s = base + i;
            let gamma_hi = &coefficients[s + 2 * j + 2];
            let gamma_lo = &coefficients[s + 2 * j + 1];
            let num = gamma_hi.sub(&level[i + 1]);
            let num_sq = num.mul(&num);
            let den_direct = gamma_lo.sub(&level[i]);
            let den_cross = gamma_lo.sub(&below[i + 2]);
            if den_direct.is_negligible() || den_cross.is_negligible() {
                return Err(ZeroDenominator { n: s, k: j + 1 });
            }
            next.push(
                level[i + 2]
                    .add(&num_sq.div(&den_direct))
                    .sub(&num_sq.div(&den_cross)),
            );
        }
        below = core::mem::replace(&mut level, next);
        out.push(level[0].clone());
    }
    Ok(out)
}

/// Predicts the first coefficient beyond the fitted window of the
/// column-`2k`, superscript-`n` table entry: `g_0^{(n,2k)}`, estimating
/// `γ_{n+2k+1}`.
pub fn first_prediction<T: Scalar>(
    coefficients: &[T],
    n: usize,
    k: usize,
) -> Result<T, ZeroDenominator> {
    let mut sweep = g_sweep(coefficients, n, k)?;
    Ok(sweep.pop().expect("sweep holds k_max + 1 entries"))
}

/// First-term predictions along the staircase schedule: row `n` uses
/// the entry in column `2⌊n/2⌋` with superscript `n mod 2`, predicting
/// `γ_{n+1}`. Returns records for `n = 2 ..= n_max` (the first two rows
/// predict from an empty column and are uninformative).
///
/// The whole sweep costs two quadratic dynamic programs — one per
/// parity — regardless of how many rows are reported.
pub fn staircase_prediction_errors<T: Scalar>(
    coefficients: &[T],
    n_max: usize,
) -> Result<Vec<PredictionRecord<T>>, ZeroDenominator> {
    assert!(n_max >= 2, "the schedule starts at row 2");
    assert!(
        coefficients.len() > n_max,
        "row n_max needs coefficients through index n_max"
    );
    let even = g_sweep(coefficients, 0, n_max / 2)?;
    let odd = g_sweep(coefficients, 1, (n_max - 1) / 2)?;
    let mut out = Vec::with_capacity(n_max - 1);
    for n in 2..=n_max {
        let g = &[&even, &odd][n % 2][n / 2];
        out.push(make_record(n + 1, g.clone(), coefficients));
    }
    Ok(out)
}

/// Violation lists for the moment-bound check on predictions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PredictionBoundEvidence {
    /// Records examined.
    pub checked: usize,
    /// Target indices whose prediction has the wrong sign.
    pub sign_violations: Vec<usize>,
    /// Target indices where |predicted| exceeds |truth|.
    pub magnitude_violations: Vec<usize>,
}

impl PredictionBoundEvidence {
    /// No violations of either kind.
    pub fn is_clean(&self) -> bool {
        self.sign_violations.is_empty() && self.magnitude_violations.is_empty()
    }
}

/// Checks each prediction against the moment bounds: in moment view
/// (`μ_ν = (−1)^ν γ_ν`) a predicted moment must satisfy
/// `0 ≤ predicted ≤ true`. Magnitude is only checkable where the truth
/// is known; sign is always checkable.
pub fn check_prediction_bound<T: Scalar>(
    records: &[PredictionRecord<T>],
) -> PredictionBoundEvidence {
    let mut evidence = PredictionBoundEvidence { checked: records.len(), ..Default::default() };
    for record in records {
        let flip = record.target_index % 2 == 1;
        let moment_of = |v: &T| if flip { v.neg() } else { v.clone() };
        let predicted = moment_of(&record.predicted);
        if predicted.is_negative_value() {
            evidence.sign_violations.push(record.target_index);
            continue;
        }
        if let Some(truth) = &record.truth {
            if moment_of(truth).sub(&predicted).is_negative_value() {
                evidence.magnitude_violations.push(record.target_index);
            }
        }
    }
    evidence
}
