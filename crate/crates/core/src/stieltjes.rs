//! Quantitative probes of Stieltjes-series behavior.
//!
//! A series `Σ (−1)^ν μ_ν z^ν` whose `μ_ν` are moments of a
//! nondecreasing measure on `[0, ∞)` obeys a battery of hard
//! inequalities. None of them can be *proven* from finitely many
//! coefficients, but each can be falsified — so the probes here collect
//! evidence lists, and a verdict is a pure function of that evidence:
//!
//! * [`check_nesting`]: along the staircase schedule, odd-stage values
//!   are lower bounds that strictly increase, even-stage values are
//!   upper bounds that strictly decrease, and every lower bound stays
//!   below the next upper bound.
//! * [`check_pade_monotonicity`]: fixed-offset approximant rows
//!   `{P_m^{m+j}}_m` fall for even `j`, rise for odd `j`, and satisfy
//!   the cross inequality `P_{m+1}^m ≥ P_m^{m+1}` — verified in exact
//!   arithmetic via the linear-system constructor.
//! * [`hankel_determinant`]: every determinant of the shifted moment
//!   matrices `[μ_{m+i+j}]` must be strictly positive.
//! * [`carleman_partial_sums`]: partial sums of `Σ μ_j^(−1/(2j))` must
//!   march toward infinity; with factorially growing moments the terms
//!   decay like `j^(−1/2)`, so the trend — never a boolean — is reported
//!   as the fitted log-log slope of the terms.
//!
//! Invariants:
//! * Comparison outcomes are exact for rational inputs; float-mode
//!   comparisons whose margin falls under `10^(−precision/2)` are never
//!   silently trusted — they are queued for exact recomputation and
//!   count against the verdict until resolved.
//! * Exact ties are recorded as ties, not violations (a degenerate
//!   measure produces equalities, which the inequalities permit).
//! * [`DiagnosticsReport::verdict`] is recomputed from evidence on
//!   demand and never stored stale.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use malachite_base::num::arithmetic::traits::Lcm;
use malachite_base::num::basic::traits::{One, Zero};
use malachite_nz::integer::Integer;
use malachite_nz::natural::Natural;

use crate::oscillator::PerturbationSeries;
use crate::pade::{compensated_partial_sums_real, direct_pade, partial_sums, EpsilonTable};
use crate::rational::ExactRational;
use crate::real::BigReal;
use crate::scalar::Scalar;

/// A moment-matrix determinant was requested past the available data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InsufficientMoments {
    /// Highest moment index the determinant needs.
    pub needed_index: usize,
    /// Number of moments available.
    pub available: usize,
}

impl fmt::Display for InsufficientMoments {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "determinant needs moment index {} but only {} moments are available",
            self.needed_index, self.available
        )
    }
}

/// Exact determinant of the `(n+1)×(n+1)` moment matrix `[μ_{m+i+j}]`.
pub fn hankel_determinant(
    moments: &[ExactRational],
    m: usize,
    n: usize,
) -> Result<ExactRational, InsufficientMoments> {
    if m + 2 * n >= moments.len() {
        return Err(InsufficientMoments { needed_index: m + 2 * n, available: moments.len() });
    }
    let size = n + 1;
    let mut scale = Natural::ONE;
    let rows: Vec<Vec<Integer>> = (0..size)
        .map(|i| {
            let row: Vec<ExactRational> =
                (0..size).map(|j| moments[m + i + j].clone()).collect();
            let mut row_scale = Natural::ONE;
            for v in &row {
                if !v.is_zero() {
                    row_scale = row_scale.lcm(v.denominator());
                }
            }
            scale *= &row_scale;
            row.iter()
                .map(|v| {
                    v.numerator()
                        * Integer::from(&malachite_base::num::arithmetic::traits::DivExact::
                            div_exact(&row_scale, v.denominator()))
                })
                .collect()
        })
        .collect();
    Ok(ExactRational::new(bareiss_determinant(rows), Integer::from(&scale)))
}

/// Fraction-free determinant of an integer matrix.
fn bareiss_determinant(mut a: Vec<Vec<Integer>>) -> Integer {
    use malachite_base::num::arithmetic::traits::DivExact;
    let size = a.len();
    if size == 0 {
        return Integer::ONE;
    }
    let mut sign = 1i32;
    let mut prev = Integer::ONE;
    for col in 0..size {
        let Some(pivot_row) = (col..size).find(|&r| a[r][col] != 0) else {
            return Integer::ZERO;
        };
        if pivot_row != col {
            a.swap(col, pivot_row);
            sign = -sign;
        }
        let pivot = a[col][col].clone();
        for r in col + 1..size {
            for c in col + 1..size {
                let t = &pivot * &a[r][c] - &a[r][col] * &a[col][c];
                a[r][c] = t.div_exact(&prev);
            }
            a[r][col] = Integer::ZERO;
        }
        prev = pivot;
    }
    let det = a[size - 1][size - 1].clone();
    if sign < 0 { -det } else { det }
}

/// Which inequality a queued comparison belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NestingKind {
    /// Even-stage (upper-bound) sequence must strictly decrease.
    UpperDescent,
    /// Odd-stage (lower-bound) sequence must strictly increase.
    LowerAscent,
    /// Each lower bound must not exceed the following upper bound.
    Bracket,
}

/// One inequality instance, identified by the later staircase stage it
/// touches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NestingComparison {
    pub kind: NestingKind,
    /// Later of the two staircase stages compared.
    pub stage: usize,
}

/// Outcome lists of the staircase bound checks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NestingEvidence {
    /// Number of staircase stages examined.
    pub stages: usize,
    /// Comparisons that came out the wrong way, decisively.
    pub violations: Vec<NestingComparison>,
    /// Comparisons that were exact ties (permitted, recorded).
    pub ties: Vec<NestingComparison>,
    /// Float comparisons too close to call at the working precision;
    /// they await exact recomputation and count against the verdict
    /// until resolved.
    pub undecided: Vec<NestingComparison>,
}

impl NestingEvidence {
    /// No decisive violations and nothing left undecided.
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty() && self.undecided.is_empty()
    }
}

fn classify<T: Scalar>(
    evidence: &mut NestingEvidence,
    kind: NestingKind,
    stage: usize,
    should_be_positive: &T,
) {
    let cmp = NestingComparison { kind, stage };
    if !should_be_positive.is_decisive_margin() {
        evidence.undecided.push(cmp);
    } else if should_be_positive.is_zero() {
        evidence.ties.push(cmp);
    } else if should_be_positive.is_negative_value() {
        evidence.violations.push(cmp);
    }
}

fn run_nesting_comparisons<T: Scalar>(
    values: &[T],
    mut probe: impl FnMut(NestingKind, usize, &T),
) {
    // Upper bounds live at even stages, lower bounds at odd stages.
    let mut stage = 2;
    while stage < values.len() {
        probe(NestingKind::UpperDescent, stage, &values[stage - 2].sub(&values[stage]));
        if stage + 1 < values.len() {
            probe(NestingKind::LowerAscent, stage + 1, &values[stage + 1].sub(&values[stage - 1]));
        }
        stage += 2;
    }
    let mut odd = 1;
    while odd + 1 < values.len() {
        probe(NestingKind::Bracket, odd + 1, &values[odd + 1].sub(&values[odd]));
        odd += 2;
    }
}

/// Checks the two-sided bound structure over staircase values
/// `values[n]` for stages `n = 0..values.len()`.
pub fn check_nesting<T: Scalar>(values: &[T]) -> NestingEvidence {
    let mut evidence = NestingEvidence { stages: values.len(), ..Default::default() };
    run_nesting_comparisons(values, |kind, stage, margin| {
        classify(&mut evidence, kind, stage, margin);
    });
    evidence
}

/// Re-runs every undecided comparison on exact staircase values,
/// migrating each to its decisive list. Comparisons whose stages exceed
/// the exact data stay undecided.
pub fn resolve_nesting_exact(evidence: &mut NestingEvidence, exact_values: &[ExactRational]) {
    let pending = core::mem::take(&mut evidence.undecided);
    let mut exact = NestingEvidence::default();
    run_nesting_comparisons(exact_values, |kind, stage, margin| {
        classify(&mut exact, kind, stage, margin);
    });
    for cmp in pending {
        if cmp.stage >= exact_values.len() {
            evidence.undecided.push(cmp);
        } else if exact.violations.contains(&cmp) {
            evidence.violations.push(cmp);
        } else if exact.ties.contains(&cmp) {
            evidence.ties.push(cmp);
        }
        // Otherwise the exact margin was positive: the inequality holds.
    }
}

/// Bracket widths `upper − lower` after each odd stage; for a series
/// with the claimed bound structure they are positive and non-increasing.
pub fn bracket_widths<T: Scalar>(values: &[T]) -> Vec<T> {
    let mut out = Vec::new();
    let mut n = 1;
    while n < values.len() {
        // After stage n (odd), the freshest upper bound sits at n−1.
        out.push(values[n - 1].sub(&values[n]));
        n += 2;
    }
    out
}

/// One skipped or flagged point in the approximant-row checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RowPoint {
    /// Numerator-minus-denominator degree offset of the row.
    pub offset: isize,
    /// Denominator degree of the (later) approximant involved.
    pub m: usize,
}

/// Outcome of the fixed-offset approximant-row checks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MonotonicityEvidence {
    /// Highest denominator degree examined.
    pub m_max: usize,
    /// Row offsets examined.
    pub offsets: Vec<isize>,
    /// Decisive wrong-direction steps in a row.
    pub row_violations: Vec<RowPoint>,
    /// Cross-inequality failures, keyed by the smaller degree `m`.
    pub cross_violations: Vec<usize>,
    /// Exact ties (permitted, recorded).
    pub ties: Vec<RowPoint>,
    /// Points skipped because the linear system was singular or a
    /// denominator vanished at the coupling.
    pub skipped: Vec<RowPoint>,
}

impl MonotonicityEvidence {
    /// No decisive violations anywhere.
    pub fn is_clean(&self) -> bool {
        self.row_violations.is_empty() && self.cross_violations.is_empty()
    }
}

/// Values `P_m^{m+offset}(z)` for `m = 0..=m_max` (entries with negative
/// numerator degree, a singular system, or a denominator zero are
/// `None`).
pub fn pade_row_values(
    coefficients: &[ExactRational],
    offset: isize,
    z: &ExactRational,
    m_max: usize,
) -> Vec<Option<ExactRational>> {
    (0..=m_max)
        .map(|m| {
            let l = m as isize + offset;
            if l < 0 {
                return None;
            }
            let l = l as usize;
            if l + m + 1 > coefficients.len() {
                return None;
            }
            direct_pade(coefficients, l, m).ok().and_then(|p| p.eval(z))
        })
        .collect()
}

/// Exact-arithmetic check that each requested approximant row moves the
/// right way with growing degree, plus the cross inequality between the
/// two rows adjacent to the diagonal.
pub fn check_pade_monotonicity(
    coefficients: &[ExactRational],
    z: &ExactRational,
    m_max: usize,
    offsets: &[isize],
) -> MonotonicityEvidence {
    assert!(z.is_positive(), "the bound structure needs a coupling > 0");
    let mut evidence = MonotonicityEvidence {
        m_max,
        offsets: offsets.to_vec(),
        ..Default::default()
    };
    let mut sub_diag: Vec<Option<ExactRational>> = Vec::new();
    let mut super_diag: Vec<Option<ExactRational>> = Vec::new();
    for &offset in offsets {
        let row = pade_row_values(coefficients, offset, z, m_max);
        for (m, slot) in row.iter().enumerate() {
            if slot.is_none() && m as isize + offset >= 0 {
                evidence.skipped.push(RowPoint { offset, m });
            }
        }
        for m in 1..row.len() {
            let (Some(prev), Some(cur)) = (&row[m - 1], &row[m]) else { continue };
            // Even offsets fall, odd offsets rise.
            let margin =
                if offset.rem_euclid(2) == 0 { prev - cur } else { cur - prev };
            let point = RowPoint { offset, m };
            match margin.signum() {
                0 => evidence.ties.push(point),
                -1 => evidence.row_violations.push(point),
                _ => {}
            }
        }
        if offset == -1 {
            sub_diag = row.clone();
        }
        if offset == 1 {
            super_diag = row.clone();
        }
    }
    // Cross inequality: the (m+1, m) entry dominates the (m, m+1) entry.
    for m in 0..m_max {
        let (Some(above), Some(below)) =
            (sub_diag.get(m + 1).cloned().flatten(), super_diag.get(m).cloned().flatten())
        else {
            continue;
        };
        match (&above - &below).signum() {
            -1 => evidence.cross_violations.push(m),
            0 => evidence.ties.push(RowPoint { offset: -1, m: m + 1 }),
            _ => {}
        }
    }
    evidence
}

/// Terms `μ_j^(−1/(2j))` for `j = 1..=j_max`, each correctly rounded to
/// `digits` significant digits.
pub fn carleman_terms(
    moments: &[ExactRational],
    j_max: usize,
    digits: u32,
) -> Vec<BigReal> {
    assert!(j_max < moments.len(), "terms need moments through index j_max");
    let work = digits + 10;
    (1..=j_max)
        .map(|j| {
            let mu = &moments[j];
            assert!(mu.is_positive(), "moment {j} is not positive");
            BigReal::from_rational(mu, work)
                .nth_root(2 * j as u64)
                .recip()
                .to_precision(digits)
        })
        .collect()
}

/// Partial sums of the moment-decay series; strictly increasing because
/// every term is positive.
pub fn carleman_partial_sums(
    moments: &[ExactRational],
    j_max: usize,
    digits: u32,
) -> Vec<BigReal> {
    let terms = carleman_terms(moments, j_max, digits + 5);
    let mut out = Vec::with_capacity(terms.len());
    let mut acc = BigReal::zero(digits + 5);
    for t in &terms {
        acc = acc.add(t);
        out.push(acc.to_precision(digits));
    }
    out
}

/// Least-squares slope of `log term_j` against `log j` over
/// `j ∈ [j_lo, j_hi]` (1-based terms). Factorially growing moments give
/// a slope near −1/2 — terms shrink too slowly for the sum to converge.
pub fn carleman_term_slope(terms: &[BigReal], j_lo: usize, j_hi: usize) -> f64 {
    assert!(j_lo >= 1 && j_lo < j_hi && j_hi <= terms.len(), "bad slope window");
    let mut xs = 0.0f64;
    let mut ys = 0.0f64;
    let mut xx = 0.0f64;
    let mut xy = 0.0f64;
    let count = (j_hi - j_lo + 1) as f64;
    for j in j_lo..=j_hi {
        let x = libm::log(j as f64);
        let t = &terms[j - 1];
        // log(term) from the decimal parts: ln(mag) + exp·ln(10).
        let y = libm::log(t.to_f64());
        xs += x;
        ys += y;
        xx += x * x;
        xy += x * y;
    }
    (count * xy - xs * ys) / (count * xx - xs * xs)
}

/// Categorical reading of the term-decay slope.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CarlemanTrend {
    /// Terms decay slower than `1/j`: the sum is on a divergent march.
    DivergentGrowth,
    /// Terms decay faster than `1/j`: the sum looks summable.
    ConvergentTail,
    /// Too close to the boundary to categorize.
    Indeterminate,
}

/// Categorizes a fitted term slope.
pub fn categorize_carleman_slope(slope: f64) -> CarlemanTrend {
    if slope > -0.75 {
        CarlemanTrend::DivergentGrowth
    } else if slope < -1.25 {
        CarlemanTrend::ConvergentTail
    } else {
        CarlemanTrend::Indeterminate
    }
}

/// Per-test pass/fail summary — a pure function of the evidence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub moments_alternate: bool,
    pub nesting_ok: bool,
    pub monotonicity_ok: bool,
    pub hankel_ok: bool,
    pub carleman_trend: CarlemanTrend,
}

/// Tuning knobs for a full diagnostics run.
#[derive(Clone, Debug)]
pub struct DiagnosticsOptions {
    /// Float precision (decimal digits) for the staircase sweep.
    pub precision: u32,
    /// Highest staircase stage to examine (capped by the coefficient
    /// count).
    pub nesting_stage_max: Option<usize>,
    /// Stage cap for exact escalation of undecided float comparisons.
    pub escalation_stage_max: usize,
    /// Highest denominator degree in the approximant-row checks.
    pub monotonicity_m_max: usize,
    /// Row offsets for the approximant-row checks.
    pub monotonicity_offsets: Vec<isize>,
    /// Moment-matrix shifts to test.
    pub hankel_shifts: Vec<usize>,
    /// Largest moment-matrix order `n` to test.
    pub hankel_n_max: usize,
    /// Precision for the moment-decay terms.
    pub carleman_digits: u32,
}

impl Default for DiagnosticsOptions {
    fn default() -> Self {
        DiagnosticsOptions {
            precision: 600,
            nesting_stage_max: None,
            escalation_stage_max: 120,
            monotonicity_m_max: 20,
            monotonicity_offsets: vec![-1, 0, 1, 2],
            hankel_shifts: vec![0, 1],
            hankel_n_max: 20,
            carleman_digits: 50,
        }
    }
}

/// Everything a diagnostics run measured, plus the inputs that shaped it.
#[derive(Clone, Debug)]
pub struct DiagnosticsReport {
    pub series_label: &'static str,
    pub coupling: ExactRational,
    pub nesting: NestingEvidence,
    /// Bracket widths after each odd stage, for trend inspection.
    pub bracket_widths: Vec<BigReal>,
    pub monotonicity: MonotonicityEvidence,
    /// `((shift, order), determinant sign)` for every tested matrix.
    pub hankel_signs: Vec<((usize, usize), i8)>,
    pub carleman_sums: Vec<BigReal>,
    pub carleman_slope: f64,
    /// Index of the first moment breaking sign alternation, if any.
    pub moment_sign_defect: Option<usize>,
}

impl DiagnosticsReport {
    /// Collapses the evidence into the per-test summary.
    pub fn verdict(&self) -> Verdict {
        Verdict {
            moments_alternate: self.moment_sign_defect.is_none(),
            nesting_ok: self.nesting.is_clean(),
            monotonicity_ok: self.monotonicity.is_clean(),
            hankel_ok: !self.hankel_signs.is_empty()
                && self.hankel_signs.iter().all(|(_, sign)| *sign > 0),
            carleman_trend: categorize_carleman_slope(self.carleman_slope),
        }
    }
}

/// Runs the whole battery against one series at one coupling.
///
/// The staircase sweep runs in float mode at the configured precision;
/// comparisons whose margin is indecisive there are recomputed exactly
/// (up to the escalation stage cap). Approximant-row and determinant
/// checks are exact throughout.
pub fn run_diagnostics(
    series: &PerturbationSeries,
    coupling: &ExactRational,
    options: &DiagnosticsOptions,
) -> DiagnosticsReport {
    assert!(coupling.is_positive(), "diagnostics need a coupling > 0");
    let top_stage = series.max_order() - 1;
    let stage_max = options.nesting_stage_max.map_or(top_stage, |s| s.min(top_stage));

    let sums = compensated_partial_sums_real(series, coupling, stage_max, options.precision)
        .expect("stage cap never exceeds the coefficient count");
    let table = EpsilonTable::build(sums);
    let staircase: Vec<BigReal> = (0..=stage_max)
        .map_while(|n| table.staircase(n).cloned())
        .collect();
    let mut nesting = check_nesting(&staircase);
    if !nesting.undecided.is_empty() {
        let cap = options.escalation_stage_max.min(stage_max);
        let exact_sums = partial_sums(series, coupling, cap)
            .expect("escalation cap never exceeds the coefficient count");
        let exact_table = EpsilonTable::build(exact_sums);
        let exact_staircase: Vec<ExactRational> =
            (0..=cap).map_while(|n| exact_table.staircase(n).cloned()).collect();
        resolve_nesting_exact(&mut nesting, &exact_staircase);
    }
    let widths = bracket_widths(&staircase);

    let monotonicity = check_pade_monotonicity(
        series.shift_coefficients(),
        coupling,
        options.monotonicity_m_max,
        &options.monotonicity_offsets,
    );

    let (moments, moment_sign_defect) = match series.moments() {
        Ok(m) => (m, None),
        Err(defect) => {
            // Salvage the alternating prefix so the other probes can run.
            let coeffs = series.shift_coefficients();
            let prefix: Vec<ExactRational> = coeffs
                .iter()
                .take(defect.index)
                .enumerate()
                .map(|(nu, c)| if nu % 2 == 0 { c.clone() } else { -c })
                .collect();
            (prefix, Some(defect.index))
        }
    };

    let mut hankel_signs = Vec::new();
    for &shift in &options.hankel_shifts {
        for n in 0..=options.hankel_n_max {
            match hankel_determinant(&moments, shift, n) {
                Ok(det) => hankel_signs.push(((shift, n), det.signum() as i8)),
                Err(_) => break,
            }
        }
    }

    let j_max = moments.len().saturating_sub(1);
    let terms = carleman_terms(&moments, j_max, options.carleman_digits);
    let carleman_sums = carleman_partial_sums(&moments, j_max, options.carleman_digits);
    let j_hi = terms.len();
    let j_lo = (j_hi / 2).max(1);
    let carleman_slope =
        if j_hi >= j_lo + 4 { carleman_term_slope(&terms, j_lo, j_hi) } else { f64::NAN };

    DiagnosticsReport {
        series_label: series.hamiltonian().label(),
        coupling: coupling.clone(),
        nesting,
        bracket_widths: widths,
        monotonicity,
        hankel_signs,
        carleman_sums,
        carleman_slope,
        moment_sign_defect,
    }
}
