//! The exit gate for the toolkit's shipped claims: ten end-to-end
//! checks, one test per claim, each finishing with a single
//! `criterion N: pass` line carrying its measured figures.
//!
//! Frozen reference rows (exact low-order coefficients, the published
//! summation/prediction/error tables) live in `reference.rs`.  Printed
//! values are compared numerically: the reference string is parsed to
//! an exact rational and the computed value must sit within 0.50001
//! units in the last printed digit — i.e. every printed digit must
//! match up to the final rounding.
//!
//! Shared state: both coefficient lists are generated once at order
//! 193 behind `OnceLock`s.  Timed criteria start their clocks *after*
//! forcing that initialization, so each measures only its own work.

mod reference;

use std::str::FromStr;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use padesum_core::oscillator::{asymptotic_reference, map_coupling};
use padesum_core::pade::{compensated_partial_sums_real, direct_pade, partial_sums, EpsilonTable};
use padesum_core::predict::{
    check_prediction_bound, phi_series, predict_coefficients, staircase_prediction_errors,
};
use padesum_core::stieltjes::{
    check_nesting, hankel_determinant, run_diagnostics, CarlemanTrend, DiagnosticsOptions,
};
use padesum_core::{BigReal, ExactRational, Hamiltonian, PerturbationSeries};

/// Coefficients available to every check.
const DEEP_ORDER: usize = 193;
/// Working float precision in decimal digits.
const PRECISION: u32 = 600;

fn series(h: Hamiltonian) -> &'static PerturbationSeries {
    static CUBIC: OnceLock<PerturbationSeries> = OnceLock::new();
    static QUARTIC: OnceLock<PerturbationSeries> = OnceLock::new();
    let slot = match h {
        Hamiltonian::PtCubic => &CUBIC,
        Hamiltonian::Quartic => &QUARTIC,
    };
    slot.get_or_init(|| PerturbationSeries::generate(h, DEEP_ORDER))
}

fn rat(text: &str) -> ExactRational {
    ExactRational::from_str(text).expect("literal rationals parse")
}

fn ten_pow(e: i64) -> ExactRational {
    rat("10").pow(e)
}

/// Canonical couplings: the expansion variable is the square of 1/7 on
/// the cubic side and its image 40/49 on the quartic side.
fn canonical_coupling(h: Hamiltonian) -> ExactRational {
    match h {
        Hamiltonian::PtCubic => rat("1/49"),
        Hamiltonian::Quartic => rat("40/49"),
    }
}

fn shift_coefficients_real(h: Hamiltonian) -> Vec<BigReal> {
    series(h)
        .shift_coefficients()
        .iter()
        .map(|g| BigReal::from_rational(g, PRECISION))
        .collect()
}

/// Parses a printed decimal — `-0.ddd...e±EEE` or fixed-point — into
/// its exact value and one unit in its last printed digit.
fn parse_printed(text: &str) -> (ExactRational, ExactRational) {
    let (mantissa, exponent) = match text.split_once('e') {
        Some((m, e)) => (m, i64::from_str(e).expect("exponent parses")),
        None => (text, 0),
    };
    let negative = mantissa.starts_with('-');
    let unsigned = mantissa.trim_start_matches('-');
    let (int_part, frac_part) = unsigned.split_once('.').unwrap_or((unsigned, ""));
    let digits = format!("{int_part}{frac_part}");
    let ulp = ten_pow(exponent - frac_part.len() as i64);
    let magnitude = &rat(&digits) * &ulp;
    let value = if negative { -&magnitude } else { magnitude };
    (value, ulp)
}

/// Half-ulp agreement with a printed reference value.
fn matches_printed(ours: &ExactRational, printed: &str) -> bool {
    let (value, ulp) = parse_printed(printed);
    let diff = (ours - &value).abs();
    let margin = &ulp * &rat("50001/100000");
    !(&margin - &diff).is_negative()
}

fn real_matches_printed(ours: &BigReal, printed: &str) -> bool {
    matches_printed(&ours.to_rational(), printed)
}

const BOTH: [Hamiltonian; 2] = [Hamiltonian::PtCubic, Hamiltonian::Quartic];

#[test]
fn criterion_01_low_order_coefficients_exact_and_fast() {
    let clock = Instant::now();
    let fresh = PerturbationSeries::generate(Hamiltonian::PtCubic, 10);
    let elapsed = clock.elapsed();
    for &(n, text) in reference::LOW_ORDER_COEFFICIENTS {
        assert_eq!(fresh.coefficient(n), &rat(text), "coefficient {n}");
    }
    assert!(elapsed < Duration::from_secs(1), "low-order generation took {elapsed:?}");
    println!("criterion 1: pass — 10 exact coefficients in {elapsed:.2?}");
}

#[test]
fn criterion_02_deep_generation_signs_and_integrality() {
    let clock = Instant::now();
    for h in BOTH {
        let s = series(h);
        assert_eq!(s.max_order(), DEEP_ORDER);
        for n in 1..=DEEP_ORDER {
            let c = s.coefficient(n);
            let expected_sign = if n % 2 == 1 { 1 } else { -1 };
            assert_eq!(c.signum(), expected_sign, "{} coefficient {n} sign", h.label());
            if h == Hamiltonian::PtCubic {
                assert!(c.is_integer(), "cubic-side coefficient {n} must be an integer");
            }
        }
    }
    println!(
        "criterion 2: pass — both series at order {DEEP_ORDER}, alternating signs, \
         integral cubic-side values (shared generation ready after {:.2?})",
        clock.elapsed()
    );
}

#[test]
fn criterion_03_summation_rows_match_to_printed_digits() {
    for h in BOTH {
        series(h);
    }
    let clock = Instant::now();
    let mut exact = Vec::new();
    let mut stairs = Vec::new();
    for h in BOTH {
        let z = canonical_coupling(h);
        exact.push(partial_sums(series(h), &z, DEEP_ORDER - 1).expect("enough coefficients"));
        let real = compensated_partial_sums_real(series(h), &z, DEEP_ORDER - 1, PRECISION).unwrap();
        let table = EpsilonTable::build(real);
        let stair: Vec<BigReal> = (0..DEEP_ORDER)
            .map(|n| table.staircase(n).cloned().expect("regular staircase entry"))
            .collect();
        stairs.push(stair);
    }
    for &(n, sum_c, sum_q, stair_c, stair_q) in reference::SUMMATION_ROWS {
        assert!(matches_printed(&exact[0][n], sum_c), "cubic partial sum, row {n}");
        assert!(matches_printed(&exact[1][n], sum_q), "quartic partial sum, row {n}");
        assert!(real_matches_printed(&stairs[0][n], stair_c), "cubic staircase, row {n}");
        assert!(real_matches_printed(&stairs[1][n], stair_q), "quartic staircase, row {n}");
    }
    let elapsed = clock.elapsed();
    assert!(elapsed < Duration::from_secs(300), "summation sweep took {elapsed:?}");
    println!(
        "criterion 3: pass — {} published rows match (3-digit sums, 15-digit staircase) in {:.2?}",
        reference::SUMMATION_ROWS.len(),
        elapsed
    );
}

#[test]
fn criterion_04_epsilon_table_equals_algebraic_solution() {
    for h in BOTH {
        series(h);
    }
    let clock = Instant::now();
    let mut checked = 0usize;
    for h in BOTH {
        let z = canonical_coupling(h);
        let gammas = series(h).shift_coefficients();
        let sums = partial_sums(series(h), &z, 80).expect("enough coefficients");
        let table = EpsilonTable::build(sums);
        for k in 0..=40usize {
            for n in 0..=(40 - k) {
                let eps = table
                    .approximant(k, n)
                    .unwrap_or_else(|| panic!("{} entry k={k} n={n} degenerate", h.label()));
                let solved = direct_pade(gammas, k + n, k)
                    .unwrap_or_else(|_| panic!("{} system k={k} n={n} singular", h.label()))
                    .eval(&z)
                    .expect("denominator nonzero at the coupling");
                assert_eq!(eps, &solved, "{} k={k} n={n}", h.label());
                checked += 1;
            }
        }
    }
    println!(
        "criterion 4: pass — {checked} exact table/solver agreements (both series) in {:.2?}",
        clock.elapsed()
    );
}

#[test]
fn criterion_05_staircase_nesting_never_violated() {
    for h in BOTH {
        series(h);
    }
    let clock = Instant::now();
    let lambdas = ["1/10", "1/7", "1/2", "1"];
    let mut couplings_checked = 0usize;
    for text in lambdas {
        let lambda = rat(text);
        for h in BOTH {
            let z = match h {
                Hamiltonian::PtCubic => &lambda * &lambda,
                Hamiltonian::Quartic => map_coupling(&lambda),
            };
            let real = compensated_partial_sums_real(series(h), &z, DEEP_ORDER - 1, PRECISION).unwrap();
            let table = EpsilonTable::build(real);
            let stair: Vec<BigReal> =
                (0..DEEP_ORDER).map_while(|n| table.staircase(n).cloned()).collect();
            assert_eq!(stair.len(), DEEP_ORDER, "{} lambda={text}: degenerate stage", h.label());
            let evidence = check_nesting(&stair);
            assert!(
                evidence.violations.is_empty(),
                "{} lambda={text}: {} nesting violations, first {:?}",
                h.label(),
                evidence.violations.len(),
                evidence.violations.first()
            );
            assert!(
                evidence.undecided.is_empty(),
                "{} lambda={text}: {} comparisons not decisive at {PRECISION} digits",
                h.label(),
                evidence.undecided.len()
            );
            couplings_checked += 1;
        }
    }
    println!(
        "criterion 5: pass — nesting clean over {} stages at {} series/coupling pairs in {:.2?}",
        DEEP_ORDER,
        couplings_checked,
        clock.elapsed()
    );
}

#[test]
fn criterion_06_prediction_tables_match_and_respect_bound() {
    for h in BOTH {
        series(h);
    }
    let clock = Instant::now();
    for h in BOTH {
        let gammas = shift_coefficients_real(h);
        let phi = phi_series(&gammas, 0, 33, 15).expect("regular remainder expansion");
        let records = predict_coefficients(&phi, &gammas, 16);
        let rows = match h {
            Hamiltonian::PtCubic => reference::CUBIC_PREDICTION_ROWS,
            Hamiltonian::Quartic => reference::QUARTIC_PREDICTION_ROWS,
        };
        assert_eq!(records.len(), rows.len());
        for (record, &(nu, predicted, truth)) in records.iter().zip(rows) {
            assert_eq!(record.target_index, 67 + nu);
            assert!(
                real_matches_printed(&record.predicted, predicted),
                "{} prediction row {nu}: got {:?}, want {predicted}",
                h.label(),
                record.predicted
            );
            let known = record.truth.as_ref().expect("truth available at this depth");
            assert!(real_matches_printed(known, truth), "{} truth row {nu}", h.label());
        }
        let bound = check_prediction_bound(&records);
        assert!(
            bound.is_clean(),
            "{} moment bound: sign {:?}, magnitude {:?}",
            h.label(),
            bound.sign_violations,
            bound.magnitude_violations
        );
    }
    println!(
        "criterion 6: pass — 16 prediction rows per series at 21 printed digits, \
         every prediction within the moment bound, in {:.2?}",
        clock.elapsed()
    );
}

#[test]
fn criterion_07_sweep_relative_errors_match_printed_digits() {
    for h in BOTH {
        series(h);
    }
    let clock = Instant::now();
    for h in BOTH {
        let gammas = shift_coefficients_real(h);
        let records = staircase_prediction_errors(&gammas, DEEP_ORDER - 2)
            .expect("no degenerate stage in the schedule");
        assert_eq!(records.len(), DEEP_ORDER - 3);
        for (row, record) in records.iter().enumerate() {
            let n = row + 2;
            let error = record
                .relative_error
                .as_ref()
                .unwrap_or_else(|| panic!("{} row {n} lacks a relative error", h.label()));
            assert!(error.is_negative(), "{} row {n}: error not negative", h.label());
        }
        let column = |row: &(usize, &'static str, &'static str)| match h {
            Hamiltonian::PtCubic => row.1,
            Hamiltonian::Quartic => row.2,
        };
        for row in reference::SWEEP_ERROR_ROWS {
            let record = &records[row.0 - 2];
            let error = record.relative_error.as_ref().unwrap();
            assert!(
                real_matches_printed(error, column(row)),
                "{} sweep row {}: got {:?}, want {}",
                h.label(),
                row.0,
                error,
                column(row)
            );
        }
    }
    let elapsed = clock.elapsed();
    assert!(elapsed < Duration::from_secs(900), "prediction sweep took {elapsed:?}");
    println!(
        "criterion 7: pass — {} printed error rows match at 9 digits, all {} rows negative, \
         both series, in {:.2?}",
        reference::SWEEP_ERROR_ROWS.len(),
        DEEP_ORDER - 3,
        elapsed
    );
}

#[test]
fn criterion_08_moment_determinants_strictly_positive() {
    for h in BOTH {
        series(h);
    }
    let clock = Instant::now();
    let mut checked = 0usize;
    for h in BOTH {
        let moments = series(h).moments().expect("alternating signs give positive moments");
        for m in [0usize, 1] {
            for n in 0..=20usize {
                let det = hankel_determinant(&moments, m, n)
                    .unwrap_or_else(|_| panic!("{} determinant ({m},{n}) out of data", h.label()));
                assert!(
                    det.is_positive(),
                    "{} determinant ({m},{n}) is {det}",
                    h.label()
                );
                checked += 1;
            }
        }
    }
    println!(
        "criterion 8: pass — {checked} moment-matrix determinants exactly positive in {:.2?}",
        clock.elapsed()
    );
}

#[test]
fn criterion_09_growth_reference_brackets_every_coefficient() {
    for h in BOTH {
        series(h);
    }
    let clock = Instant::now();
    let digits = 40;
    let one = BigReal::from_u64(1, digits);
    let threshold = BigReal::from_rational(&rat("19/20"), digits);
    let mut summary = Vec::new();
    for h in BOTH {
        let mut min_all: Option<BigReal> = None;
        let mut max_all: Option<BigReal> = None;
        let mut min_tail: Option<BigReal> = None;
        for n in 1..=DEEP_ORDER {
            let magnitude = BigReal::from_rational(&series(h).coefficient(n).abs(), digits);
            let ratio = magnitude.div(&asymptotic_reference(h, n as u64, digits));
            assert!(ratio.signum() > 0, "{} ratio at {n} not positive", h.label());
            assert!(
                ratio.cmp_value(&one).is_lt(),
                "{} ratio at {n} reaches {:?}",
                h.label(),
                ratio
            );
            let keep_min = |slot: &mut Option<BigReal>, v: &BigReal| match slot {
                Some(m) if v.cmp_value(m).is_ge() => {}
                _ => *slot = Some(v.clone()),
            };
            let keep_max = |slot: &mut Option<BigReal>, v: &BigReal| match slot {
                Some(m) if v.cmp_value(m).is_le() => {}
                _ => *slot = Some(v.clone()),
            };
            keep_min(&mut min_all, &ratio);
            keep_max(&mut max_all, &ratio);
            if n >= 100 {
                keep_min(&mut min_tail, &ratio);
                assert!(
                    ratio.cmp_value(&threshold).is_gt(),
                    "{} ratio at {n} fell to {:?}",
                    h.label(),
                    ratio
                );
            }
        }
        summary.push(format!(
            "{}: ratio in [{}, {}], tail minimum {}",
            h.label(),
            min_all.unwrap().to_sci_string(6),
            max_all.unwrap().to_sci_string(6),
            min_tail.unwrap().to_sci_string(6)
        ));
    }
    println!(
        "criterion 9: pass — growth ratios inside (0, 1), above 0.95 from order 100 \
         ({}) in {:.2?}",
        summary.join("; "),
        clock.elapsed()
    );
}

#[test]
fn criterion_10_verdicts_identical_across_series() {
    for h in BOTH {
        series(h);
    }
    let clock = Instant::now();
    let options = DiagnosticsOptions::default();
    let mut lines = Vec::new();
    for text in ["1/10", "1/7", "1/2", "1"] {
        let lambda = rat(text);
        let cubic = run_diagnostics(series(Hamiltonian::PtCubic), &(&lambda * &lambda), &options);
        let quartic = run_diagnostics(series(Hamiltonian::Quartic), &map_coupling(&lambda), &options);
        let verdict = cubic.verdict();
        assert_eq!(verdict, quartic.verdict(), "verdicts split at lambda={text}");
        assert!(
            verdict.moments_alternate
                && verdict.nesting_ok
                && verdict.monotonicity_ok
                && verdict.hankel_ok,
            "battery not clean at lambda={text}: {verdict:?}"
        );
        assert_eq!(verdict.carleman_trend, CarlemanTrend::DivergentGrowth);
        lines.push(format!("lambda={text} agreed"));
    }
    println!(
        "criterion 10: pass — diagnostics verdicts identical and clean for both series \
         ({}) in {:.2?}",
        lines.join(", "),
        clock.elapsed()
    );
}
