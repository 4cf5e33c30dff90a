//! The four subcommands, each reduced to: load exact data, call the
//! computation crate, lay the results out as a [`Report`].
//!
//! Invariants:
//! * Commands never print; they return a report (and possibly write the
//!   cache file). Rendering and process exit are the caller's business.
//! * All numeric parameters cross into the computation crate as exact
//!   rationals; floats appear only in formatted output cells.
//! * Failures map onto the three-way error taxonomy: anything the user
//!   can fix by generating more coefficients is `Insufficient`,
//!   vanishing-denominator conditions are `Degenerate`, the rest is
//!   `General`.

use std::path::Path;

use padesum_core::oscillator::{Hamiltonian, PerturbationSeries};
use padesum_core::pade::{compensated_partial_sums_real, EpsilonTable};
use padesum_core::predict::{
    check_prediction_bound, phi_series, predict_coefficients, staircase_prediction_errors,
};
use padesum_core::rational::ExactRational;
use padesum_core::real::BigReal;
use padesum_core::stieltjes::{run_diagnostics, CarlemanTrend, DiagnosticsOptions};

use crate::cache::CoefficientCache;
use crate::config::{parse_rational, parse_row_spec, RunConfig};
use crate::emit::{fixed_point, sci, Report};
use crate::error::CliError;

/// Which coupling flag the summation command received.
pub enum CouplingArg {
    /// `--lambda p/q`: the cubic oscillator's coupling; the series
    /// variable is its square.
    Lambda(String),
    /// `--beta p/q`: the quartic oscillator's coupling, used directly.
    Beta(String),
}

/// Generates exact coefficients into `path`, or verifies the file that
/// is already there.
///
/// With an existing cache of the same oscillator and at least the
/// requested order, the file is left untouched: its checksum is
/// verified and the requested prefix is re-derived and compared.
pub fn cmd_generate(
    hamiltonian: Hamiltonian,
    order: usize,
    path: &Path,
) -> Result<Report, CliError> {
    let mut stored_order = order;
    let status = if path.exists() {
        let existing = CoefficientCache::load(path)?;
        if existing.hamiltonian == hamiltonian && existing.max_order() >= order {
            let fresh = PerturbationSeries::generate(hamiltonian, order);
            for (i, value) in fresh.shift_coefficients().iter().enumerate() {
                if &existing.coefficients[i] != value {
                    return Err(CliError::General(format!(
                        "cache {} disagrees with regenerated order {}; \
                         delete the file and generate again",
                        path.display(),
                        i + 1,
                    )));
                }
            }
            stored_order = existing.max_order();
            "verified"
        } else {
            let series = PerturbationSeries::generate(hamiltonian, order);
            CoefficientCache::from_series(&series).save(path)?;
            "replaced"
        }
    } else {
        let series = PerturbationSeries::generate(hamiltonian, order);
        CoefficientCache::from_series(&series).save(path)?;
        "written"
    };
    Ok(Report {
        title: "coefficient cache".into(),
        meta: vec![
            ("hamiltonian".into(), hamiltonian.label().into()),
            ("requested-order".into(), order.to_string()),
            ("stored-order".into(), stored_order.to_string()),
            ("cache".into(), path.display().to_string()),
            ("status".into(), status.into()),
        ],
        columns: Vec::new(),
        rows: Vec::new(),
    })
}

/// Builds the resummation table: partial sums in three-digit scientific
/// form beside staircase approximants in table fixed-point.
pub fn cmd_sum(
    config: &RunConfig,
    coupling: CouplingArg,
    rows: Option<&str>,
) -> Result<Report, CliError> {
    let cache = CoefficientCache::load_at_least(&config.cache, 1)?;
    let series = cache.series();
    let (flag, raw, z) = resolve_coupling(series.hamiltonian(), coupling)?;
    if raw.is_negative() {
        return Err(CliError::General(format!(
            "--{flag} must be nonnegative, got {raw}"
        )));
    }

    let top = series.max_order() - 1;
    let rows = match rows {
        Some(spec) => parse_row_spec(spec)?,
        None => (0..=top).collect(),
    };
    if let Some(&bad) = rows.iter().filter(|&&r| r > top).max() {
        return Err(CliError::Insufficient(format!(
            "row {bad} needs {} coefficients but cache {} holds {}; \
             regenerate with `padesum generate --hamiltonian {} --order {} --cache {}`",
            bad + 1,
            config.cache.display(),
            series.max_order(),
            series.hamiltonian().label(),
            bad + 1,
            config.cache.display(),
        )));
    }

    let needed = rows.iter().copied().max().unwrap_or(0);
    let sums = compensated_partial_sums_real(&series, &z, needed, config.precision)
        .expect("row bound was checked against the cache");
    let table = EpsilonTable::build(sums.clone());
    let report_rows = rows
        .iter()
        .map(|&n| {
            let approximant = table.staircase(n).expect("staircase stays inside the table");
            vec![n.to_string(), sci(&sums[n], 3), fixed_point(approximant)]
        })
        .collect();

    Ok(Report {
        title: "resummation of the energy-shift series".into(),
        meta: vec![
            ("hamiltonian".into(), series.hamiltonian().label().into()),
            (flag.into(), raw.to_string()),
            (series.hamiltonian().variable().into(), z.to_string()),
            ("precision".into(), config.precision.to_string()),
            ("orders-cached".into(), series.max_order().to_string()),
        ],
        columns: vec!["n".into(), "partial_sum".into(), "staircase".into()],
        rows: report_rows,
    })
}

fn resolve_coupling(
    hamiltonian: Hamiltonian,
    coupling: CouplingArg,
) -> Result<(&'static str, ExactRational, ExactRational), CliError> {
    match (hamiltonian, coupling) {
        (Hamiltonian::PtCubic, CouplingArg::Lambda(text)) => {
            let lambda = parse_rational(&text)?;
            let z = lambda.pow(2);
            Ok(("lambda", lambda, z))
        }
        (Hamiltonian::Quartic, CouplingArg::Beta(text)) => {
            let beta = parse_rational(&text)?;
            Ok(("beta", beta.clone(), beta))
        }
        (Hamiltonian::PtCubic, CouplingArg::Beta(_)) => Err(CliError::General(
            "a pt-cubic cache takes --lambda, not --beta".into(),
        )),
        (Hamiltonian::Quartic, CouplingArg::Lambda(_)) => Err(CliError::General(
            "a quartic cache takes --beta, not --lambda".into(),
        )),
    }
}

/// Runs the full diagnostics battery at each requested coupling.
///
/// Couplings are values of the oscillator's own parameter: `λ` for the
/// cubic (squared internally to the series variable), `β` for the
/// quartic (used directly).
pub fn cmd_diagnose(
    config: &RunConfig,
    couplings: &str,
    hankel_max: usize,
    monotonicity_max: Option<usize>,
) -> Result<Report, CliError> {
    let cache = CoefficientCache::load_at_least(&config.cache, 2)?;
    let series = cache.series();
    let len = series.max_order();

    let mut parsed = Vec::new();
    for piece in couplings.split(',') {
        let value = parse_rational(piece.trim())?;
        if !value.is_positive() {
            return Err(CliError::General(format!(
                "diagnostics need positive couplings, got {value}"
            )));
        }
        parsed.push(value);
    }

    // Keep the exact monotonicity sweep inside the cached data so no
    // probe is silently skipped: the widest row at degree m reads
    // coefficients through index 2m + 2.
    let monotonicity_cap = len.saturating_sub(3) / 2;
    let options = DiagnosticsOptions {
        precision: config.precision,
        hankel_n_max: hankel_max,
        monotonicity_m_max: monotonicity_max.unwrap_or(16).min(monotonicity_cap),
        ..DiagnosticsOptions::default()
    };

    let mut rows = Vec::new();
    let mut evidence = Vec::new();
    for value in &parsed {
        let z = match series.hamiltonian() {
            Hamiltonian::PtCubic => value.pow(2),
            Hamiltonian::Quartic => value.clone(),
        };
        let report = run_diagnostics(&series, &z, &options);
        let verdict = report.verdict();

        let moment_cell = match report.moment_sign_defect {
            None => ("pass", "signs alternate throughout".to_string()),
            Some(index) => ("fail", format!("first defect at term {index}")),
        };
        rows.push(check_row(value, "moment-signs", moment_cell.0, moment_cell.1));

        let nesting = &report.nesting;
        rows.push(check_row(
            value,
            "staircase-nesting",
            if verdict.nesting_ok { "pass" } else { "fail" },
            format!(
                "{} stages; {} violations; {} unresolved; {} ties",
                nesting.stages,
                nesting.violations.len(),
                nesting.undecided.len(),
                nesting.ties.len(),
            ),
        ));

        let monotonicity = &report.monotonicity;
        rows.push(check_row(
            value,
            "row-monotonicity",
            if verdict.monotonicity_ok { "pass" } else { "fail" },
            format!(
                "degrees through {}; {} row and {} cross violations; {} skipped",
                monotonicity.m_max,
                monotonicity.row_violations.len(),
                monotonicity.cross_violations.len(),
                monotonicity.skipped.len(),
            ),
        ));

        let positive = report.hankel_signs.iter().filter(|(_, s)| *s > 0).count();
        rows.push(check_row(
            value,
            "moment-determinants",
            if verdict.hankel_ok { "pass" } else { "fail" },
            format!("{positive} of {} positive", report.hankel_signs.len()),
        ));

        rows.push(check_row(
            value,
            "term-decay",
            match verdict.carleman_trend {
                CarlemanTrend::DivergentGrowth => "divergent-sum",
                CarlemanTrend::ConvergentTail => "convergent-tail",
                CarlemanTrend::Indeterminate => "indeterminate",
            },
            format!("log-log slope {:.4} on the tail", report.carleman_slope),
        ));

        evidence.push((value.clone(), report));
    }

    let mut meta = vec![
        ("hamiltonian".into(), series.hamiltonian().label().into()),
        ("orders-cached".into(), len.to_string()),
        ("precision".into(), config.precision.to_string()),
        ("hankel-max".into(), options.hankel_n_max.to_string()),
        ("monotonicity-max".into(), options.monotonicity_m_max.to_string()),
    ];
    // A compact verdict fingerprint per coupling lets runs over the two
    // oscillators be compared directly.
    for (value, report) in &evidence {
        let v = report.verdict();
        meta.push((
            format!("verdict[{value}]"),
            format!(
                "moments={} nesting={} monotonicity={} determinants={} decay={:?}",
                v.moments_alternate, v.nesting_ok, v.monotonicity_ok, v.hankel_ok,
                v.carleman_trend,
            ),
        ));
    }

    Ok(Report {
        title: "series-of-Stieltjes diagnostics".into(),
        meta,
        columns: vec![
            "coupling".into(),
            "check".into(),
            "outcome".into(),
            "detail".into(),
        ],
        rows,
    })
}

fn check_row(
    coupling: &ExactRational,
    check: &str,
    outcome: &str,
    detail: String,
) -> Vec<String> {
    vec![coupling.to_string(), check.into(), outcome.into(), detail]
}

/// Prediction settings: one expansion, or the full staircase sweep.
pub enum PredictMode {
    /// Expand the remainder of the entry at superscript `n`, column
    /// `2k`, and report `terms` predicted coefficients.
    Point { n: usize, k: usize, terms: usize },
    /// First-term predictions along the staircase, reported as relative
    /// errors over the requested rows.
    Sweep { rows: Option<String> },
}

/// Predicts unseen coefficients from the cached ones.
pub fn cmd_predict(config: &RunConfig, mode: PredictMode) -> Result<Report, CliError> {
    match mode {
        PredictMode::Point { n, k, terms } => {
            if terms == 0 {
                return Err(CliError::General("--terms must be at least 1".into()));
            }
            let cache = CoefficientCache::load_at_least(&config.cache, n + 2 * k + 1)?;
            let series = cache.series();
            let gammas: Vec<BigReal> = series
                .shift_coefficients()
                .iter()
                .map(|g| BigReal::from_rational(g, config.precision))
                .collect();
            let phi = phi_series(&gammas, n, k, terms - 1).map_err(|err| {
                CliError::Degenerate(format!("prediction failed: {err}"))
            })?;
            let records = predict_coefficients(&phi, &gammas, terms);
            let bound = check_prediction_bound(&records);

            let rows = records
                .iter()
                .map(|record| {
                    vec![
                        (record.target_index - (n + 2 * k + 1)).to_string(),
                        (record.target_index + 1).to_string(),
                        sci(&record.predicted, 21),
                        record.truth.as_ref().map(|t| sci(t, 21)).unwrap_or_default(),
                        record
                            .relative_error
                            .as_ref()
                            .map(|e| sci(e, 9))
                            .unwrap_or_default(),
                    ]
                })
                .collect();
            Ok(Report {
                title: "predicted series coefficients".into(),
                meta: vec![
                    ("hamiltonian".into(), series.hamiltonian().label().into()),
                    ("superscript".into(), n.to_string()),
                    ("column".into(), (2 * k).to_string()),
                    ("precision".into(), config.precision.to_string()),
                    (
                        "moment-bound".into(),
                        if bound.is_clean() {
                            "satisfied".into()
                        } else {
                            format!(
                                "{} sign and {} magnitude violations",
                                bound.sign_violations.len(),
                                bound.magnitude_violations.len(),
                            )
                        },
                    ),
                ],
                columns: vec![
                    "nu".into(),
                    "order".into(),
                    "predicted".into(),
                    "truth".into(),
                    "relative_error".into(),
                ],
                rows,
            })
        }
        PredictMode::Sweep { rows } => {
            let cache = CoefficientCache::load_at_least(&config.cache, 4)?;
            let series = cache.series();
            let top = series.max_order() - 2;
            let rows = match rows.as_deref() {
                Some(spec) => parse_row_spec(spec)?,
                None => (2..=top).collect(),
            };
            if let Some(&bad) = rows.iter().find(|&&r| r < 2) {
                return Err(CliError::General(format!(
                    "sweep rows start at 2, got {bad}"
                )));
            }
            if let Some(&bad) = rows.iter().filter(|&&r| r > top).max() {
                return Err(CliError::Insufficient(format!(
                    "sweep row {bad} needs {} coefficients but cache {} holds {}; \
                     regenerate with `padesum generate --hamiltonian {} --order {} --cache {}`",
                    bad + 2,
                    config.cache.display(),
                    series.max_order(),
                    series.hamiltonian().label(),
                    bad + 2,
                    config.cache.display(),
                )));
            }

            let gammas: Vec<BigReal> = series
                .shift_coefficients()
                .iter()
                .map(|g| BigReal::from_rational(g, config.precision))
                .collect();
            let n_hi = rows.iter().copied().max().expect("row spec is nonempty");
            let records = staircase_prediction_errors(&gammas, n_hi).map_err(|err| {
                CliError::Degenerate(format!("prediction sweep failed: {err}"))
            })?;
            let report_rows = rows
                .iter()
                .map(|&n| {
                    let record = &records[n - 2];
                    vec![
                        n.to_string(),
                        sci(&record.predicted, 21),
                        record
                            .relative_error
                            .as_ref()
                            .map(|e| sci(e, 9))
                            .unwrap_or_default(),
                    ]
                })
                .collect();
            Ok(Report {
                title: "staircase first-prediction relative errors".into(),
                meta: vec![
                    ("hamiltonian".into(), series.hamiltonian().label().into()),
                    ("precision".into(), config.precision.to_string()),
                    ("orders-cached".into(), series.max_order().to_string()),
                ],
                columns: vec!["n".into(), "predicted".into(), "relative_error".into()],
                rows: report_rows,
            })
        }
    }
}
