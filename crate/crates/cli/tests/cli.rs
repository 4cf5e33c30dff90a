//! End-to-end checks of the `padesum` binary: cache round trips, the
//! published summation cells, coupling-flag pairing, remediation hints
//! with their exit codes, and cell-for-cell agreement of the three
//! output formats.

use std::path::Path;
use std::process::{Command, Output};

use sha2::{Digest, Sha256};

fn padesum(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_padesum"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("the binary should spawn")
}

fn run_ok(dir: &Path, args: &[&str]) -> String {
    let out = padesum(dir, args);
    assert!(
        out.status.success(),
        "expected success for {args:?}, got {:?}\nstderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("stdout should be UTF-8")
}

fn run_err(dir: &Path, args: &[&str], expected_code: i32) -> String {
    let out = padesum(dir, args);
    assert_eq!(
        out.status.code(),
        Some(expected_code),
        "expected exit {expected_code} for {args:?}\nstdout: {}\nstderr: {}",
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stderr).expect("stderr should be UTF-8")
}

fn generate(dir: &Path, hamiltonian: &str, order: usize, file: &str) {
    run_ok(
        dir,
        &["generate", "--hamiltonian", hamiltonian, "--order", &order.to_string(), "--cache", file],
    );
}

#[test]
fn generate_writes_a_canonical_cache_and_verifies_it() {
    let dir = tempfile::tempdir().unwrap();
    generate(dir.path(), "pt-cubic", 12, "cubic.cache");

    let bytes = std::fs::read(dir.path().join("cubic.cache")).unwrap();
    let text = String::from_utf8(bytes.clone()).unwrap();
    assert!(text.starts_with("padesum coefficient cache v1\n"));
    assert!(text.contains("hamiltonian: pt-cubic\n"));
    assert!(text.contains("max-order: 12\n"));
    assert!(text.contains("checksum: sha256:"));
    assert!(text.contains("\n1 11\n2 -930\n3 158836\n"));

    // A second run over an up-to-date cache verifies without rewriting.
    let report = run_ok(
        dir.path(),
        &["generate", "--hamiltonian", "pt-cubic", "--order", "12", "--cache", "cubic.cache"],
    );
    assert!(report.contains("status: verified"), "{report}");
    assert_eq!(std::fs::read(dir.path().join("cubic.cache")).unwrap(), bytes);

    // Asking for fewer orders than stored also just verifies the prefix.
    let report = run_ok(
        dir.path(),
        &["generate", "--hamiltonian", "pt-cubic", "--order", "5", "--cache", "cubic.cache"],
    );
    assert!(report.contains("status: verified"), "{report}");
    assert!(report.contains("stored-order: 12"), "{report}");
}

#[test]
fn sum_reproduces_the_published_low_order_cells() {
    let dir = tempfile::tempdir().unwrap();
    generate(dir.path(), "pt-cubic", 12, "cubic.cache");
    let out = run_ok(
        dir.path(),
        &["sum", "--cache", "cubic.cache", "--lambda", "1/7", "--rows", "0..5"],
    );
    for cell in [
        "0.110e+002",
        "11.00000000000000",
        "-0.798e+001",
        "-7.97959183673469",
        "6.76871520405468",
        "3.14452476154168",
        "5.92770890838469",
        "4.84920642167536",
    ] {
        assert!(out.contains(cell), "missing {cell} in:\n{out}");
    }
    assert!(out.contains("# lambda: 1/7"), "{out}");
    assert!(out.contains("# lambda^2: 1/49"), "{out}");
}

#[test]
fn sum_on_the_quartic_side_takes_beta_directly() {
    let dir = tempfile::tempdir().unwrap();
    generate(dir.path(), "quartic", 12, "quartic.cache");
    let out = run_ok(
        dir.path(),
        &["sum", "--cache", "quartic.cache", "--beta", "40/49", "--rows", "0..2"],
    );
    for cell in ["0.750000000000000", "-0.321428571428571", "0.497075017205781"] {
        assert!(out.contains(cell), "missing {cell} in:\n{out}");
    }
    assert!(out.contains("# beta: 40/49"), "{out}");
}

#[test]
fn row_lists_select_and_order_the_output() {
    let dir = tempfile::tempdir().unwrap();
    generate(dir.path(), "pt-cubic", 12, "cubic.cache");
    let out = run_ok(
        dir.path(),
        &["sum", "--cache", "cubic.cache", "--lambda", "1/7", "--rows", "5,0..1", "--format", "csv"],
    );
    let rows: Vec<&str> = out.lines().collect();
    assert_eq!(rows.len(), 4, "{out}");
    assert_eq!(rows[0], "n,partial_sum,staircase");
    assert!(rows[1].starts_with("5,"), "{out}");
    assert!(rows[2].starts_with("0,"), "{out}");
    assert!(rows[3].starts_with("1,"), "{out}");
}

#[test]
fn the_wrong_coupling_flag_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    generate(dir.path(), "pt-cubic", 8, "cubic.cache");
    generate(dir.path(), "quartic", 8, "quartic.cache");
    let err = run_err(dir.path(), &["sum", "--cache", "cubic.cache", "--beta", "1/2"], 1);
    assert!(err.contains("--lambda"), "{err}");
    let err = run_err(dir.path(), &["sum", "--cache", "quartic.cache", "--lambda", "1/2"], 1);
    assert!(err.contains("--beta"), "{err}");
    let err = run_err(dir.path(), &["sum", "--cache", "cubic.cache", "--lambda=-1/7"], 1);
    assert!(err.contains("negative"), "{err}");
}

#[test]
fn missing_or_shallow_caches_exit_with_the_data_code() {
    let dir = tempfile::tempdir().unwrap();
    let err = run_err(dir.path(), &["sum", "--cache", "absent.cache", "--lambda", "1/7"], 2);
    assert!(err.contains("padesum generate"), "{err}");

    generate(dir.path(), "pt-cubic", 0, "empty.cache");
    let err = run_err(dir.path(), &["sum", "--cache", "empty.cache", "--lambda", "1/7"], 2);
    assert!(err.contains("generate"), "{err}");

    generate(dir.path(), "pt-cubic", 6, "small.cache");
    let err = run_err(
        dir.path(),
        &["predict", "--cache", "small.cache", "--sweep", "--rows", "2..9"],
        2,
    );
    assert!(err.contains("--order 11"), "{err}");
}

#[test]
fn checksum_corruption_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    generate(dir.path(), "pt-cubic", 8, "cubic.cache");
    let path = dir.path().join("cubic.cache");
    let tampered = std::fs::read_to_string(&path).unwrap().replace("1 11\n", "1 12\n");
    std::fs::write(&path, tampered).unwrap();

    let err = run_err(dir.path(), &["sum", "--cache", "cubic.cache", "--lambda", "1/7"], 1);
    assert!(err.contains("checksum"), "{err}");
    // `generate` refuses to silently repair a cache that fails validation.
    let out = padesum(
        dir.path(),
        &["generate", "--hamiltonian", "pt-cubic", "--order", "8", "--cache", "cubic.cache"],
    );
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn a_stored_coefficient_mismatch_is_an_error_not_a_rewrite() {
    let dir = tempfile::tempdir().unwrap();
    generate(dir.path(), "pt-cubic", 6, "cubic.cache");
    let path = dir.path().join("cubic.cache");
    // Alter one value and restore a consistent checksum, simulating a
    // cache written by a buggy or foreign generator.
    let text = std::fs::read_to_string(&path).unwrap();
    let tampered = text.replace("2 -930\n", "2 -931\n");
    let block_start = tampered.find("1 11\n").unwrap();
    let block = &tampered[block_start..];
    let digest = Sha256::digest(block.as_bytes());
    let mut hex = String::new();
    for byte in digest {
        hex.push_str(&format!("{byte:02x}"));
    }
    let fixed = {
        let old_line_start = tampered.find("checksum: sha256:").unwrap();
        let old_line_end = tampered[old_line_start..].find('\n').unwrap() + old_line_start;
        format!("{}checksum: sha256:{hex}{}", &tampered[..old_line_start], &tampered[old_line_end..])
    };
    std::fs::write(&path, fixed).unwrap();

    let out = padesum(
        dir.path(),
        &["generate", "--hamiltonian", "pt-cubic", "--order", "6", "--cache", "cubic.cache"],
    );
    assert_eq!(out.status.code(), Some(1), "a mismatching cache must not verify");
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("delete"), "{err}");
    // The file must be left untouched for post-mortem inspection.
    assert!(std::fs::read_to_string(&path).unwrap().contains("2 -931\n"));
}

#[test]
fn output_formats_agree_cell_for_cell() {
    let dir = tempfile::tempdir().unwrap();
    generate(dir.path(), "pt-cubic", 10, "cubic.cache");
    let args = |fmt: &'static str| {
        vec!["sum", "--cache", "cubic.cache", "--lambda", "1/7", "--rows", "0..3", "--format", fmt]
    };
    let text = run_ok(dir.path(), &args("text"));
    let csv = run_ok(dir.path(), &args("csv"));
    let json = run_ok(dir.path(), &args("json"));

    let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
    let json_rows = parsed["rows"].as_array().unwrap();
    let csv_rows: Vec<Vec<&str>> =
        csv.lines().skip(1).map(|line| line.split(',').collect()).collect();
    assert_eq!(json_rows.len(), csv_rows.len());
    assert_eq!(json_rows.len(), 4);

    for (json_row, csv_row) in json_rows.iter().zip(&csv_rows) {
        let json_cells: Vec<&str> =
            json_row.as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
        assert_eq!(&json_cells, csv_row);
        for cell in json_cells {
            assert!(text.contains(cell), "text output lost cell {cell}:\n{text}");
        }
    }
    assert_eq!(parsed["meta"]["lambda"], "1/7");
}

#[test]
fn predict_sweep_matches_the_known_first_row() {
    let dir = tempfile::tempdir().unwrap();
    generate(dir.path(), "pt-cubic", 8, "cubic.cache");
    let out = run_ok(
        dir.path(),
        &["predict", "--cache", "cubic.cache", "--sweep", "--rows", "2..2", "--format", "csv"],
    );
    let rows: Vec<&str> = out.lines().collect();
    assert_eq!(rows.len(), 2, "{out}");
    assert_eq!(rows[1], "2,-0.271278224688172043011e+008,-0.295410699e+000");
}

#[test]
fn predict_point_reports_the_moment_bound() {
    let dir = tempfile::tempdir().unwrap();
    generate(dir.path(), "pt-cubic", 8, "cubic.cache");
    let out = run_ok(
        dir.path(),
        &["predict", "--cache", "cubic.cache", "--n", "0", "--k", "1", "--terms", "2"],
    );
    assert!(out.contains("# moment-bound: satisfied"), "{out}");
    assert!(out.contains("-0.295410699e+000"), "{out}");
    // Second predicted coefficient of the same expansion.
    assert!(out.contains("0.463319872006134350792e+010"), "{out}");
}

#[test]
fn a_degenerate_expansion_exits_with_the_numeric_code() {
    let dir = tempfile::tempdir().unwrap();
    // Handcraft a cache whose second coefficient vanishes: the first
    // remainder expansion then divides by a series with zero constant
    // term.  The checksum is computed over the coefficient block, so
    // the file itself is valid.
    let block = "1 1\n2 0\n3 1\n4 1\n";
    let digest = Sha256::digest(block.as_bytes());
    let mut hex = String::new();
    for byte in digest {
        hex.push_str(&format!("{byte:02x}"));
    }
    let contents = format!(
        "padesum coefficient cache v1\nhamiltonian: pt-cubic\ngenerator-version: 1\nmax-order: 4\nchecksum: sha256:{hex}\n{block}"
    );
    std::fs::write(dir.path().join("crafted.cache"), contents).unwrap();

    let err = run_err(
        dir.path(),
        &["predict", "--cache", "crafted.cache", "--n", "0", "--k", "1", "--terms", "1"],
        3,
    );
    assert!(err.contains("degenerate") || err.contains("zero"), "{err}");
}

#[test]
fn diagnose_runs_the_full_battery_cleanly() {
    let dir = tempfile::tempdir().unwrap();
    generate(dir.path(), "pt-cubic", 24, "cubic.cache");
    let out = run_ok(
        dir.path(),
        &[
            "diagnose",
            "--cache",
            "cubic.cache",
            "--couplings",
            "1/7,1/2",
            "--hankel-max",
            "3",
            "--precision",
            "80",
        ],
    );
    let fingerprint =
        "moments=true nesting=true monotonicity=true determinants=true decay=DivergentGrowth";
    assert!(out.contains(&format!("# verdict[1/7]: {fingerprint}")), "{out}");
    assert!(out.contains(&format!("# verdict[1/2]: {fingerprint}")), "{out}");
    assert!(out.contains("24 stages; 0 violations; 0 unresolved; 0 ties"), "{out}");
    assert!(out.contains("8 of 8 positive"), "{out}");
    assert!(out.contains("divergent-sum"), "{out}");

    let json = run_ok(
        dir.path(),
        &[
            "diagnose", "--cache", "cubic.cache", "--couplings", "1/7", "--hankel-max", "2",
            "--precision", "80", "--format", "json",
        ],
    );
    let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(parsed["meta"]["verdict[1/7]"].as_str().unwrap(), fingerprint);
    assert_eq!(parsed["rows"].as_array().unwrap().len(), 5);
}

#[test]
fn the_precision_floor_is_enforced() {
    let dir = tempfile::tempdir().unwrap();
    generate(dir.path(), "pt-cubic", 8, "cubic.cache");
    let err = run_err(
        dir.path(),
        &["sum", "--cache", "cubic.cache", "--lambda", "1/7", "--precision", "10"],
        1,
    );
    assert!(err.contains("50"), "{err}");
}
