//! End-to-end tests of the `polarize` binary: published JSON schemas,
//! exit codes, and report determinism.

use std::process::{Command, Output};

fn polarize(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polarize"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(output: &Output) -> serde_json::Value {
    serde_json::from_slice(&output.stdout).expect("stdout is one JSON report")
}

#[test]
fn product_of_orthogonal_basis_vectors_is_zero() {
    let out = polarize(&[
        "product",
        "--norm",
        r#"{"kind":"pnorm","p":"inf"}"#,
        "--x",
        "[[1,0],[0,0]]",
        "--y",
        "[[0,0],[1,0]]",
        "--deterministic",
    ]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    assert_eq!(report["command"], "product");
    assert_eq!(report["results"]["value"], serde_json::json!([0.0, 0.0]));
    assert_eq!(report["results"]["csb_ratio"], 0.0);
    assert_eq!(report["exit_status"], 0);
    assert!(report.get("timestamp").is_none());
}

#[test]
fn product_of_counterexample_vectors_matches_reference() {
    let s15 = 15f64.sqrt() / 4.0;
    let s7 = 7f64.sqrt() / 4.0;
    let out = polarize(&[
        "product",
        "--norm",
        r#"{"kind":"pnorm","p":"inf"}"#,
        "--x",
        &format!("[[0.25,{s15}],[0.5,0.5]]"),
        "--y",
        &format!("[[0.5,0.25],[0.75,{s7}]]"),
        "--deterministic",
    ]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    let value = report["results"]["value"].as_array().unwrap();
    assert!((value[0].as_f64().unwrap() - 0.5833).abs() < 1e-4);
    assert!((value[1].as_f64().unwrap() - 0.1861).abs() < 1e-4);
    let ratio = report["results"]["csb_ratio"].as_f64().unwrap();
    assert!((ratio - 0.6123).abs() < 1e-4);
}

#[test]
fn product_of_equal_vectors_has_ratio_one() {
    let out = polarize(&[
        "product",
        "--norm",
        r#"{"kind":"weighted_pnorm","p":3.5,"weights":[2.0,0.5]}"#,
        "--x",
        "[[1,2],[0.5,-1]]",
        "--y",
        "[[1,2],[0.5,-1]]",
        "--deterministic",
    ]);
    assert!(out.status.success());
    let ratio = stdout_json(&out)["results"]["csb_ratio"].as_f64().unwrap();
    assert!((ratio - 1.0).abs() < 1e-12);
}

#[test]
fn verify_csb_single_norm_reports_case_c_for_linf() {
    let out = polarize(&[
        "verify-csb",
        "--norm",
        r#"{"kind":"pnorm","p":"inf"}"#,
        "--deterministic",
    ]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    let traces = report["results"]["traces"].as_array().unwrap();
    assert_eq!(traces.len(), 1);
    assert_eq!(traces[0]["case"], "c");
    assert_eq!(traces[0]["stvw"], serde_json::json!([1.0, 1.0, 1.0, 1.0]));
    assert_eq!(report["results"]["summary"]["failed"], 0);
}

#[test]
fn verify_csb_family_batch_passes() {
    let out = polarize(&[
        "verify-csb",
        "--family",
        "dual_max",
        "--trials",
        "64",
        "--seed",
        "42",
        "--deterministic",
    ]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    assert_eq!(report["results"]["summary"]["passed"], 64);
    assert_eq!(report["results"]["summary"]["failed"], 0);
    // per-check-name worst margins
    let checks = report["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["name"] == "csb_final_bound"));
    assert!(checks.iter().all(|c| c["passed"] == true));
}

#[test]
fn verify_csb_requires_a_mode() {
    let out = polarize(&["verify-csb"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reproduce_paper_passes_and_prints_rows() {
    let out = polarize(&["reproduce-paper", "--deterministic", "--pretty"]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    let rows = report["results"]["rows"].as_array().unwrap();
    assert!(rows.len() >= 10);
    assert!(rows.iter().all(|r| r["passed"] == true));
    let table = String::from_utf8_lossy(&out.stderr);
    assert!(table.contains("product_vs_radicals"));
    assert!(table.contains("g_diagonal_value"));
}

#[test]
fn stress_run_stays_within_bound() {
    let out = polarize(&[
        "stress",
        "--family",
        "pnorm",
        "--dim",
        "2",
        "--trials",
        "12",
        "--restarts",
        "4",
        "--iters",
        "60",
        "--seed",
        "5",
        "--deterministic",
    ]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    let max_ratio = report["results"]["max_ratio"].as_f64().unwrap();
    assert!(max_ratio <= 1.0 + 1e-7);
    let trials = report["results"]["trials"].as_array().unwrap();
    assert_eq!(trials.len(), 12);
    // ordered by trial index regardless of scheduling
    for (i, trial) in trials.iter().enumerate() {
        assert_eq!(trial["trial"], i);
    }
}

#[test]
fn explore_conjecture_exits_zero_and_reports_outcomes() {
    let out = polarize(&[
        "explore-conjecture",
        "--trials",
        "6",
        "--seed",
        "1",
        "--family",
        "hermitian",
        "--deterministic",
    ]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    assert_eq!(report["results"]["flagged"], 0);
    let outcomes = report["results"]["report"]["outcomes"].as_array().unwrap();
    assert_eq!(outcomes.len(), 6);
    for outcome in outcomes {
        assert!(outcome["parallelogram_defect"].as_f64().unwrap() <= 1e-8);
        assert!(outcome["phase_defect"].as_f64().unwrap() <= 1e-8);
    }
}

#[test]
fn deterministic_reports_are_byte_identical() {
    let args = [
        "stress",
        "--trials",
        "6",
        "--restarts",
        "3",
        "--iters",
        "40",
        "--seed",
        "9",
        "--deterministic",
    ];
    let a = polarize(&args);
    let b = polarize(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    let args = [
        "verify-csb",
        "--family",
        "any",
        "--trials",
        "21",
        "--seed",
        "4",
        "--deterministic",
    ];
    let single = Command::new(env!("CARGO_BIN_EXE_polarize"))
        .args(args)
        .env("POLARIZE_THREADS", "1")
        .output()
        .expect("binary runs");
    let quad = Command::new(env!("CARGO_BIN_EXE_polarize"))
        .args(args)
        .env("POLARIZE_THREADS", "4")
        .output()
        .expect("binary runs");
    assert!(single.status.success());
    assert_eq!(single.stdout, quad.stdout);
}

#[test]
fn norm_file_input_works() {
    let dir = std::env::temp_dir().join("polarize-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("norm.json");
    std::fs::write(&path, r#"{"kind":"pnorm","p":1}"#).unwrap();
    let out = polarize(&[
        "product",
        "--norm",
        path.to_str().unwrap(),
        "--x",
        "[[3,0],[0,4]]",
        "--y",
        "[[3,0],[0,4]]",
        "--deterministic",
    ]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    assert_eq!(report["results"]["norm_x"], 7.0);
}

#[test]
fn parse_errors_exit_two_with_diagnostics() {
    let out = polarize(&[
        "product",
        "--norm",
        r#"{"kind":"pnorm","p":0.5}"#,
        "--x",
        "[[1,0]]",
        "--y",
        "[[1,0]]",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
    assert!(out.stdout.is_empty());

    let out = polarize(&["product", "--norm", "{}", "--x", "bad", "--y", "[[1,0]]"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dimension_mismatch_exits_two() {
    let out = polarize(&[
        "product",
        "--norm",
        r#"{"kind":"weighted_pnorm","p":2,"weights":[1,1,1]}"#,
        "--x",
        "[[1,0],[0,0]]",
        "--y",
        "[[0,0],[1,0]]",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("dimension"));
}

#[test]
fn check_failure_exits_one() {
    let out = polarize(&[
        "product",
        "--norm",
        r#"{"kind":"pnorm","p":2}"#,
        "--x",
        "[[1,0]]",
        "--y",
        "[[1,0]]",
        "--tol=-0.5",
        "--deterministic",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let report = stdout_json(&out);
    assert_eq!(report["exit_status"], 1);
}
