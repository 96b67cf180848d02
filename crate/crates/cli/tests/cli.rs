//! End-to-end tests against the built binary: output shapes, exit
//! codes, limit flags, and the export/import round trip.

use std::path::Path;
use std::process::{Command, Output};

fn classprod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_classprod"))
        .args(args)
        .env_remove("CLASSPROD_MAX_ENUMERATE")
        .env_remove("CLASSPROD_MAX_ORBIT")
        .env_remove("CLASSPROD_MAX_PRODUCT")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn sn_prints_the_sorted_values() {
    let out = classprod(&["sn", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "1 2 3 4 6 12");
}

#[test]
fn sn_json_carries_the_schema_version() {
    let out = classprod(&["sn", "--n", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "sn");
    assert_eq!(v["params"]["n"], "3");
    assert_eq!(v["payload"]["values"], serde_json::json!([1, 2, 3, 4, 6, 12]));
}

#[test]
fn verify_tower_passes() {
    let out = classprod(&["verify", "--claim", "tower", "--p", "3", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("PASS"), "missing PASS in: {text}");
    assert!(text.contains("Prop4.2"), "missing claim id in: {text}");
    assert!(text.contains("TIGHT"), "equality case not flagged in: {text}");
}

#[test]
fn analyze_supersolvable_distinguished_element() {
    let out = classprod(&["analyze", "--group", "super:3", "--element", "dist"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(
        stdout(&out).contains("size=3 eta=2"),
        "unexpected analyze output: {}",
        stdout(&out)
    );
}

#[test]
fn analyze_all_classes_matches_q8_census() {
    let out = classprod(&[
        "analyze",
        "--group",
        "catalog:q8",
        "--all-classes",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let mut sizes: Vec<u64> = v["payload"]["classes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["size"].as_u64().unwrap())
        .collect();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
}

#[test]
fn export_table_round_trips_through_analyze() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q8.tbl");
    let out = classprod(&[
        "export-table",
        "--group",
        "catalog:q8",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(Path::new(&path).exists());

    let expr = format!("table:{}", path.display());
    let again = classprod(&["analyze", "--group", &expr, "--all-classes", "--format", "json"]);
    assert_eq!(again.status.code(), Some(0), "{}", stderr(&again));
    let v: serde_json::Value = serde_json::from_str(&stdout(&again)).unwrap();
    let mut sizes: Vec<u64> = v["payload"]["classes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["size"].as_u64().unwrap())
        .collect();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
}

#[test]
fn bad_expression_exits_2_with_an_offset() {
    let out = classprod(&["analyze", "--group", "bogus:3", "--element", "e"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("syntax error"), "{}", stderr(&out));
}

#[test]
fn unknown_claim_exits_2() {
    let out = classprod(&["verify", "--claim", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown claim"), "{}", stderr(&out));
}

#[test]
fn orbit_cap_env_var_exits_2_and_flag_overrides_it() {
    let capped = Command::new(env!("CARGO_BIN_EXE_classprod"))
        .args(["analyze", "--group", "catalog:q8", "--all-classes"])
        .env("CLASSPROD_MAX_ORBIT", "1")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(2), "{}", stderr(&capped));

    let overridden = Command::new(env!("CARGO_BIN_EXE_classprod"))
        .args([
            "analyze",
            "--group",
            "catalog:q8",
            "--all-classes",
            "--max-orbit",
            "1000000",
        ])
        .env("CLASSPROD_MAX_ORBIT", "1")
        .output()
        .unwrap();
    assert_eq!(overridden.status.code(), Some(0), "{}", stderr(&overridden));
}

#[test]
fn sweep_output_is_deterministic_and_passes() {
    let first = classprod(&["sweep", "--format", "json"]);
    assert_eq!(first.status.code(), Some(0), "{}", stderr(&first));
    let second = classprod(&["sweep", "--format", "json"]);
    assert_eq!(stdout(&first), stdout(&second));
    let v: serde_json::Value = serde_json::from_str(&stdout(&first)).unwrap();
    let reports = v["payload"]["reports"].as_array().unwrap();
    assert!(!reports.is_empty());
    for report in reports {
        assert_eq!(report["status"], "pass", "failing report: {report}");
    }
}

#[test]
fn verify_lemma1_sweeps_the_center() {
    let out = classprod(&["verify", "--claim", "lemma1", "--group", "catalog:d4"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("Lemma2.1"));
}

#[test]
fn verify_theorem_b_default_corpus() {
    let out = classprod(&["verify", "--claim", "B"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("TheoremB"));
}
