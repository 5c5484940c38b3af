use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn dirosc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dirosc")).args(args).env("SOURCE_DATE_EPOCH", "0").output().expect("binary runs")
}

fn report(args: &[&str]) -> (i32, Value) {
    let out = dirosc(args);
    let code = out.status.code().expect("exit code");
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (code, v)
}

fn statuses(v: &Value) -> Vec<&str> {
    v["checks"].as_array().unwrap().iter().map(|c| c["status"].as_str().unwrap()).collect()
}

fn temp(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("dirosc-test-{}-{name}", std::process::id()))
}

#[test]
fn gauge_chain_in_one_plus_one_passes() {
    let (code, v) = report(&["verify-gauge", "--dim", "1+1"]);
    assert_eq!(code, 0);
    assert_eq!(statuses(&v), vec!["pass"; 5]);
    assert_eq!(v["summary"]["pass"], 5);
}

#[test]
fn gauge_chain_in_two_plus_one_reports_the_displayed_potential_mismatch() {
    let (code, v) = report(&["verify-gauge", "--dim", "2+1"]);
    assert_eq!(code, 1);
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 6);
    let failed: Vec<&str> =
        checks.iter().filter(|c| c["status"] == "fail").map(|c| c["name"].as_str().unwrap()).collect();
    assert_eq!(failed, vec!["gauge transform equals the displayed potential", "covariant potential equals the displayed potential"]);
    for c in checks.iter().filter(|c| c["status"] == "fail") {
        assert!(!c["expected"].as_str().unwrap().is_empty());
        assert!(!c["actual"].as_str().unwrap().is_empty());
    }
    // the fields themselves are gauge invariant
    assert!(checks.iter().any(|c| c["name"] == "fields invariant under the gauge transform" && c["status"] == "pass"));
}

#[test]
fn unknown_or_unsupported_dimension_is_a_usage_error() {
    assert_eq!(dirosc(&["verify-gauge", "--dim", "9"]).status.code(), Some(2));
    assert_eq!(dirosc(&["verify-gauge", "--dim", "3+1"]).status.code(), Some(2));
    assert_eq!(dirosc(&["symmetry", "--kind", "u1", "--dim", "3+1"]).status.code(), Some(2));
    assert_eq!(dirosc(&["symmetry", "--kind", "sideways"]).status.code(), Some(2));
}

#[test]
fn envelope_fields_and_determinism() {
    let a = dirosc(&["verify-gauge", "--dim", "1+1", "--seed", "5"]);
    let b = dirosc(&["verify-gauge", "--dim", "1+1", "--seed", "5"]);
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["tool"], "dirosc");
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(v["timestamp"], "1970-01-01T00:00:00Z");
    assert_eq!(v["command"], "verify-gauge --dim 1+1");
    assert_eq!(v["seed"], 5);
    for c in v["checks"].as_array().unwrap() {
        for key in ["name", "dimension", "status", "expected", "actual", "tolerance"] {
            assert!(c.get(key).is_some(), "{key}");
        }
    }
}

#[test]
fn json_flag_writes_the_report_to_a_file() {
    let path = temp("gauge.json");
    let out = dirosc(&["verify-gauge", "--dim", "1+1", "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["summary"]["pass"], 5);
    assert!(String::from_utf8_lossy(&out.stdout).lines().all(|l| l.starts_with("pass")));
    std::fs::remove_file(path).ok();
}

#[test]
fn u1_is_invariant() {
    for dim in ["2+1", "1+1"] {
        let (code, v) = report(&["symmetry", "--kind", "u1", "--dim", dim]);
        assert_eq!(code, 0);
        let s = &v["payloads"]["symmetry"];
        assert_eq!(s["symmetry"], "U1");
        assert_eq!(s["invariant"], true);
        assert_eq!(s["residual"], "0");
    }
}

#[test]
fn chiral_rotation_breaks_with_unequal_phases() {
    let (code, v) = report(&["symmetry", "--kind", "chiral", "--dim", "2+1"]);
    assert_eq!(code, 0);
    let s = &v["payloads"]["symmetry"];
    assert_eq!(s["symmetry"], "chiral");
    assert_eq!(s["invariant"], false);
    assert_eq!(s["residual_phase"], "theta_R - theta_L");
    let residual = s["residual"].as_str().unwrap();
    assert!(residual.contains("theta_R") && residual.contains("theta_L"), "{residual}");
}

#[test]
fn chiral_rotation_with_equal_phases_is_u1() {
    let (code, v) = report(&["symmetry", "--kind", "chiral", "--theta-equal"]);
    assert_eq!(code, 0);
    assert_eq!(v["payloads"]["symmetry"]["invariant"], true);
    assert_eq!(v["payloads"]["symmetry"]["dimension"], "2+1");
}

#[test]
fn chiral_in_the_irreducible_representation_is_skipped() {
    let (code, v) = report(&["symmetry", "--kind", "chiral", "--dim", "2+1", "--rep", "irreducible"]);
    assert_eq!(code, 0);
    assert_eq!(statuses(&v), vec!["skip"]);
    assert_eq!(v["payloads"]["symmetry"]["invariant"], Value::Null);
    assert!(v["payloads"]["symmetry"]["note"].as_str().unwrap().contains("gamma^5"));
}

#[test]
fn clifford_suite_passes_everywhere() {
    let (code, v) = report(&["verify-clifford"]);
    assert_eq!(code, 0);
    let s = statuses(&v);
    assert!(s.iter().all(|&x| x != "fail"));
    // projectors are skipped for the two 2x2 representations in 2+1 only
    assert_eq!(s.iter().filter(|&&x| x == "skip").count(), 2);
}

#[test]
fn zero_eigenvalue_count_is_a_usage_error() {
    let out = dirosc(&["spectrum", "--dim", "1+1", "--m", "1", "--omega", "0.1", "--k", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = dirosc(&["spectrum", "--dim", "1+1", "--m", "1", "--omega", "0.1", "--n", "16"]);
    assert_eq!(out.status.code(), Some(2));
    let out = dirosc(&["spectrum", "--dim", "1+1", "--m", "1", "--omega", "0", "--method", "basis"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn spectrum_cross_validation_and_csv() {
    let csv = temp("spectrum.csv");
    let (code, v) = report(&[
        "spectrum", "--dim", "1+1", "--m", "1", "--omega", "0.1", "--k", "10", "--method", "both", "--csv", csv.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let deltas = v["payloads"]["convergence"]["cross_method_deltas"].as_array().unwrap();
    assert_eq!(deltas.len(), 10);
    assert!(deltas.iter().all(|d| d.as_f64().unwrap() < 1e-6));
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("index,eigenvalue,method,N_or_M,residual"));
    assert_eq!(lines.clone().filter(|l| l.contains(",grid,")).count(), 10);
    assert_eq!(lines.filter(|l| l.contains(",basis,")).count(), 10);
    std::fs::remove_file(csv).ok();
}

#[test]
fn free_spectrum_reports_the_mass_gap() {
    let (code, v) = report(&["spectrum", "--dim", "1+1", "--m", "1", "--omega", "0", "--method", "grid"]);
    assert_eq!(code, 0);
    let gap = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "grid free gap |E_0 - m|").unwrap();
    assert_eq!(gap["status"], "pass");
    let levels = v["payloads"]["convergence"]["runs"][0]["levels"].as_array().unwrap();
    assert!((levels[0].as_f64().unwrap() - 1.0).abs() < 1e-3);
}

#[test]
fn tolerance_override_can_fail_a_spectrum_run() {
    let (code, v) = report(&["spectrum", "--dim", "1+1", "--m", "1", "--omega", "0.1", "--k", "4", "--tol", "1e-30"]);
    assert_eq!(code, 1);
    let c = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "grid vs basis relative delta").unwrap();
    assert_eq!(c["status"], "fail");
    // serde_json parsing is not correctly rounded without float_roundtrip
    assert!((c["tolerance"].as_f64().unwrap() / 1e-30 - 1.0).abs() < 1e-12);
}
