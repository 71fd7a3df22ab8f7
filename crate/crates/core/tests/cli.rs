use std::process::{Command, Output};

use tempfile::tempdir;

fn hyperinvert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperinvert")).args(args).output().expect("binary runs")
}

fn strip_wall_time(json: &str) -> String {
    json.lines().filter(|l| !l.trim_start().starts_with("\"wall_time\"")).collect::<Vec<_>>().join("\n")
}

#[test]
fn list_formats() {
    let out = hyperinvert(&["list", "--format", "json"]);
    assert!(out.status.success());
    let entries: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let ids: Vec<&str> = entries.as_array().unwrap().iter().map(|e| e["id"].as_str().unwrap()).collect();
    assert!(ids.len() >= 24);
    assert!(ids.contains(&"cvg") && ids.contains(&"hr-conv"));

    let out = hyperinvert(&["list"]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().lines().any(|l| l.starts_with("cor-chuwei1 ")));
}

#[test]
fn verify_json_is_reproducible() {
    let args = ["verify", "--id", "cvg", "--samples", "100", "--max-n", "8", "--seed", "42", "--format", "json"];
    let a = hyperinvert(&args);
    let b = hyperinvert(&args);
    assert_eq!(a.status.code(), Some(0));
    let (a, b) = (String::from_utf8(a.stdout).unwrap(), String::from_utf8(b.stdout).unwrap());
    assert_eq!(strip_wall_time(&a), strip_wall_time(&b));

    let report: serde_json::Value = serde_json::from_str(&a).unwrap();
    for key in ["id", "engine_version", "seed", "plan", "variants", "resolved_variant", "wall_time"] {
        assert!(report.get(key).is_some(), "missing {key}");
    }
    assert_eq!(report["variants"][0]["holds"], 100);
    assert_eq!(report["resolved_variant"], "printed");
}

#[test]
fn verify_rationals_are_fraction_strings() {
    let out = hyperinvert(&["verify", "--id", "cor-chuwei1", "--variant", "printed-verbatim", "--samples", "5"]);
    assert_eq!(out.status.code(), Some(0), "non-expected variant failing is not a verification failure");
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let ce = &report["variants"][0]["counterexamples"][0];
    let lhs = ce["lhs"].as_str().unwrap();
    assert!(lhs.contains('/'), "{lhs}");
    assert!(ce["assignment"]["a"].as_str().unwrap().contains('/'));
}

#[test]
fn verify_writes_csv_to_file() {
    let dir = tempdir().unwrap();
    let path = dir.path().join("report.csv");
    let out = hyperinvert(&[
        "verify",
        "--id",
        "thm-hrrecirel1",
        "--all-variants",
        "--samples",
        "20",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 6);
    assert!(text.lines().all(|l| l.ends_with(",plus-join-1-2b") || l.starts_with("id,")));
}

#[test]
fn exit_codes() {
    assert_eq!(hyperinvert(&["verify", "--id", "no-such-identity"]).status.code(), Some(2));
    assert_eq!(hyperinvert(&["verify", "--id", "cvg", "--variant", "nope"]).status.code(), Some(2));
    assert_eq!(hyperinvert(&["verify", "--id", "cvg", "--variant", "printed", "--all-variants"]).status.code(), Some(2));
    assert_eq!(hyperinvert(&["verify", "--id", "cvg", "--samples", "0"]).status.code(), Some(2));
    assert_eq!(hyperinvert(&["frobnicate"]).status.code(), Some(2));
    let out = hyperinvert(&["verify", "--id", "hr-conv", "--samples", "3", "--max-numerator", "0", "--max-denominator", "1"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8(out.stderr).unwrap().contains("sampling exhausted"));
}

#[test]
fn invert_round_trip_through_files() {
    let dir = tempdir().unwrap();
    let coeffs = dir.path().join("coeffs.json");
    let seq = dir.path().join("seq.json");
    std::fs::write(
        &coeffs,
        r#"{"a": [{"base": "1/2", "step": "1"}, ["3", "-1/3", "5/2", "7"]], "b": [{"base": "1", "step": "0"}, ["2", "1", "-1", "1/4"]]}"#,
    )
    .unwrap();
    std::fs::write(&seq, r#"["1", "2/3", "-5", "7/4", "0"]"#).unwrap();

    let out = hyperinvert(&["invert", "--ell", "1", "--coeffs", coeffs.to_str().unwrap(), "--sequence", seq.to_str().unwrap(), "--direction", "forward"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let fwd = dir.path().join("fwd.json");
    std::fs::write(&fwd, &out.stdout).unwrap();

    let out = hyperinvert(&["invert", "--ell", "1", "--coeffs", coeffs.to_str().unwrap(), "--sequence", fwd.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let back: Vec<String> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(back, ["1/1", "2/3", "-5/1", "7/4", "0/1"]);

    // wrong class count for ell = 2
    let out = hyperinvert(&["invert", "--ell", "2", "--coeffs", coeffs.to_str().unwrap(), "--sequence", seq.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let out = hyperinvert(&["invert", "--ell", "1", "--coeffs", "/nonexistent.json", "--sequence", seq.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn selftest_passes() {
    let out = hyperinvert(&["selftest", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().all(|l| l.starts_with("PASS ")));
}
