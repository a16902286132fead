//! End-to-end runs of the command-line tool.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const HAND: &str = r#"{"d": 2, "points": [[0, 2], [-2, -1], [3, -1], [1, 0]], "z": [0, 0]}"#;

fn zerohull(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zerohull"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "{e}: stdout={} stderr={}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn check_reports_position_and_verdicts() {
    let dir = TempDir::new().unwrap();
    let file = write(dir.path(), "hand.json", HAND);
    let out = zerohull(&["check", &file]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["containing"], true);
    assert_eq!(v["position"]["z_in_general_position"], true);
    assert_eq!(v["verdicts"]["main_bound"]["holds"], true);
    assert_eq!(v["falsifications"], serde_json::json!([]));
}

#[test]
fn enumerate_families_on_both_routes() {
    let dir = TempDir::new().unwrap();
    let file = write(dir.path(), "hand.json", HAND);
    for extra in [&[][..], &["--oracle"][..]] {
        let mut args = vec!["enumerate", file.as_str(), "--family", "C"];
        args.extend_from_slice(extra);
        let c = stdout_json(&zerohull(&args));
        assert_eq!(c, serde_json::json!([[0, 1, 2], [0, 1, 3]]));
        args[3] = "A";
        let a = stdout_json(&zerohull(&args));
        assert_eq!(a, serde_json::json!([[0, 1], [0, 2, 3], [1, 2, 3]]));
    }
    let all = stdout_json(&zerohull(&["enumerate", &file]));
    assert_eq!(all["counts"]["C"], 2);
    assert_eq!(all["counts"]["A"], 3);
    assert!(all["families"]["H"].is_array());
}

#[test]
fn construct_operations() {
    let dir = TempDir::new().unwrap();
    let file = write(dir.path(), "hand.json", HAND);
    let simplex = stdout_json(&zerohull(&["construct", &file, "--op", "simplex"]));
    assert_eq!(simplex["verified"], true);
    let vertices = simplex["simplex"].clone();
    assert!(vertices == serde_json::json!([0, 1, 2]) || vertices == serde_json::json!([0, 1, 3]));

    let cert = stdout_json(&zerohull(&[
        "construct", &file, "--op", "facet-cert", "--set", "0,1", "--s", "2",
    ]));
    assert_eq!(cert["T"], serde_json::json!([0, 1]));

    let good = stdout_json(&zerohull(&["construct", &file, "--op", "good-vertex"]));
    assert_eq!(good["verified"], true);

    // A is not maximal avoiding here: {0, 2} extends to {0, 2, 3}.
    let bad = zerohull(&["construct", &file, "--op", "facet-cert", "--set", "0,2", "--s", "1"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn gen_is_deterministic_and_round_trips() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for path in [&a, &b] {
        let out = zerohull(&[
            "gen", "--d", "3", "--n", "7", "--seed", "42", "--containing", "-o",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    let check = stdout_json(&zerohull(&["check", a.to_str().unwrap()]));
    assert_eq!(check["containing"], true);
    assert_eq!(check["position"]["set_in_general_position"], true);
}

#[test]
fn oracle_compare_agrees() {
    let dir = TempDir::new().unwrap();
    let file = write(dir.path(), "hand.json", HAND);
    let out = zerohull(&["oracle-compare", &file]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["equal"], true);
}

#[test]
fn oracle_cap_is_enforced() {
    let dir = TempDir::new().unwrap();
    let file = write(dir.path(), "hand.json", HAND);
    let out = zerohull(&["--oracle-cap", "3", "enumerate", &file, "--oracle"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn batch_flags_malformed_file_and_verifies_the_rest() {
    let dir = TempDir::new().unwrap();
    let inputs = dir.path().join("in");
    fs::create_dir(&inputs).unwrap();
    write(&inputs, "a.json", HAND);
    write(&inputs, "b.json", "{ not json");
    write(&inputs, "c.json", r#"{"d": 2, "points": [[1, 0], [0, 1]], "z": [0, 0]}"#);
    let report = dir.path().join("report.json");
    let out = zerohull(&["batch", inputs.to_str().unwrap(), "-o", report.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&fs::read(&report).unwrap()).unwrap();
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 3);
    assert!(reports[0].get("report").is_some());
    assert!(reports[1].get("error").is_some());
    assert!(reports[2].get("report").is_some());
}

#[test]
fn empty_batch_is_an_empty_report() {
    let dir = TempDir::new().unwrap();
    let empty = dir.path().join("empty");
    fs::create_dir(&empty).unwrap();
    let report = dir.path().join("report.json");
    let out = zerohull(&["batch", empty.to_str().unwrap(), "-o", report.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&fs::read(&report).unwrap()).unwrap();
    assert_eq!(v["reports"], serde_json::json!([]));
}

#[test]
fn batch_output_ignores_job_count() {
    let dir = TempDir::new().unwrap();
    let inputs = dir.path().join("in");
    fs::create_dir(&inputs).unwrap();
    for seed in 0..6 {
        let path = inputs.join(format!("i{seed}.json"));
        let out = zerohull(&[
            "gen", "--d", "2", "--n", "6", "--seed", &seed.to_string(), "-o",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    let mut bytes = Vec::new();
    for jobs in ["1", "4"] {
        let report = dir.path().join(format!("r{jobs}.json"));
        let out = zerohull(&[
            "batch", inputs.to_str().unwrap(), "--jobs", jobs, "-o", report.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
        bytes.push(fs::read(&report).unwrap());
    }
    assert_eq!(bytes[0], bytes[1]);
}

#[test]
fn usage_and_io_errors_exit_one() {
    assert_eq!(zerohull(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(zerohull(&["check", "/nonexistent/file.json"]).status.code(), Some(1));
    assert_eq!(zerohull(&["--help"]).status.code(), Some(0));
}
