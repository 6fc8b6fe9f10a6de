//! End-to-end tests of the `ghd` binary: exit codes, JSON shapes, and the
//! documented worked examples.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn ghd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ghd"))
        .args(args)
        .output()
        .expect("ghd runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stderr_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stderr).expect("stderr is JSON")
}

fn write(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn validate_reports_axioms() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(dir.path(), "good.json", r#"{"dist": [[0, 2], [2, 0]]}"#);
    let out = ghd(&["validate", &good]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["valid"], Value::Bool(true));
    assert_eq!(doc["n"], 2);
    assert_eq!(doc["diameter"], 2.0);

    let bad = write(dir.path(), "bad.json", r#"{"dist": [[0, 1], [2, 0]]}"#);
    let out = ghd(&["validate", &bad]);
    assert_eq!(out.status.code(), Some(1));
    let err = stderr_json(&out);
    assert_eq!(err["error"], "ValidationError");
    assert!(err["message"].as_str().unwrap().contains("asymmetric"));
}

#[test]
fn hausdorff_subcommand_on_line_points() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "line.csv", "0,1,3\n1,0,2\n3,2,0\n");
    let out = ghd(&["hausdorff", &file, "--A", "0", "--B", "1,2"]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["hausdorff"], 3.0);
    assert_eq!(doc["one_sided_ab"], 1.0);
    assert_eq!(doc["one_sided_ba"], 3.0);

    let out = ghd(&["hausdorff", &file, "--A", "0", "--B", "9"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stderr_json(&out)["error"], "ArgumentError");
}

#[test]
fn gh_on_identical_files_is_zero_and_exact() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "x.json", r#"{"dist": [[0, 1.5], [1.5, 0]]}"#);
    let out = ghd(&["gh", &file, &file]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["value"], 0.0);
    assert_eq!(doc["exact"], Value::Bool(true));
}

#[test]
fn gh_point_against_diameter_four_space() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "p.json", r#"{"dist": [[0]]}"#);
    let x = write(
        dir.path(),
        "x.json",
        r#"{"dist": [[0, 1, 4], [1, 0, 3.5], [4, 3.5, 0]]}"#,
    );
    let doc = stdout_json(&ghd(&["gh", &p, &x]));
    assert_eq!(doc["value"], 2.0);
}

#[test]
fn gh_and_oracle_agree_on_two_point_example() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.csv", "0,2\n2,0\n");
    let b = write(dir.path(), "b.csv", "0,5\n5,0\n");
    let gh = stdout_json(&ghd(&["gh", &a, &b]));
    let oracle = stdout_json(&ghd(&["oracle", &a, &b]));
    assert_eq!(gh["value"], 1.5);
    assert_eq!(oracle["value"], 1.5);
    assert_eq!(gh["witness"]["pairs"], oracle["witness"]["pairs"]);
}

#[test]
fn require_exact_exits_two_on_budget_exhaustion() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.csv", "0,1,2\n1,0,1.5\n2,1.5,0\n");
    let b = write(dir.path(), "b.csv", "0,0.9,2.1\n0.9,0,1.4\n2.1,1.4,0\n");
    let out = ghd(&["gh", &a, &b, "--budget", "1", "--require-exact"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr_json(&out)["error"], "NotExact");

    // without the flag the bracketed result is still a success
    let out = ghd(&["gh", &a, &b, "--budget", "1"]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["exact"], Value::Bool(false));
    assert!(doc["lower_bound"].as_f64().unwrap() <= doc["upper_bound"].as_f64().unwrap());
}

#[test]
fn geodesic_inline_middle_sample() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.csv", "0,2\n2,0\n");
    let b = write(dir.path(), "b.csv", "0,5\n5,0\n");
    let out = ghd(&["geodesic", &a, &b, "--ts", "0,0.5,1"]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["gh"], 1.5);
    let mid = &doc["samples"][1]["dist"];
    assert_eq!(mid[0][1], 3.5);
    assert_eq!(mid[1][0], 3.5);

    let out = ghd(&["geodesic", &a, &b, "--ts", "0,1.5"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stderr_json(&out)["error"], "ArgumentError");
}

#[test]
fn geodesic_steps_grid() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.csv", "0,2\n2,0\n");
    let b = write(dir.path(), "b.csv", "0,5\n5,0\n");
    let doc = stdout_json(&ghd(&["geodesic", &a, &b, "--steps", "2"]));
    assert_eq!(doc["ts"], serde_json::json!([0.0, 0.5, 1.0]));
    assert_eq!(doc["samples"].as_array().unwrap().len(), 3);
}

#[test]
fn realize_writes_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.csv", "0,2\n2,0\n");
    let b = write(dir.path(), "b.csv", "0,5\n5,0\n");
    let out_path = dir.path().join("realization.json");
    let out = ghd(&["realize", &a, &b, "-o", out_path.to_str().unwrap()]);
    assert!(out.status.success());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(doc["achieved"], 1.5);
    assert_eq!(doc["space"]["dist"].as_array().unwrap().len(), 4);
}

#[test]
fn point_cloud_csv_input() {
    let dir = tempfile::tempdir().unwrap();
    let cloud = write(dir.path(), "cloud.csv", "0,0\n3,4\n");
    let doc = stdout_json(&ghd(&["validate", &cloud, "--points"]));
    assert_eq!(doc["diameter"], 5.0);
    let doc = stdout_json(&ghd(&[
        "validate",
        &cloud,
        "--points",
        "--point-metric",
        "chebyshev",
    ]));
    assert_eq!(doc["diameter"], 4.0);
}

#[test]
fn oracle_rejects_instances_over_the_cap() {
    let dir = tempfile::tempdir().unwrap();
    let n = 6;
    let mut rows = Vec::new();
    for i in 0..n {
        let row: Vec<String> = (0..n)
            .map(|j| format!("{}", if i == j { 0.0 } else { 2.0 + ((i + j) % 2) as f64 }))
            .collect();
        rows.push(row.join(","));
    }
    let big = write(dir.path(), "big.csv", &(rows.join("\n") + "\n"));
    let out = ghd(&["oracle", &big, &big]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stderr_json(&out)["error"], "CapExceeded");
}

#[test]
fn missing_file_is_a_parse_error() {
    let out = ghd(&["validate", "/nonexistent/never.json"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stderr_json(&out)["error"], "ParseError");
}
