//! End-to-end checks of the binary: exit codes, suite selection, report
//! formats, and the --out file path.

use std::process::{Command, Output};

fn cremona_verify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cremona-verify"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn no_arguments_is_a_usage_error() {
    let out = cremona_verify(&[]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("usage"), "stderr: {stderr}");
}

#[test]
fn unknown_subcommand_exits_2() {
    let out = cremona_verify(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("unknown subcommand 'frobnicate'"), "stderr: {stderr}");
}

#[test]
fn unknown_suite_exits_2() {
    let out = cremona_verify(&["run", "--suite", "nosuch"]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("unknown suite 'nosuch'"), "stderr: {stderr}");
}

#[test]
fn unknown_run_flag_exits_2() {
    let out = cremona_verify(&["run", "--wat"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_format_exits_2() {
    let out = cremona_verify(&["run", "--format", "yaml"]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("unknown format 'yaml'"), "stderr: {stderr}");
}

#[test]
fn bad_seed_exits_2() {
    let out = cremona_verify(&["run", "--seed", "banana"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn help_prints_usage() {
    let out = cremona_verify(&["help"]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("cremona-verify usage"));
    assert!(stdout.contains("--suite"));
}

#[test]
fn list_names_every_suite() {
    let out = cremona_verify(&["list"]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    for name in [
        "minkowski", "pgl3", "lattice", "conic", "dp1", "dp2", "dp3", "dp4", "dp5", "dp6",
        "dp7", "dp8", "dp9",
    ] {
        assert!(
            stdout.lines().any(|l| l.split_whitespace().next() == Some(name)),
            "missing suite {name} in:\n{stdout}"
        );
    }
}

#[test]
fn empty_suite_renders_header_only_markdown() {
    let out = cremona_verify(&["run", "--suite", "dp7"]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.starts_with("# verification report"));
    assert!(!stdout.contains("| Surface |"));
    assert!(!stdout.contains("## Checks"));
}

#[test]
fn single_suite_markdown_has_its_table_row() {
    let out = cremona_verify(&["run", "--suite", "dp6"]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("| Surface | Structure | Order | Status |"));
    assert!(stdout.contains("| dP6 |"));
    assert!(!stdout.contains("| dP5 |"));
}

#[test]
fn json_report_round_trips() {
    let out = cremona_verify(&["run", "--suite", "lattice", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).expect("valid JSON");
    assert_eq!(report["suite"], "lattice");
    assert_eq!(report["seed"], 1);
    let checks = report["checks"].as_array().expect("checks array");
    assert!(!checks.is_empty());
    for check in checks {
        assert_eq!(check["status"], "pass", "check {}", check["id"]);
        assert_eq!(check["expected"], check["actual"], "check {}", check["id"]);
    }
}

#[test]
fn seed_flag_is_recorded_in_the_report() {
    let out = cremona_verify(&["run", "--suite", "minkowski", "--format", "json", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).expect("valid JSON");
    assert_eq!(report["seed"], 7);
}

#[test]
fn out_flag_writes_the_report_to_a_file() {
    let path = std::env::temp_dir().join(format!("cremona-verify-{}.md", std::process::id()));
    let path_str = path.to_str().expect("utf-8 temp path");
    let out = cremona_verify(&["run", "--suite", "minkowski", "--out", path_str]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).expect("report file written");
    assert!(written.starts_with("# verification report"));
    assert!(written.contains("minkowski.m3"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn markdown_notes_render_the_printed_text() {
    let out = cremona_verify(&["run", "--suite", "dp5"]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("erratum-note"), "stdout: {stdout}");
    assert!(stdout.contains("{E4, l23, l13, l23}"), "stdout: {stdout}");
}
