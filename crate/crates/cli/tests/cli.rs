//! End-to-end tests of the binary: expected outputs, golden files, JSON
//! schema, batch mode, determinism and exit codes.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_yokonuma"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn trace_of_a_generator_is_z() {
    assert_eq!(stdout(&["trace", "--d", "2", "--n", "2", "s1"]), "z\n");
}

#[test]
fn trace_of_a_framing_is_x1() {
    assert_eq!(stdout(&["trace", "--d", "2", "--n", "1", "f1^1"]), "x_1\n");
}

#[test]
fn eval_collapses_to_hecke_at_d1() {
    assert_eq!(
        stdout(&["eval", "--d", "1", "--n", "2", "s1 s1"]),
        "u*1 - (u - 1)*g[2,1]\n"
    );
}

#[test]
fn eval_cancels_inverse_pairs() {
    assert_eq!(stdout(&["eval", "--d", "2", "--n", "2", "s1 s1^-1"]), "1\n");
}

#[test]
fn padic_trace_levels() {
    assert_eq!(
        stdout(&["trace", "--p", "2", "--R", "2", "--n", "2", "f1^{2^2:1,1}"]),
        "r=1 d=2: x_1\nr=2 d=4: x_3\n"
    );
}

#[test]
fn golden_eval_quadratic() {
    let expected = include_str!("golden/eval_d2_quadratic.txt");
    assert_eq!(stdout(&["eval", "--d", "2", "--n", "2", "s1 s1"]), expected);
}

#[test]
fn golden_padic_trace_of_squared_generator() {
    let expected = include_str!("golden/trace_p2_R3_squared.txt");
    assert_eq!(
        stdout(&[
            "trace",
            "--p",
            "2",
            "--R",
            "3",
            "--n",
            "2",
            "f1^{2^3:1,1,1} s1 s1"
        ]),
        expected
    );
}

#[test]
fn golden_check_report() {
    let expected = include_str!("golden/check_p2_R2_square.txt");
    assert_eq!(
        stdout(&[
            "check",
            "--p",
            "2",
            "--R",
            "2",
            "--n",
            "2",
            "--square",
            "--samples",
            "15"
        ]),
        expected
    );
}

#[test]
fn json_output_schema() {
    let text = stdout(&[
        "trace",
        "--p",
        "2",
        "--R",
        "2",
        "--n",
        "2",
        "--format",
        "json",
        "f1^{2^2:1,1}",
    ]);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["schema"], 1);
    assert_eq!(value["p"], 2);
    let levels = value["levels"].as_array().unwrap();
    assert_eq!(levels.len(), 2);
    assert_eq!(levels[0]["r"], 1);
    assert_eq!(levels[0]["d"], 2);
    assert_eq!(levels[0]["trace"], "x_1");
    assert_eq!(levels[1]["d"], 4);
    assert_eq!(levels[1]["trace"], "x_3");

    let classical = stdout(&["trace", "--d", "3", "--n", "2", "--format", "json", "s1"]);
    let value: serde_json::Value = serde_json::from_str(&classical).unwrap();
    assert_eq!(value["schema"], 1);
    assert_eq!(value["levels"].as_array().unwrap().len(), 1);
    assert_eq!(value["levels"][0]["trace"], "z");
}

#[test]
fn batch_file_mode() {
    let dir = std::env::temp_dir().join(format!("yokonuma-batch-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("words.txt");
    std::fs::write(&path, "s1\nf1^1 f2^1\n\ns1 s1\n").unwrap();
    let text = stdout(&[
        "trace",
        "--d",
        "2",
        "--n",
        "2",
        "--file",
        path.to_str().unwrap(),
    ]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "z");
    assert_eq!(lines[1], "x_1^2");

    let json_text = stdout(&[
        "trace",
        "--d",
        "2",
        "--n",
        "2",
        "--format",
        "json",
        "--file",
        path.to_str().unwrap(),
    ]);
    let value: serde_json::Value = serde_json::from_str(&json_text).unwrap();
    let entries = value.as_array().unwrap();
    assert_eq!(entries.len(), 3);
    assert_eq!(entries[0]["word"], "s1");
    assert_eq!(entries[0]["levels"][0]["trace"], "z");
    assert_eq!(entries[1]["levels"][0]["trace"], "x_1^2");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn word_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_yokonuma"))
        .args(["trace", "--d", "2", "--n", "2"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"s1 f2^1").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "z*x_1\n");
}

#[test]
fn identical_runs_are_byte_identical() {
    let args = [
        "check", "--p", "2", "--R", "2", "--n", "2", "--square", "--seed", "7", "--format", "json",
    ];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn parse_errors_exit_2_with_column() {
    let out = run(&["trace", "--d", "2", "--n", "2", "f1 q2"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("column 4"), "stderr: {err}");
}

#[test]
fn parameter_errors_exit_3() {
    let out = run(&["trace", "--d", "2", "--n", "2", "s5"]);
    assert_eq!(
        out.status.code(),
        Some(2),
        "braid index errors are parse errors"
    );
    let out = run(&["trace", "--n", "2", "s1"]);
    assert_eq!(out.status.code(), Some(3), "missing algebra selection");
    let out = run(&["check", "--d", "2", "--n", "2", "--square"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["trace", "--p", "4", "--R", "2", "--n", "2", "s1"]);
    assert_eq!(out.status.code(), Some(3), "4 is not prime");
}
