//! End-to-end tests of the command-line binary: exit codes, output modes,
//! and pipe composition, exercised through real child processes.

use std::io::{Read, Write};
use std::process::{Command, Stdio};

struct Run {
    stdout: String,
    stderr: String,
    code: i32,
}

fn run(args: &[&str]) -> Run {
    run_with_stdin(args, None)
}

fn run_with_stdin(args: &[&str], input: Option<&str>) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_extsplit"));
    cmd.args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    let mut child = cmd.spawn().expect("binary should spawn");
    if let Some(text) = input {
        child
            .stdin
            .as_mut()
            .expect("stdin requested")
            .write_all(text.as_bytes())
            .expect("stdin should accept input");
    }
    drop(child.stdin.take());
    let out = child.wait_with_output().expect("binary should finish");
    Run {
        stdout: String::from_utf8(out.stdout).expect("stdout is utf-8"),
        stderr: String::from_utf8(out.stderr).expect("stderr is utf-8"),
        code: out.status.code().expect("no signal expected"),
    }
}

#[test]
fn check_reports_any_split_without_failing() {
    let bad = run(&["check", "petersen", "--x", "0,2,6"]);
    assert_eq!(bad.code, 0, "check reports, it does not judge: {}", bad.stderr);
    assert!(bad.stdout.contains("external false"));
    assert!(bad.stdout.contains("conjecture witness: false"));

    let good = run(&["check", "petersen", "--x", "0,3,6,7"]);
    assert_eq!(good.code, 0);
    assert!(good.stdout.contains("external true"));
    assert!(good.stdout.contains("conjecture witness: true"));
}

#[test]
fn check_labels_non_cubic_graphs() {
    let r = run(&["check", "g6:A_", "--x", "0"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("conjecture witness: n/a (graph is not cubic)"));
}

#[test]
fn malformed_input_exits_two() {
    let bad_g6 = run(&["check", "g6:C~~", "--x", "0"]);
    assert_eq!(bad_g6.code, 2);
    assert!(bad_g6.stderr.starts_with("error:"), "stderr: {}", bad_g6.stderr);

    let bad_stdin = run_with_stdin(&["solve", "-", "--format", "graph6"], Some("~A\n"));
    assert_eq!(bad_stdin.code, 2);
    assert!(bad_stdin.stderr.starts_with("error:"));

    let bad_vertex = run(&["check", "k4", "--x", "9"]);
    assert_eq!(bad_vertex.code, 2);
    assert!(bad_vertex.stderr.starts_with("error:"));
}

#[test]
fn solve_picks_a_verified_method_for_petersen() {
    let r = run(&["solve", "petersen"]);
    assert_eq!(r.code, 0, "stderr: {}", r.stderr);
    assert!(r.stdout.contains("solved via tree-cycle"), "stdout: {}", r.stdout);
    assert!(r.stdout.contains("external true"));
}

#[test]
fn solve_with_impossible_method_exits_three() {
    let r = run(&["solve", "petersen", "--method", "edge-colouring"]);
    assert_eq!(r.code, 3);
    assert!(
        r.stdout.contains("no proper 3-edge-colouring"),
        "stdout: {}",
        r.stdout
    );
}

#[test]
fn json_output_carries_schema_and_outcome() {
    let r = run(&["solve", "petersen", "--out", "json"]);
    assert_eq!(r.code, 0);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).expect("valid json");
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], "solve");
    assert_eq!(v["graph"]["n"], 10);
    assert_eq!(v["graph"]["graph6"], "IheA@GUAo");
    assert_eq!(v["outcome"]["status"], "solved");
    assert_eq!(v["outcome"]["method"], "tree-cycle");
    assert_eq!(v["outcome"]["report"]["is_external"], true);
    let imb = v["outcome"]["report"]["imbalance"].as_i64().expect("imbalance");
    assert!(imb.abs() <= 2);
}

#[test]
fn dot_output_draws_sides_and_cut() {
    let r = run(&["check", "k4", "--x", "0,1", "--out", "dot"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("graph external_split {"));
    assert!(r.stdout.contains("fillcolor=black"));
    assert!(r.stdout.contains("fillcolor=white"));
    assert!(r.stdout.contains("style=dashed"));
}

#[test]
fn oracle_refuses_oversized_graphs_with_exit_three() {
    let r = run(&["oracle", "petersen", "--max-n", "8"]);
    assert_eq!(r.code, 3);
    assert!(r.stderr.starts_with("error:"));
}

#[test]
fn decompose_lists_every_certificate_search() {
    let r = run(&["decompose", "k4"]);
    assert_eq!(r.code, 0, "stderr: {}", r.stderr);
    assert!(r.stdout.contains("tree + cycle partition: found"));
    assert!(r.stdout.contains("proper 3-edge-colouring: found"));
    assert!(r.stdout.contains("nowhere-zero 3-flow: not found"));
    assert!(r.stdout.contains("nowhere-zero 4-flow: found"));
}

#[test]
fn generate_prints_the_census_and_validates_its_bounds() {
    let r = run(&["generate", "--max-n", "6"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "C~\nENqg\nE]ow\n");

    let odd = run(&["generate", "--max-n", "7"]);
    assert_eq!(odd.code, 2);
    assert!(odd.stderr.starts_with("error:"));

    let beyond = run(&["generate", "--max-n", "18"]);
    assert_eq!(beyond.code, 3);
    assert!(beyond.stderr.starts_with("error:"));
}

#[test]
fn generate_piped_into_survey_is_deterministic() {
    let census = run(&["generate", "--max-n", "10"]);
    assert_eq!(census.code, 0);
    assert_eq!(census.stdout.lines().count(), 27);

    let first = run_with_stdin(&["survey", "-"], Some(&census.stdout));
    let second = run_with_stdin(&["survey", "-"], Some(&census.stdout));
    assert_eq!(first.code, 0, "stderr: {}", first.stderr);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.code, second.code);
    assert!(first
        .stdout
        .trim_end()
        .ends_with("27 graphs: 27 solved, 0 refuted, 0 unresolved"));
}

#[test]
fn closed_output_pipe_is_not_an_error() {
    // A downstream reader such as `head` may close the pipe before the
    // census is written; that must stay silent and keep the exit code.
    let mut child = Command::new(env!("CARGO_BIN_EXE_extsplit"))
        .args(["generate", "--max-n", "12"])
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary should spawn");
    drop(child.stdout.take());
    let status = child.wait().expect("binary should finish");
    let mut stderr = String::new();
    child
        .stderr
        .take()
        .expect("stderr requested")
        .read_to_string(&mut stderr)
        .expect("stderr is utf-8");
    assert_eq!(status.code(), Some(0), "stderr: {stderr}");
    assert_eq!(stderr, "");
}

#[test]
fn survey_names_the_offending_line() {
    let r = run_with_stdin(&["survey", "-"], Some("C~\n~A\n"));
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("line 2"), "stderr: {}", r.stderr);
}
