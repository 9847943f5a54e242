use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value as Json;

const BIN: &str = env!("CARGO_BIN_EXE_drazin");
const M2Z: &str = r#"{"kind":"matrix","dim":2,"base":{"kind":"integers"}}"#;

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    if let Some(input) = stdin {
        child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn stdout_json_lines(out: &Output) -> Vec<Json> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).expect("every stdout line is JSON"))
        .collect()
}

#[test]
fn compute_from_stdin() {
    let out = run(&["compute"], Some(r#"{"ring":{"kind":"modular","n":12},"value":2}"#));
    assert_eq!(out.status.code(), Some(0));
    let v = &stdout_json_lines(&out)[0];
    assert_eq!(v["inverse"]["value"], 8);
    assert_eq!(v["index"], 2);
}

#[test]
fn compute_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("identity.json");
    std::fs::write(&path, r#"{"ring":{"kind":"matrix","dim":2,"base":{"kind":"rationals"}},"value":[[1,0],[0,1]]}"#)
        .unwrap();
    let out = run(&["compute", path.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json_lines(&out)[0]["index"], 0);
}

#[test]
fn compute_exit_codes() {
    let out = run(&["compute"], Some(r#"{"ring":{"kind":"integers"},"value":2}"#));
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(stdout_json_lines(&out)[0]["verdict"], "non-member");
    assert!(!out.stderr.is_empty());

    let out = run(&["compute"], Some("[1, 2"));
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout_json_lines(&out)[0]["error"].is_string());
}

#[test]
fn bad_arguments_exit_two_with_json() {
    let out = run(&["verify"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout_json_lines(&out)[0]["error"].is_string());
    let out = run(&["verify", r#"{"kind":"modular","n":12}"#, "--jobs", "many"], None);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["verify", M2Z, "--theorem", "thm36"], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_integer_anticommutator_logs_all_false_pair() {
    let out = run(&["verify", M2Z, "--theorem", "thm36", "--bound", "2", "--jobs", "2"], None);
    assert_eq!(out.status.code(), Some(0));
    let lines = stdout_json_lines(&out);
    let summary = &lines.last().unwrap()["summary"];
    assert_eq!(summary["violations"], 0);
    let all_false = summary["theorems"][0]["all_non_member"].as_array().unwrap();
    assert!(!all_false.is_empty());
}

#[test]
fn verify_remark_in_integers() {
    let out = run(&["verify", r#"{"kind":"integers"}"#, "--theorem", "remark37"], None);
    assert_eq!(out.status.code(), Some(0));
    let lines = stdout_json_lines(&out);
    let r = lines.iter().find(|r| r["pair"] == serde_json::json!([1, 1])).unwrap();
    assert_eq!(r["conditions"][0]["decision"]["verdict"], "member");
    assert_eq!(r["conditions"][1]["decision"]["verdict"], "non-member");
}

#[test]
fn oracle_and_idempotents() {
    for ring in [
        r#"{"kind":"modular","n":12}"#,
        r#"{"kind":"matrix","dim":2,"base":{"kind":"prime_field","p":2}}"#,
        r#"{"kind":"modular","n":64}"#,
    ] {
        let out = run(&["oracle", ring, "--jobs", "3"], None);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(stdout_json_lines(&out)[0]["mismatches"], 0);
    }
    let out = run(&["idempotents", r#"{"kind":"modular","n":12}"#], None);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "[0,1,4,9]\n");
    let out = run(&["idempotents", r#"{"kind":"integers"}"#], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn ring_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ring.json");
    std::fs::write(&path, r#"{"kind":"modular","n":6}"#).unwrap();
    let out = run(&["idempotents", path.to_str().unwrap()], None);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "[0,1,3,4]\n");
    let out = run(&["idempotents", "/nonexistent/ring.json"], None);
    assert_eq!(out.status.code(), Some(2));
}
