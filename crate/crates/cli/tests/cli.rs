use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_equimod")).args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_equimod"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn stdout(args: &[&str]) -> String {
    String::from_utf8(run(args).stdout).unwrap()
}

#[test]
fn documented_examples() {
    assert_eq!(stdout(&["feasible", "2", "1"]).trim(), r#"{"feasible":true,"m":0,"q":2}"#);
    assert_eq!(stdout(&["height", "projective", "1/2", "3"]).trim(), r#"{"height":"6"}"#);
    let info = stdout(&["field", "info", "x^4-2x^2-1"]);
    assert!(info.starts_with(r#"{"degree":4,"signature":[2,1],"#), "{info}");
}

#[test]
fn enumeration_lines() {
    let text = stdout(&["enumerate", "--deg", "1", "--bound", "2"]);
    assert_eq!(text.lines().count(), 7);
    for line in text.lines() {
        let v: Value = serde_json::from_str(line).unwrap();
        assert!(v["root_of_unity"].is_boolean());
    }
    let tsv = stdout(&["enumerate", "--deg", "2", "--bound", "1", "--output", "text"]);
    assert_eq!(tsv.lines().next(), Some("[-1,1]\t1\ttrue"));
    assert!(tsv.lines().all(|l| l.split('\t').count() == 3));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["field", "info", "x^2-1"]).status.code(), Some(2));
    assert_eq!(run(&["field", "info", "2x^2-1"]).status.code(), Some(2));
    assert_eq!(run(&["feasible", "0", "3"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "--deg", "6", "--bound", "3"]).status.code(), Some(4));
    assert_eq!(run(&["enumerate", "--deg", "2", "--bound", "2", "--budget", "10"]).status.code(), Some(4));
    assert_eq!(run(&["unit", "logvec", "x^2-2", "x"]).status.code(), Some(2));
    let err = run(&["height", "projective", "0", "0"]);
    assert_eq!(err.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&err.stderr).unwrap();
    assert_eq!(v["error"]["kind"], "invalid_input");
}

#[test]
fn decisions_and_heights() {
    let v = json(&["unit", "equalmod", "x^5-x-1", "x"]);
    assert_eq!(v["value"], false);
    let v = json(&["unit", "totpos", "x^2-2", "[3,2]"]);
    assert_eq!(v["value"], true);
    let v = json(&["unit", "congruence", "x^2-2", "[1,1]", "2"]);
    assert_eq!(v["congruent"], false);
    let v = json(&["height", "unitpoint", "x^4+x^3+x^2+x+1", "[0,0,-1,-1]"]);
    assert_eq!(v["ratio_min_poly"], "x^2 + 3x + 1");
    assert!(v["height"].as_str().unwrap().starts_with("1.6180339887"));
    let v = json(&["height", "algebraic", "x^2-2", "[1,1]", "--relative-to-degree", "2"]);
    assert!(v["height"].as_str().unwrap().starts_with("2.41421356"));
    let v = json(&["element", "norm", "x^2-2", "1+x"]);
    assert_eq!(v["norm"], "-1");
}

#[test]
fn generators_from_stdin() {
    let out = run_stdin(&["lck", "check", "x^3-x-1", "-"], "[\"0\",\"1\",\"0\"]\n\n");
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["lck"], true);
    let out = run_stdin(&["audit", "x^5-x-1", "-"], "{\"element\": \"x\"}\n");
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["status"], "CONSISTENT");
    assert_eq!(v["lck"], false);
}

#[test]
fn output_is_deterministic() {
    let args = ["subgroup", "analyze", "x^4-2x^2-1", "x", "x^3-2x"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn text_output() {
    let t = stdout(&["feasible", "2", "1", "--output", "text"]);
    assert_eq!(t, "feasible: true\nm: 0\nq: 2\n");
}
