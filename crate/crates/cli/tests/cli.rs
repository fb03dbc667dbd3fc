use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_pcpath");

fn run(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let o = child.wait_with_output().unwrap();
    (o.status.code().unwrap(), String::from_utf8(o.stdout).unwrap(), String::from_utf8(o.stderr).unwrap())
}

fn stdout_ok(args: &[&str], stdin: &str) -> String {
    let (code, out, err) = run(args, stdin);
    assert_eq!(code, 0, "pcpath {args:?}: {err}");
    out
}

const EDGE: &str = "2 1\n0 1 0\n";

#[test]
fn gen_then_oracle_via_stdin_and_file() {
    let g = stdout_ok(&["gen", "tilde", "3", "4"], "");
    assert_eq!(stdout_ok(&["oracle", "path"], &g), "length 6, exact\nwitness 1,2,3,0,4,5,6\n");
    assert_eq!(stdout_ok(&["oracle", "path", "-"], &g), stdout_ok(&["oracle", "path"], &g));

    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("t.ecg");
    stdout_ok(&["gen", "tilde", "3", "4", "-o", file.to_str().unwrap()], "");
    assert_eq!(std::fs::read_to_string(&file).unwrap(), g);
    let j: Value = serde_json::from_str(&stdout_ok(&["oracle", "cycle", file.to_str().unwrap(), "--json"], "")).unwrap();
    assert_eq!(j["length"], 3);
    assert_eq!(j["exact"], true);
}

#[test]
fn no_cycle_text() {
    assert_eq!(stdout_ok(&["oracle", "cycle"], EDGE), "no p.c. cycle, exact\n");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["frobnicate"], "").0, 64);
    assert_eq!(run(&["gen", "tilde", "x", "2"], "").0, 64);
    assert_eq!(run(&["oracle", "path"], "3 1\n0 0 1\n").0, 65);
    assert_eq!(run(&["oracle", "path"], "not a graph").0, 65);
    assert_eq!(run(&["rotate", "--path", "0,1,0", "--op", "f:1"], EDGE).0, 66);
    assert_eq!(run(&["check", "thm2"], EDGE).0, 67);
    assert_eq!(run(&["oracle", "path", "/nonexistent/g.ecg"], "").0, 74);
}

#[test]
fn rotations() {
    let out = stdout_ok(&["rotate", "--positional", "--path", "1,2,3,4,5,6", "--op", "g:1", "--op", "f:3"], "");
    assert_eq!(out.trim(), "6,1,5,4,3,2");
    let g = stdout_ok(&["gen", "rainbow-complete", "4"], "");
    assert_eq!(stdout_ok(&["rotate", "--path", "0,1,2,3", "--op", "f:3"], &g).trim(), "1,0,2,3");
    let (code, _, err) = run(&["rotate", "--path", "0,1,2", "--op", "f:9"], &g);
    assert_eq!(code, 66, "{err}");
}

#[test]
fn closure_output() {
    let g = stdout_ok(&["gen", "rainbow-complete", "3"], "");
    let out = stdout_ok(&["closure", "--path", "0,1,2"], &g);
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines[0].starts_with("|R(P)| = ") && lines[0].ends_with("(complete)"), "{out}");
    assert_eq!(lines[1], "X(P) = 0,1,2");
    assert_eq!(lines[2], "Y(P) = 0,1,2");
}

#[test]
fn yeo_json() {
    let g = stdout_ok(&["gen", "recursive", "2", "3", "3"], "");
    let j: Value = serde_json::from_str(&stdout_ok(&["yeo", "--json"], &g)).unwrap();
    assert_eq!(j["acyclic"], true);
    assert!(!j["steps"].as_array().unwrap().is_empty());
    let k = stdout_ok(&["gen", "rainbow-complete", "3"], "");
    let j: Value = serde_json::from_str(&stdout_ok(&["yeo", "--json"], &k)).unwrap();
    assert_eq!(j["acyclic"], false);
    assert_eq!(j["cycle"].as_array().unwrap().len(), 4);
}

#[test]
fn export_dot() {
    let out = stdout_ok(&["export-dot"], EDGE);
    assert!(out.starts_with("graph G {"), "{out}");
    assert!(out.contains("0 -- 1"), "{out}");
}

#[test]
fn check_many_files_keeps_order() {
    let dir = tempfile::tempdir().unwrap();
    let mut paths = Vec::new();
    for seed in 0..12 {
        let p = dir.path().join(format!("g{seed:02}.ecg"));
        let ps = p.to_str().unwrap().to_string();
        stdout_ok(&["gen", "random", "7", "2", "3", "--seed", &seed.to_string(), "-o", &ps], "");
        paths.push(ps);
    }
    let mut args = vec!["check", "thm2", "--jobs", "3"];
    args.extend(paths.iter().map(String::as_str));
    let out = stdout_ok(&args, "");
    let reports: Vec<Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(reports.len(), paths.len());
    for (r, p) in reports.iter().zip(&paths) {
        assert_eq!(r["instance"], p.as_str());
        assert_eq!(r["schema"], "pcpath-report/1");
        assert_eq!(r["verdict"], "pass");
    }
    args[3] = "1";
    assert_eq!(stdout_ok(&args, ""), out);
}

#[test]
fn prop_upper_without_input() {
    let j: Value = serde_json::from_str(&stdout_ok(&["check", "prop4:3,3,3"], "")).unwrap();
    assert_eq!(j["longest_path"], 10);
    assert_eq!(j["equality"], true);
    assert_eq!(run(&["check", "prop4:3,3,3", "--offset", "1"], "").0, 2);
    assert_eq!(run(&["check", "nonsense"], "").0, 64);
}

#[test]
fn hunt_reports_counterexample() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("cx.ecg");
    let (code, out, _) = run(&["hunt", "conj5", "--offset", "1", "-o", file.to_str().unwrap()], "");
    assert_eq!(code, 4);
    let j: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(j["verdict"], "fail");
    let g = std::fs::read_to_string(&file).unwrap();
    assert_eq!(run(&["check", "conj5:3", "--offset", "1"], &g).0, 2);
    assert_eq!(run(&["check", "conj5:3"], &g).0, 0);
}
