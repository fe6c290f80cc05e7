use std::collections::BTreeSet;
use std::io::Write;
use std::process::{Command, Output, Stdio};

fn sqfw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sqfw"))
        .args(args)
        .env_remove("SQFW_MAX_DEPTH")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn morphism_and_dfao_windows_are_byte_identical() {
    for n in 0..=7u32 {
        let h = (3i64.pow(n) - 1) / 2;
        let n_arg = n.to_string();
        let range = format!("{}..{}", -h, h);
        let morphism = sqfw(&["generate", "--definition", "morphism", "--n", &n_arg]);
        let dfao = sqfw(&["generate", "--definition", "dfao", "--range", &range, "--alphabet", "ternary123"]);
        assert!(morphism.status.success() && dfao.status.success());
        assert_eq!(morphism.stdout, dfao.stdout, "n = {n}");
    }
}

#[test]
fn range_with_equals_sign_and_negative_bounds() {
    let o = sqfw(&["generate", "--definition", "dfao", "--range=-4..4"]);
    assert_eq!(stdout(&o), "213123132\n");
    let o = sqfw(&["generate", "--definition", "dfao", "--range", "-20..-18", "--alphabet", "balanced"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim().len(), 3);
}

#[test]
fn max_depth_env_override() {
    let run = |depth: &str, n: &str| {
        Command::new(env!("CARGO_BIN_EXE_sqfw"))
            .args(["generate", "--n", n])
            .env("SQFW_MAX_DEPTH", depth)
            .output()
            .unwrap()
    };
    assert_eq!(run("3", "3").status.code(), Some(0));
    assert_eq!(run("3", "4").status.code(), Some(3));
    assert_eq!(run("nope", "1").status.code(), Some(2));
    assert_eq!(sqfw(&["generate", "--n", "14"]).status.code(), Some(3));
}

#[test]
fn at_prints_digits_and_symbol() {
    assert_eq!(stdout(&sqfw(&["at", "8"])), "8 +0- -1\n");
    assert_eq!(stdout(&sqfw(&["at", "-17"])), "-17 -+0+ -1\n");
    assert_eq!(stdout(&sqfw(&["at", "0"])), "0  0\n");
    assert_eq!(sqfw(&["at", "1.5"]).status.code(), Some(2));
}

#[test]
fn check_reads_stdin_and_files() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sqfw"))
        .args(["check", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"11\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "square at p=0 len=2\n");

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("phi3.txt");
    std::fs::write(&path, "123213231213123132312132123\n").unwrap();
    assert_eq!(sqfw(&["check", path.to_str().unwrap()]).status.code(), Some(0));
    std::fs::write(&path, "0110100110010110").unwrap();
    let o = sqfw(&["check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("square at p="));
    std::fs::write(&path, "12x").unwrap();
    assert_eq!(sqfw(&["check", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn verify_writes_one_record_per_check() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.jsonl");
    let o = sqfw(&["verify", "--n-max", "1", "--report", report.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = std::fs::read_to_string(&report).unwrap();
    assert!(text.lines().count() >= 5);
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_ne!(v["status"], "fail", "{line}");
        assert!(v["ms"].is_number());
    }
    assert!(stdout(&o).contains("0 failed"));
}

#[test]
fn verify_default_depth_passes() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.jsonl");
    let o = sqfw(&["verify", "--n-max", "9", "--report", report.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = std::fs::read_to_string(&report).unwrap();
    let t1 = text.lines().find(|l| l.contains("theorem1_squarefree")).unwrap();
    assert!(t1.contains("\"n_max\":9"));
}

#[test]
fn verify_fault_inject_and_io_failure() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.jsonl");
    let o = sqfw(&["verify", "--n-max", "2", "--fault-inject", "--report", report.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("witness"));

    let o = sqfw(&["verify", "--n-max", "1", "--report", "/nonexistent-dir/r.jsonl"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn verify_alternate_start_symbol_is_exploratory_and_fails() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.jsonl");
    let o = sqfw(&["verify", "--n-max", "2", "--start-symbol", "1", "--report", report.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(sqfw(&["verify", "--start-symbol", "4"]).status.code(), Some(2));
}

/// Minimal structural validation of the DOT text: balanced braces, quoted
/// identifiers closed, and every statement terminated.
#[test]
fn dot_is_well_formed() {
    let o = sqfw(&["dot"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.first(), Some(&"digraph dfao {"));
    assert_eq!(lines.last(), Some(&"}"));
    for line in &lines[1..lines.len() - 1] {
        assert!(line.ends_with(';'), "{line}");
        assert_eq!(line.matches('"').count() % 2, 0, "{line}");
        assert_eq!(line.matches('[').count(), line.matches(']').count(), "{line}");
    }
    let nodes: BTreeSet<String> = lines
        .iter()
        .filter(|l| l.contains("->"))
        .flat_map(|l| l.split('"').skip(1).step_by(2).take(2).map(str::to_string).collect::<Vec<_>>())
        .collect();
    assert_eq!(nodes.len(), 3);
    assert!(text.contains("\"q0/0\" [style=bold"));
}
