use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nearreg"))
        .args(args)
        .output()
        .expect("nearreg runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_rank_of_identity_columns() {
    let o = run(&["check", "rank", path(&data("m12.json")), "--set", "a,b,c"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("[PASS] rank: 3"));
}

#[test]
fn check_pmatrix_and_iconn4() {
    let o = run(&["check", "pmatrix", path(&data("a12.json"))]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["check", "iconn4", path(&data("m12.json"))]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["check", "pmatrix", path(&data("a12_corrupted.json"))]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("witness"));
}

#[test]
fn check_modular_and_iso() {
    let k5 = data("k5.json");
    let o = run(&["check", "modular", path(&k5), "--flat", "01,02,03,12,13,23"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["check", "modular", path(&k5), "--flat", "01,23"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["check", "iso", path(&data("m12.json")), path(&data("a12.json"))]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["check", "iso", path(&k5), path(&data("m12.json"))]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn input_errors_exit_2() {
    let o = run(&["check", "rank", path(&data("m12.json")), "--set", "a,zz"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["check", "rank", "no-such-file.json"]);
    assert_eq!(o.status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"field": "near-regular", "rows": ["x"], "cols": ["y"], "entries": [["b"]]}"#).unwrap();
    let o = run(&["check", "pmatrix", path(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["check", "iso", path(&data("m12.json"))]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["verify-laws", "--seed", "1", "--trials", "0"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn small_n_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["build-obstruction", "--n", "4", "--out", path(dir.path())]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("n must be at least 5"));
}

#[test]
fn verify_m12_text_and_json_agree() {
    let text = stdout(&run(&["verify-m12"]));
    let json: Value = serde_json::from_str(&stdout(&run(&["verify-m12", "--json"]))).unwrap();
    let checks = json["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 7);
    for c in checks {
        let tag = if c["passed"] == true { "PASS" } else { "FAIL" };
        assert!(text.contains(&format!("[{tag}] {}:", c["name"].as_str().unwrap())), "{text}");
    }
}

#[test]
fn verify_m12_corrupted_matrix_fails() {
    let o = run(&["verify-m12", "--matrix", path(&data("a12_corrupted.json"))]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("[FAIL] totally near-unimodular"));
}

#[test]
fn verify_laws_is_deterministic() {
    let a = run(&["verify-laws", "--seed", "1", "--trials", "100"]);
    let b = run(&["--threads", "1", "verify-laws", "--seed", "1", "--trials", "100"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn build_obstruction_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let (one, two) = (dir.path().join("one"), dir.path().join("two"));
    let o = run(&["build-obstruction", "--n", "5", "--out", path(&one)]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("20 elements, rank 10"));
    let o = run(&["--threads", "2", "build-obstruction", "--n", "5", "--out", path(&two)]);
    assert_eq!(o.status.code(), Some(0));
    for f in ["matrix.json", "certificates.json"] {
        assert_eq!(std::fs::read(one.join(f)).unwrap(), std::fs::read(two.join(f)).unwrap(), "{f}");
    }
    let o = run(&["check", "pmatrix", path(&one.join("matrix.json"))]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn gpc_assemble_from_layout() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("p.json");
    let o = run(&["gpc-assemble", path(&data("k5_m12_layout.json")), "--out", path(&out)]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["check", "pmatrix", path(&out)]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["check", "rank", path(&out)]);
    assert!(stdout(&o).contains("[PASS] rank: 7"));
}

#[test]
fn signed_graph_search_finds_m12() {
    let o = run(&["signed-graph-search", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["outcome"]["found"]["verified"], true);
    assert_eq!(v["outcome"]["found"]["graph"]["edges"].as_array().unwrap().len(), 12);
}
