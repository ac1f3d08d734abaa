use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_evoalg"))
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn analyze(name: &str, extra: &[&str]) -> Value {
    let path = data(name);
    let mut args = vec!["analyze", path.to_str().unwrap()];
    args.extend_from_slice(extra);
    let out = run(&args);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(&stdout(&out)).unwrap()
}

#[test]
fn analyze_reports_tk_data() {
    let r = analyze("tk_3112m2.json", &[]);
    assert_eq!(r["tk"]["status"], "ok");
    assert_eq!(r["tk"]["value"]["k"], 3);
    assert_eq!(r["tk"]["value"]["lambdas"], serde_json::json!(["1", "1", "-2"]));
    assert_eq!(r["snil"], serde_json::json!([["1", "0", "1/2"], ["0", "1", "1/2"]]));
    assert_eq!(r["nilradical"]["verdict"], "exists");
}

#[test]
fn analyze_is_deterministic_and_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("report.json");
    let input = data("ex4_phi_nonzero_f5.json");
    let out = run(&["analyze", input.to_str().unwrap(), "--out", out_path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&out_path).unwrap();
    let again = stdout(&run(&["analyze", input.to_str().unwrap()]));
    assert_eq!(written, again);
    let r: Value = serde_json::from_str(&written).unwrap();
    let brute = &r["phi_free"]["brute_force"];
    assert_eq!(brute["status"], "ok");
    assert_eq!(brute["value"]["phi_free"], false);
    assert_eq!(brute["value"]["frattini_ideal"], serde_json::json!([["1", "0", "0"], ["0", "1", "0"]]));
    assert_eq!(r["phi_free"]["necessary"]["passes"], true);
}

#[test]
fn analyze_marks_sections_over_budget() {
    let r = analyze("ex3_two_maximal_f5.json", &["--budget", "5"]);
    let brute = &r["phi_free"]["brute_force"];
    assert_eq!(brute["status"], "budget_exceeded");
    assert_eq!(brute["needed"], 1120);
}

#[test]
fn frattini_prints_maximal_subalgebras() {
    let path = data("ex5_dually_atomistic_f5.json");
    let out = run(&["frattini", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("maximal subalgebras: 4"), "{text}");
    assert!(text.contains("phi-free: true"));
}

#[test]
fn frattini_budget_and_field_errors() {
    let f5 = data("ex3_two_maximal_f5.json");
    assert_eq!(code(&run(&["frattini", f5.to_str().unwrap(), "--budget", "5"])), 2);
    let q = data("ex_3_2.json");
    assert_eq!(code(&run(&["frattini", q.to_str().unwrap()])), 1);
}

#[test]
fn lattice_writes_dot() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("lattice.dot");
    let path = data("ex5_dually_atomistic_f5.json");
    let out = run(&["lattice", path.to_str().unwrap(), "--dot", dot.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("dually atomistic: true"));
    let text = std::fs::read_to_string(dot).unwrap();
    assert!(text.starts_with("digraph"));
    assert!(text.contains("->"));
}

#[test]
fn classify_prints_kind() {
    let path = data("tk_3112m2.json");
    let out = run(&["classify", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("kind: not_almost_abelian"));
}

#[test]
fn examples_round_trip_through_analyze() {
    let dir = tempfile::tempdir().unwrap();
    let listed = stdout(&run(&["examples", "list"]));
    assert!(listed.lines().any(|l| l == "ek"));
    let ek = dir.path().join("ek.json");
    let out = run(&["examples", "ek", "--k", "2", "--lambdas", "1,-1,0", "--field", "7", "--out", ek.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let e = evoalg::format::read_algebra(&ek).unwrap();
    assert_eq!(e, evoalg::corpus::e_k(evoalg::FieldSpec::prime(7).unwrap(), 2, &[1, -1, 0]).unwrap());
    let out = run(&["analyze", ek.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
}

#[test]
fn input_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"field":{"kind":"rational"},"dim":2,"structure_matrix":[["1"]]}"#).unwrap();
    assert_eq!(code(&run(&["analyze", bad.to_str().unwrap()])), 1);
    assert_eq!(code(&run(&["analyze", "/nonexistent/file.json"])), 1);
    assert_eq!(code(&run(&["examples", "nope"])), 1);
    assert_eq!(code(&run(&["examples", "ek", "--k", "2", "--lambdas", "1,1"])), 1);
    assert_eq!(code(&run(&["verify", "--dim", "3", "--field", "4", "--samples", "1"])), 1);
    assert_eq!(code(&run(&["no-such-command"])), 1);
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn verify_passes_and_is_reproducible() {
    let args = ["verify", "--dim", "3", "--field", "3", "--samples", "20", "--seed", "4"];
    let a = run(&args);
    assert_eq!(code(&a), 0, "{}", stdout(&a));
    assert_eq!(stdout(&a), stdout(&run(&args)));
}

#[test]
fn verify_over_budget_exits_two() {
    let out = run(&["verify", "--dim", "4", "--field", "5", "--samples", "2", "--budget", "10"]);
    assert_eq!(code(&out), 2);
}
