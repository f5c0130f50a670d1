use std::path::Path;
use std::process::{Command, Output};

use quiverstab::heart::Heart;
use quiverstab::io;
use quiverstab::qp::{isomorphism, QuiverWithPotential};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quiverstab")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn version_reports_format() {
    let o = run(&["--version"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("0.1.0 (format_version 1)"));
}

#[test]
fn mutate_round_trips_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "a3.json", &io::qp_to_json(&QuiverWithPotential::linear_a(3)));
    let out = dir.path().join("mu.json");
    let o = run(&["mutate", "--in", &input, "--vertex", "2", "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let m = io::qp_from_json(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert!(isomorphism(&m, &QuiverWithPotential::three_cycle()).is_some());
}

#[test]
fn domain_errors_exit_one_with_a_single_line() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "a3.json", &io::qp_to_json(&QuiverWithPotential::linear_a(3)));
    let o = run(&["mutate", "--in", &input, "--vertex", "99"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.starts_with("error: "));
    assert_eq!(err.trim_end().lines().count(), 1);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["mutate", "--vertex", "2"]).status.code(), Some(2));
    assert_eq!(run(&["--tol", "1e-20", "surface", "compare", "--m", "5"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn hn_of_the_extension() {
    let dir = tempfile::tempdir().unwrap();
    let qp = io::qp_to_json(&QuiverWithPotential::linear_a(2));
    let doc = format!(r#"{{"qp": {qp}, "p": 2, "dim": [1, 1], "mats": {{"a1": [[1]]}}}}"#);
    let input = write(dir.path(), "e.json", &doc);
    // S2 below S1: E is stable
    let o = run(&["hn", "--in", &input, "--charge", "-1,1;1,1"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("class;phase"));
    assert_eq!(text.lines().count(), 2);
    assert!(text.lines().nth(1).unwrap().starts_with("1,1;0.5"));
    // S2 above S1: E splits into S2 then S1
    let o = run(&["hn", "--in", &input, "--charge", "1,1;-1,1", "--oracle"]);
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).map(|l| l.split(';').next().unwrap()).collect();
    assert_eq!(rows, ["0,1", "1,0"]);
}

#[test]
fn chamber_labels() {
    let o = run(&["chamber", "--imz1", "1", "--imz2", "1"]);
    assert!(o.status.success());
    assert!(!stdout(&o).trim().is_empty());
    let float = run(&["--backend", "float", "chamber", "--imz1", "1", "--imz2", "1"]);
    assert_eq!(stdout(&o), stdout(&float));
}

#[test]
fn surface_compare_pentagon() {
    let o = run(&["surface", "compare", "--m", "5"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "isomorphic: 5-cycle");
}

#[test]
fn exchange_graph_dot() {
    let dir = tempfile::tempdir().unwrap();
    let seed = write(
        dir.path(),
        "h0.json",
        &io::heart_to_json(&Heart::standard(QuiverWithPotential::linear_a(2))),
    );
    let o = run(&["exchange-graph", "--seed", &seed, "--intermediate-only"]);
    assert!(o.status.success());
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph"));
}

#[test]
fn periods_and_chambers_emit_documents() {
    let o = run(&["periods", "--poly", "z^3 - z"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.is_object());

    let o = run(&["chambers", "--grid", "-1:1:5", "-1:1:5"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert!(text.starts_with("a_re,a_im,b_re,b_im,discriminant,Z1_re,Z1_im,Z2_re,Z2_im,label,generic_flag"));
    assert_eq!(text.lines().count(), 26);
}

#[test]
fn degenerate_polynomial_is_a_domain_error() {
    let o = run(&["periods", "--poly", "z^3"]);
    assert_eq!(o.status.code(), Some(1));
}
