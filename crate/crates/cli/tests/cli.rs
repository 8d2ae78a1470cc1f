use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_blobtensor"))
        .args(args)
        .env("RUST_LOG", "off")
        .output()
        .unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn relations_pass() {
    let o = run(&["verify-relations", "--n", "2..4", "--l", "0,5", "--m", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["command"], "verify-relations");
    assert_eq!(v["passed"], true);
    assert_eq!(v["records"].as_array().unwrap().len(), 6);
}

#[test]
fn unsupported_order_is_skipped() {
    let o = run(&["localize", "--n", "3", "--l", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert!(v["records"].as_array().unwrap().is_empty());
    let skipped = v["skipped"].as_array().unwrap();
    assert!(!skipped.is_empty());
    assert!(skipped[0]["reason"].as_str().unwrap().contains("q^4 = 1"));
}

#[test]
fn bad_arguments_exit_2() {
    assert_eq!(run(&["localize", "--n", "x"]).status.code(), Some(2));
    assert_eq!(run(&["restrict", "--n", "4", "--lambda", "3", "--l", "5", "--m", "2"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn triangle_csv_row() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let o = run(&["triangle", "--n", "5", "--l", "5", "--m", "2", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.lines().any(|l| l == "4,1,3,3,1,0"), "{text}");
    assert!(o.stdout.is_empty());
}

#[test]
fn restrict_split_example() {
    let o = run(&["restrict", "--n", "4", "--lambda", "0", "--l", "5", "--m", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let s = &v["records"][0]["splitting"];
    assert_eq!(s["split"], true);
    assert_eq!(s["eigdims"], serde_json::json!([3, 3]));
}

#[test]
fn smallcase_all_pairs() {
    let o = run(&["smallcase", "--l", "0,3,5,7"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["records"].as_array().unwrap().len(), 2 + 1 + 3 + 5);
}

#[test]
fn adjointness_reports_dual_inconsistency() {
    let o = run(&["adjointness", "--n", "3..5", "--l", "3"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["passed"], false);
    assert!(v["summary"]["dual_answer"].is_null());
    // M_n(lambda) itself follows n2 != m
    let t = &v["summary"]["module_vs_n2"];
    assert_eq!(t["iso_when_congruent"], 0);
    assert_eq!(t["not_iso_when_not_congruent"], 0);
}

#[test]
fn empty_grid_passes() {
    let o = run(&["localize", "--n", "1..2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(json(&o)["records"].as_array().unwrap().is_empty());
}

#[test]
fn output_is_deterministic() {
    let args = ["duality", "--n", "1..5", "--backend", "cyclotomic"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
