use std::process::{Command, Output};

use serde_json::Value;

fn powcut(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_powcut")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_report_schema() {
    let o = powcut(&["verify", "--theorem", "thm12", "--group", "abelian:3,3,5"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    for key in [
        "group",
        "theorem",
        "applicable",
        "hypothesis_trace",
        "predicted_kappa",
        "observed_kappa",
        "predicted_cutsets",
        "observed_cutsets",
        "verdict",
    ] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["predicted_kappa"], 5);
    assert_eq!(v["observed_kappa"], 5);
    assert_eq!(v["verdict"], "match");
    assert_eq!(v["observed_cutsets"].as_array().unwrap().len(), 1);
    assert!(v["hypothesis_trace"].as_array().unwrap().iter().all(|c| c["cond"].is_string()));
}

#[test]
fn survey_is_deterministic() {
    let args = ["survey", "--max-order", "30", "--theorem", "thm11"];
    let a = powcut(&args);
    let b = powcut(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let lines: Vec<Value> = stdout(&a).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(lines.iter().all(|r| r["verdict"] != "mismatch"));
    assert!(lines.iter().any(|r| r["verdict"] == "match"));
}

#[test]
fn survey_csv_has_header() {
    let o = powcut(&["survey", "--max-order", "12", "--theorem", "thm13", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    let header = lines.next().unwrap();
    assert!(header.starts_with("group,theorem"));
    let cols = header.split(',').count();
    assert!(lines.all(|l| l.split(',').count() >= cols));
}

#[test]
fn kappa_json_for_quaternion() {
    let o = powcut(&["kappa", "--group", "quaternion:8", "--json"]);
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["kappa"], 2);
    assert_eq!(v["cut"].as_array().unwrap().len(), 2);
}

#[test]
fn complete_graph_has_no_cut() {
    let o = powcut(&["kappa", "--group", "cyclic:7", "--json"]);
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["kappa"], 6);
    assert!(v["cut"].is_null());
}

#[test]
fn cutsets_all_lists_four_sets() {
    let o = powcut(&["cutsets", "--group", "abelian:2,2,3", "--all"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("count 4"));
    assert!(out.contains("[0, 4, 8]"));
}

#[test]
fn invalid_input_exits_2() {
    assert_eq!(powcut(&["kappa", "--group", "bogus:3"]).status.code(), Some(2));
    assert_eq!(powcut(&["kappa", "--group", "abelian:4"]).status.code(), Some(2));
    assert_eq!(powcut(&["verify", "--theorem", "thm9", "--group", "cyclic:6"]).status.code(), Some(2));
    assert_eq!(powcut(&["suite", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(powcut(&["export-dot", "--group", "cyclic:4", "--remove", "9"]).status.code(), Some(2));
    assert_eq!(powcut(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn resource_cap_exits_3_only_when_strict() {
    let base = ["verify", "--theorem", "thm13", "--group", "abelian:3,3,5,5", "--max-vertices", "100"];
    let lax = powcut(&base);
    assert_eq!(lax.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&lax).trim()).unwrap();
    assert_eq!(v["verdict"], "skipped-resource");
    let mut strict = base.to_vec();
    strict.push("--strict");
    assert_eq!(powcut(&strict).status.code(), Some(3));
}

#[test]
fn hypothesis_failure_is_not_a_mismatch() {
    let o = powcut(&["verify", "--theorem", "thm12", "--group", "cyclic:12"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["applicable"], false);
    assert_eq!(v["verdict"], "skipped-hypothesis");
}

#[test]
fn dot_export_golden() {
    let o = powcut(&["export-dot", "--group", "cyclic:3"]);
    let expected = "graph \"C3\" {\n  0 [label=\"0:1\"];\n  1 [label=\"1:3\"];\n  2 [label=\"2:3\"];\n  0 -- 1;\n  0 -- 2;\n  1 -- 2;\n}\n";
    assert_eq!(stdout(&o), expected);
    let removed = stdout(&powcut(&["export-dot", "--group", "cyclic:3", "--remove", "0"]));
    assert!(!removed.contains("0 -- "));
    assert!(removed.contains("1 -- 2;"));
}

#[test]
fn suite_command_reports_json() {
    let o = powcut(&["suite", "--suite", "mtilde-cutset", "--max-order", "24"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["suite"], "mtilde-cutset");
    assert!(v["entries"].as_array().unwrap().iter().all(|e| e["status"] != "fail"));
}
