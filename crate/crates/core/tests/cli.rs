//! End-to-end runs of the `reflexa` binary.

use std::process::{Command, Output};

use serde_json::Value;

fn reflexa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_reflexa")).args(args).env_remove("REFLEXA_BUDGET").output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn verify_subset_passes() {
    let out = reflexa(&["verify-paper", "--filter", "kxn:*"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let v = json(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(v["entries"].as_array().unwrap().len(), 3);
}

#[test]
fn full_corpus_passes() {
    let out = reflexa(&["--text", "verify-paper"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert!(text.lines().all(|l| l.starts_with("PASS")), "{text}");
}

#[test]
fn bad_input_exits_two() {
    let out = reflexa(&["ring", "--ring", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown ring"));
    let out = reflexa(&["ring", "--vars", "x,y", "--ideal", "x^2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = reflexa(&["classify", "--ring", "lam", "--module", "{\"builder\":\"ideal\",\"gens\":[\"1+x\"]}"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn small_budget_stops_tower_with_code_three() {
    let out = reflexa(&["--budget", "20", "tower", "--ring", "ex56", "--module", "m", "--depth", "8"]);
    assert_eq!(out.status.code(), Some(3));
    let v = json(&out);
    assert_eq!(v["tower"]["partial"], true);
    assert!(v["tower"]["lengths"].as_array().unwrap().len() < 9);
}

#[test]
fn budget_is_read_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_reflexa"))
        .args(["resolve", "--ring", "lam", "--steps", "8"])
        .env("REFLEXA_BUDGET", "30")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let v = json(&out);
    assert_eq!(v["budget"], 30);
    assert_eq!(v["partial"], true);
}

#[test]
fn reports_are_deterministic() {
    let args = ["classify", "--ring", "ex56", "--module", "random", "--seed", "9", "--bound", "4"];
    let a = reflexa(&args);
    let b = reflexa(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["input_hash"].as_str().unwrap().len(), 64);
}

#[test]
fn ring_report_names_the_certificate_rule() {
    let v = json(&reflexa(&["ring", "--ring", "lam"]));
    assert_eq!(v["bnsi_summary"], "certified(rule m2=0)");
    assert_eq!(v["report"]["invariants"]["length"], 3);
    let v = json(&reflexa(&["ring", "--ring", "ex56"]));
    assert_eq!(v["bnsi_summary"], "certified(rule m3=0,m2!=soc)");
}

#[test]
fn text_output_for_each_command() {
    let out = reflexa(&["--text", "classify", "--ring", "lam", "--module", "k"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("torsionless") && text.contains("reflexive"), "{text}");
    let out = reflexa(&["--text", "resolve", "--ring", "lam", "--steps", "4"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("betti [1, 2, 4, 8, 16]"));
    let out = reflexa(&["--text", "tower", "--ring", "ex57", "--module", "m", "--depth", "3"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("length 4") && text.contains("length 16"), "{text}");
}

#[test]
fn inline_ring_and_module_json() {
    let ring = r#"{"field":"F7","vars":["x","y"],"ideal":["x^2","y^2"]}"#;
    let module = r#"{"builder":"presentation","rows":1,"matrix":[["x"]]}"#;
    let out = reflexa(&["classify", "--ring", ring, "--module", module, "--field", "F7"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["length"], 2);
    assert_eq!(v["report"]["totally_reflexive"]["status"], "certified_true");
}
