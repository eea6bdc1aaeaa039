use std::process::{Command, Output};

use serde_json::Value;

fn springer(args: &[&str]) -> (Output, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_springer")).args(args).output().expect("binary runs");
    let json = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out, json)
}

fn ok(args: &[&str]) -> Value {
    let (out, report) = springer(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(report["status"], "ok");
    assert_eq!(report["command"], args[0]);
    report["outputs"].clone()
}

#[test]
fn classify_dim_sch() {
    assert_eq!(ok(&["classify", "3,2,2"]), serde_json::json!({ "smooth": false, "verdict": "HasSingular" }));
    assert_eq!(ok(&["classify", "2,2,2"])["smooth"], true);
    assert_eq!(ok(&["dim", "2,2,1,1"]), 7);
    assert_eq!(ok(&["sch", "1,2,3/4,5/6"]), "1,3,6/2,5/4");
}

#[test]
fn moves_and_restrictions() {
    assert_eq!(ok(&["cmove", "1,2,4/3,6,8/5,7,10/9,11"]), "1,3,7/2,5,9/4,6,11/8,10");
    assert_eq!(ok(&["cmove", "--inverse", "1,3,7/2,5,9/4,6,11/8,10"]), "1,2,4/3,6,8/5,7,10/9,11");
    let r = ok(&["restrict", "2", "11", "1,2,4/3,6,8/5,7,10/9,11"]);
    assert_eq!(r["restricted"], "2,4,8/3,6,10/5,7/9,11");
    assert_eq!(r["standardized"], "1,3,7/2,5,9/4,6/8,10");
}

#[test]
fn enumeration_and_classes() {
    assert_eq!(ok(&["enumerate", "2,1"]), serde_json::json!(["1,2/3", "1,3/2"]));
    assert_eq!(ok(&["enumerate", "--count-only", "3,2,2"]), 21);
    let class = ok(&["eqs-class", "1,2,5/3,4,6"]);
    assert_eq!(class["size"], 5);
    let part = ok(&["eqs-partition", "3,3,1"]);
    assert_eq!(part["class_count"], 3);
    assert_eq!(ok(&["dist", "1,2,5/3,4/6"])["dist"], 3);
}

#[test]
fn flag_cells() {
    let out = ok(&["flag-cell", "3,2,2", "1,2,3,4,5,6,7"]);
    assert_eq!(out["cell"], "1,4,7/2,5/3,6");
    let (res, report) = springer(&["flag-cell", "2,1", "3,1,2"]);
    assert_eq!(res.status.code(), Some(1));
    assert_eq!(report["outputs"]["stable"], false);
}

#[test]
fn certificates() {
    let out = ok(&["certify-322"]);
    assert_eq!(out["report"]["verdict"], "singular");
    let charts = ok(&["verify-q", "2"]);
    assert_eq!(charts.as_array().map(Vec::len), Some(2));
}

#[test]
fn exit_codes() {
    let (out, _) = springer(&["sch", "1,2/4"]);
    assert_eq!(out.status.code(), Some(2));
    let (out, _) = springer(&["classify", "2,3"]);
    assert_eq!(out.status.code(), Some(2));
    let (out, report) = springer(&["verify-q", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(report["status"], "error");
    let out = Command::new(env!("CARGO_BIN_EXE_springer"))
        .args(["enumerate", "3,3"])
        .env("SPRINGER_MAX_N", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}
