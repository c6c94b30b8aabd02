use std::process::Command;

use cubicq::cli::{run_command, EXIT_FAIL, EXIT_USAGE};
use cubicq::freealg::AlgElem;
use cubicq::rewrite::{build_system, SystemKind};
use serde_json::Value;

fn run(args: &[&str]) -> (i32, Value) {
    let out = run_command(std::iter::once("cubicq").chain(args.iter().copied()));
    let text = if out.stdout.is_empty() { &out.stderr } else { &out.stdout };
    (out.code, serde_json::from_str(text).unwrap_or(Value::Null))
}

#[test]
fn normal_form_of_the_braid_word() {
    let out = run_command(["cubicq", "nf", "--system", "pos", "2 1 2"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.trim(), r#"{"terms":[{"coeff":"1","word":[1,2,1]}]}"#);
}

#[test]
fn normal_form_output_round_trips() {
    let inputs = ["1 1 1", "2 1 1 2 2", "[1 2 -1] - a*[2 2 2]", "1 2 1' 2"];
    for input in inputs {
        for (flag, kind) in [("pos", SystemKind::Positive), ("signed1", SystemKind::Signed1), ("signed2", SystemKind::Signed2)] {
            let out = run_command(["cubicq", "nf", "--system", flag, input]);
            assert_eq!(out.code, 0, "{input} {flag}: {}", out.stderr);
            let parsed = AlgElem::parse_json(out.stdout.trim()).unwrap();
            let nf = build_system(kind).unwrap().normal_form(&parsed).unwrap();
            assert_eq!(parsed, nf, "{input} under {flag}");
        }
    }
}

#[test]
fn parse_errors_carry_a_position() {
    let (code, v) = run(&["nf", "--system", "pos", "1 2 x"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(v["position"].is_number(), "{v}");
    let (code, v) = run(&["nf", "[1 2] +* a"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(v["position"].is_number(), "{v}");
    assert_eq!(run(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(run(&["nf", "--system", "neg", "1"]).0, EXIT_USAGE);
    assert_eq!(run(&["nf", "1 3"]).0, EXIT_USAGE);
}

#[test]
fn enumeration_lists_twenty_words() {
    for system in ["pos", "signed1", "signed2"] {
        let (code, v) = run(&["enumerate", "--system", system]);
        assert_eq!(code, 0);
        assert_eq!(v["count"], 20);
        assert_eq!(v["words"].as_array().unwrap().len(), 20);
    }
}

#[test]
fn membership_reports_a_witness() {
    let (code, v) = run(&["member", r#"{"terms":[{"coeff":"1","word":[1]},{"coeff":"-1","word":[2]}]}"#]);
    assert_eq!(code, 0);
    assert_eq!(v["member"], false);
    assert!(v["witness"].is_string());
    let r1 = cubicq::freealg::defining_relations().0.to_json();
    let (code, v) = run(&["member", &serde_json::to_string(&r1).unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["member"], true);
    assert!(v["witness"].is_null());
    assert_eq!(run(&["member", "{not json"]).0, EXIT_USAGE);
}

#[test]
fn module_action_on_a_basis_vector() {
    let (code, v) = run(&["a4", "apply", "--side", "left", "--word", "2", "--vector", "e_1"]);
    assert_eq!(code, 0);
    // s_2 x = a x
    assert_eq!(v["terms"], serde_json::json!([{"coeff": "a", "vector": "e_1"}]));
    let (code, _) = run(&["a4", "apply", "--side", "up", "--word", "1", "--vector", "e_1"]);
    assert_eq!(code, EXIT_USAGE);
    assert_eq!(run(&["a4", "apply", "--word", "1", "--vector", "e_26"]).0, EXIT_USAGE);
}

#[test]
fn dimension_table() {
    let out = run_command(["cubicq", "dims"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.trim(), r#"{"Q3":20,"Q4":264,"H3":24,"K":{"2":3,"3":15,"4":69,"5":357},"V3":20}"#);
}

#[test]
fn verify_reports_are_versioned_and_deterministic() {
    let (code, v) = run(&["verify", "handles"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["suites"][0]["suite"], "handles");
    let (_, a) = run(&["verify", "h3", "--seed", "5"]);
    let (_, b) = run(&["verify", "--suite", "h3", "--seed", "5"]);
    assert_eq!(a["suites"][0]["points"], b["suites"][0]["points"]);
    assert_eq!(a["suites"][0]["checks"], b["suites"][0]["checks"]);
    let (code, v) = run(&["verify", "h3", "--spec", "2,3,5"]);
    assert_eq!(code, 0);
    assert_eq!(v["suites"][0]["points"], serde_json::json!(["[2, 3, 5]"]));
}

#[test]
fn verify_options_are_validated() {
    assert_eq!(run(&["verify", "nothing"]).0, EXIT_USAGE);
    assert_eq!(run(&["verify", "h3", "--spec", "1,1,2"]).0, EXIT_USAGE);
    assert_eq!(run(&["verify", "h3", "--spec", "1,2"]).0, EXIT_USAGE);
    assert_eq!(run(&["verify", "vogel", "--alpha", "2", "--beta", "2"]).0, EXIT_USAGE);
    assert_eq!(run(&["verify", "vogel", "--alpha", "2"]).0, EXIT_USAGE);
    assert_eq!(run(&["verify", "trihecke", "--n", "9"]).0, EXIT_USAGE);
}

#[test]
fn verify_suites_with_explicit_parameters() {
    let (code, v) = run(&["verify", "vogel", "--alpha", "-5/2", "--beta", "7"]);
    assert_eq!(code, 0, "{v}");
    let (code, v) = run(&["verify", "trihecke", "--n", "4", "--spec", "2,-3,7"]);
    assert_eq!(code, 0, "{v}");
}

#[test]
fn failing_suites_exit_with_one_and_carry_witnesses() {
    let (code, v) = run(&["verify", "weights"]);
    assert_eq!(code, EXIT_FAIL);
    let failed: Vec<&Value> =
        v["suites"][0]["checks"].as_array().unwrap().iter().filter(|c| c["status"] == "fail").collect();
    assert_eq!(failed.len(), 1);
    assert!(!failed[0]["witness"].as_str().unwrap().is_empty());
}

#[test]
fn binary_honours_the_step_cap_variable() {
    let bin = env!("CARGO_BIN_EXE_cubicq");
    let ok = Command::new(bin).args(["nf", "1 1 1 1 1 1"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let capped = Command::new(bin).env("CUBICQ_STEP_CAP", "1").args(["nf", "1 1 1 1 1 1"]).output().unwrap();
    assert_eq!(capped.status.code(), Some(EXIT_FAIL));
    let err: Value = serde_json::from_slice(&capped.stderr).unwrap();
    assert!(err["error"].as_str().unwrap().contains("cap"), "{err}");
    let usage = Command::new(bin).arg("--bogus").output().unwrap();
    assert_eq!(usage.status.code(), Some(EXIT_USAGE));
}
