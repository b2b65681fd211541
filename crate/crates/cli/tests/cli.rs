//! End-to-end tests of the binary: exit codes, report shape, and output
//! determinism.

use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_window-calculus"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(output: &Output) -> Value {
    assert!(
        !output.stdout.is_empty(),
        "expected JSON on stdout, stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    serde_json::from_slice(&output.stdout).expect("stdout is valid JSON")
}

/// The report with its only run-varying field zeroed.
fn masked(output: &Output) -> Value {
    let mut v = stdout_json(output);
    let obj = v.as_object_mut().expect("report is an object");
    assert!(obj.contains_key("elapsedMs"), "elapsedMs present");
    obj.insert("elapsedMs".into(), Value::from(0));
    v
}

#[test]
fn poincare_reproduces_gr_2_4() {
    let out = run(&["poincare", "--m", "2", "--n", "4", "--json"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["schemaVersion"], 1);
    assert_eq!(v["command"], "poincare");
    assert_eq!(v["pass"], "n/a");
    let coeffs = v["results"]["coefficients"].as_object().unwrap();
    let expected = [("-4", 1), ("-2", 1), ("0", 2), ("2", 1), ("4", 1)];
    assert_eq!(coeffs.len(), expected.len());
    for (key, val) in expected {
        assert_eq!(coeffs[key], val, "coefficient of q^{key}");
    }
}

#[test]
fn json_output_is_deterministic() {
    let args = ["lascoux", "--k", "2", "--i", "1", "--json"];
    let a = masked(&run(&args));
    let b = masked(&run(&args));
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&b).unwrap()
    );
    // canonical field order in the raw bytes
    let raw = run(&args).stdout;
    let text = String::from_utf8(raw).unwrap();
    assert!(text.starts_with("{\"schemaVersion\":1,\"command\":"));
}

#[test]
fn window_rejects_non_generic_delta() {
    let out = run(&["window", "--N", "3", "--delta", "1/2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("non-generic"), "stderr: {err}");
}

#[test]
fn window_computes_interval() {
    let out = run(&["window", "--N", "3", "--delta", "2/5", "--json"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["results"]["lo"], -1);
    assert_eq!(v["results"]["hi"], 2);
}

#[test]
fn rickard_cancel_reports_leftover() {
    let out = run(&["rickard-cancel", "--i", "2", "--json"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["results"]["pairs"], 1);
    assert_eq!(v["results"]["leftover"]["l"], 1);
    assert_eq!(v["results"]["leftover"]["lambda"], Value::Array(vec![]));
    assert_eq!(v["results"]["leftover"]["degree"], -6);
    assert_eq!(v["results"]["leftoverSplitDegree"], -5);
}

#[test]
fn unknown_subcommand_is_usage_error() {
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_commands_pass() {
    for args in [
        vec!["verify-cor-inv", "--k", "2", "--N", "5", "--json"],
        vec!["verify-lem-resolni", "--json"],
        vec!["verify-grade-restriction", "--json"],
        vec!["verify-eq-las", "--json"],
    ] {
        let out = run(&args);
        assert!(out.status.success(), "{args:?}");
        let v = stdout_json(&out);
        assert_eq!(v["pass"], "pass", "{args:?}");
        assert_eq!(v["results"]["violations"], Value::Array(vec![]), "{args:?}");
    }
}

#[test]
fn thread_cap_is_validated() {
    let out = bin()
        .args(["verify-cor-inv", "--k", "2", "--N", "5"])
        .env("WINDOWCALC_THREADS", "zero?")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = bin()
        .args(["verify-cor-inv", "--k", "2", "--N", "5", "--json"])
        .env("WINDOWCALC_THREADS", "2")
        .output()
        .unwrap();
    assert!(out.status.success());
}

#[test]
fn lr_handles_negative_entries() {
    let out = run(&["lr", "--k", "2", "--lambda", "1,0", "--mu", "0,-1", "--json"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    let terms = v["results"]["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    assert_eq!(terms[0]["weight"], serde_json::json!([0, 0]));
    assert_eq!(terms[1]["weight"], serde_json::json!([1, -1]));
}

#[test]
fn bwb_zero_and_nonzero() {
    let out = run(&["bwb", "--a", "1", "--b", "2", "--quot", "0", "--sub", "1", "--json"]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["results"]["zero"], true);

    let out = run(&["bwb", "--a", "1", "--b", "2", "--quot", "0", "--sub", "2", "--json"]);
    let v = stdout_json(&out);
    assert_eq!(v["results"]["degree"], 1);
    assert_eq!(v["results"]["weight"], serde_json::json!([1, 1]));
}

#[test]
fn generators_from_bounds_and_from_delta() {
    let out = run(&["generators", "--k", "2", "--lo", "0", "--hi", "2", "--json"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["results"]["count"], 3);
    assert_eq!(
        v["results"]["generators"],
        serde_json::json!([[0, 0], [1, 0], [1, 1]])
    );

    let out = run(&["generators", "--k", "1", "--N", "4", "--delta", "1/3", "--json"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["results"]["count"], 4);

    // mixing the two parameterizations is a usage error
    let out = run(&["generators", "--k", "1", "--lo", "0", "--N", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn human_output_mentions_verdict() {
    let out = run(&["betti", "--i", "4", "--l", "2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("command: betti"));
    assert!(text.contains("row:"));
    assert!(text.contains("pass: n/a"));
}

#[test]
fn betti_precondition() {
    let out = run(&["betti", "--i", "2", "--l", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn lascoux_reports_boundary_terms() {
    // at i = k the top Koszul level reaches the box boundary
    let out = run(&["lascoux", "--k", "2", "--i", "2", "--json"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    let boundary = v["results"]["needsWindowResolution"].as_array().unwrap();
    assert!(!boundary.is_empty());
    for entry in boundary {
        let lambda = entry["lambda"].as_array().unwrap();
        assert!(lambda.iter().any(|e| e.as_i64() == Some(2)));
    }
}
