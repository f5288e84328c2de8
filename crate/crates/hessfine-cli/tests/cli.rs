//! Black-box checks of the installed binary: output shape and exit codes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hessfine"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn seq_prints_the_prefix_as_json() {
    let out = run(&["seq", "fine", "--max-n", "5"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["id"], "fine");
    assert_eq!(v["first_index"], 0);
    assert_eq!(v["values"][4], "2");
}

#[test]
fn seq_bfile_lines_are_bare_pairs() {
    let out = run(&["seq", "u", "--max-n", "4", "--format", "bfile"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "1 1\n2 1\n3 2\n4 1\n");
}

#[test]
fn det_requires_a_sign() {
    let out = run(&["det", "--sequence", "catalan", "--max-n", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_passes_and_reports_each_order() {
    let out = run(&["verify", "--identity", "thm1.e1", "--max-n", "6"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v[0]["identity"], "thm1.e1");
    assert_eq!(v[0]["pass"], true);
    assert!(v[0]["records"].as_array().unwrap().len() >= 5);
}

#[test]
fn verify_resolves_aliases() {
    let out = run(&["verify", "--identity", "thm3.e4", "--max-n", "5"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v[0]["identity"], "thm3.e25");
}

#[test]
fn unknown_identity_is_a_usage_error() {
    let out = run(&["verify", "--identity", "thm9.e1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("unknown identifier"));
}

#[test]
fn expansion_cap_is_a_domain_error() {
    let out = run(&[
        "trudi",
        "--a0",
        "1",
        "--sequence",
        "catalan",
        "--n",
        "30",
        "--mode",
        "compositions",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("cap"));
}

#[test]
fn fixture_crosscheck_passes() {
    let out = run(&["oeis", "check", "a225887"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["index_delta"], 0);
    assert!(v["compared"].as_u64().unwrap() >= 10);
}
