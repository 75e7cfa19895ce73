use std::process::Command;

use ordkit::Term;
use ordkit_cli::{run_command, EXIT_CAP, EXIT_INVALID};

fn run(args: &[&str]) -> ordkit_cli::Outcome {
    run_command(std::iter::once("ordkit").chain(args.iter().copied()))
}

#[test]
fn abgam_json_record() {
    let o = run(&["abgam", "--n", "1", "--N", "2", "--json"]);
    assert_eq!(o.code, 0);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["n"], 1);
    assert_eq!(v["N"], 2);
    assert_eq!(v["gamma"].as_array().unwrap().len(), 3);
    assert_eq!(v["alpha_vec"][2].as_array().unwrap().len(), 0);
    let b: Term = serde_json::from_value(v["b"].clone()).unwrap();
    assert_eq!(b.to_string(), "psi(K+; 1; I + 1)");
}

#[test]
fn json_terms_re_import() {
    let o = run(&["nf", "--json", "phi(1, 0) + w*3 + 1"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let t: Term = serde_json::from_str(&o.stdout).unwrap();
    let text = run(&["nf", "phi(1, 0) + w*3 + 1"]).stdout;
    assert_eq!(format!("{t}\n"), text);
}

#[test]
fn parse_errors_are_positioned() {
    let o = run(&["cmp", "phi(1 2)", "0"]);
    assert_eq!(o.code, EXIT_INVALID);
    assert!(o.stderr.contains("1:7"), "{}", o.stderr);
    let o = run(&["--json", "cmp", "phi(1 2)", "0"]);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["error"]["col"], 7);
}

#[test]
fn classify_and_rank() {
    let o = run(&["rank", "EX X<K. R(b#0, K; 0)"]);
    assert_eq!(o.stdout, "K + 1\n");
    let o = run(&["classify", "in(0, 1)", "--lambda", "w1", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["is_delta0_lambda"], true);
}

#[test]
fn traces_succeed() {
    for which in ["thm1", "thm2"] {
        let o = run(&["trace", which, "--m", "1", "--p", "1", "--N", "2"]);
        assert_eq!(o.code, 0, "{which}: {}", o.stdout);
        assert!(!o.stdout.contains("FAIL"));
    }
}

#[test]
fn check_passes() {
    let o = run(&["check"]);
    assert_eq!(o.code, 0, "{}", o.stdout);
}

#[test]
fn enumeration_cap_exits_three() {
    let out = Command::new(env!("CARGO_BIN_EXE_ordkit"))
        .args(["enum", "--below", "I", "--size", "5"])
        .env("ORDKIT_ENUM_CAP", "50")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_CAP));
}

#[test]
fn ceiling_is_configurable() {
    let out = Command::new(env!("CARGO_BIN_EXE_ordkit"))
        .args(["nf", "tower(3, I+1)"])
        .env("ORDKIT_MAX_TOWER", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_INVALID));
    let out = Command::new(env!("CARGO_BIN_EXE_ordkit")).args(["nf", "tower(3, I+1)"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}
