//! End-to-end behaviour of the `sitepc` binary: output formats, exit codes
//! and reproducibility.

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sitepc")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

fn error_kind(args: &[&str]) -> String {
    let out = run(args);
    let v: Value =
        serde_json::from_slice(&out.stderr).unwrap_or_else(|_| panic!("{}", String::from_utf8_lossy(&out.stderr)));
    assert_eq!(v["schema"], "sitepc/error/v1");
    v["kind"].as_str().unwrap().to_string()
}

#[test]
fn every_json_output_names_its_schema() {
    let cases: [(&[&str], &str); 6] = [
        (&["expand"], "sitepc/expand/v1"),
        (&["count", "--d", "3", "--l1", "2", "--linf", "1"], "sitepc/count/v1"),
        (&["cycles", "--x", "1,1,0", "--l", "4"], "sitepc/cycles/v1"),
        (&["cycles", "--d", "3", "--l", "4"], "sitepc/short-cycles/v1"),
        (&["pc", "--d", "2", "--L", "8", "--samples", "4"], "sitepc/pc/v1"),
        (&["tau", "--d", "2", "--L", "8", "--p", "0.5", "--x", "1,0", "--samples", "4"], "sitepc/tau/v1"),
    ];
    for (args, schema) in cases {
        assert_eq!(json(args)["schema"], schema, "{args:?}");
    }
}

#[test]
fn floats_carry_seventeen_significant_digits() {
    let out = run(&["expand", "--d", "3"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"pc_float\": 2.7199074074074076e-1"), "{text}");
}

#[test]
fn csv_output_has_a_header_and_rows() {
    let out = run(&["expand", "--order", "1", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "power,q_num,q_den,pc_num,pc_den\n0,1,1,0,1\n1,5,2,1,1\n2,,,5,2\n");
}

#[test]
fn output_can_go_to_a_file() {
    let path = std::env::temp_dir().join(format!("sitepc-cli-test-{}.json", std::process::id()));
    let out = run(&["count", "--d", "4", "--l1", "3", "--linf", "1", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(v["value"], 32);
}

#[test]
fn invalid_arguments_exit_with_status_two() {
    let bad: [&[&str]; 8] = [
        &["tau", "--d", "3", "--L", "8", "--p", "1.5", "--x", "1,0,0"],
        &["tau", "--d", "3", "--L", "8", "--p", "0.2", "--x", "1,0"],
        &["tau", "--d", "3", "--L", "8", "--p", "0.2", "--x", "0,0,0"],
        &["tau", "--d", "3", "--L", "8", "--p", "0.2", "--x", "2,0,0", "--variant", "at-least"],
        &["pc", "--d", "2", "--L", "8", "--samples", "0"],
        &["pc", "--d", "2", "--L", "7"],
        &["pi", "--n", "3", "--d", "3", "--L", "10"],
        &["convert", "--input", "/nonexistent/series.json"],
    ];
    for args in bad {
        assert_eq!(code(args), 2, "{args:?}");
        assert_eq!(error_kind(args), "usage", "{args:?}");
    }
    // argument-parser errors share the status
    assert_eq!(code(&["expand", "--order", "x"]), 2);
}

#[test]
fn oversized_work_exits_with_status_four() {
    let args = ["pc", "--d", "9", "--L", "8"];
    assert_eq!(code(&args), 4);
    assert_eq!(error_kind(&args), "budget");
    assert_eq!(code(&["triangle", "--d", "6", "--L", "16", "--samples", "1"]), 4);
}

#[test]
fn finite_size_warnings_fail_only_under_strict() {
    let args = ["double", "--d", "2", "--L", "8", "--p", "0.5", "--x", "4,0", "--samples", "10"];
    let out = run(&args);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("warning:"));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["warning"].is_string());
    let mut strict = args.to_vec();
    strict.push("--strict");
    assert_eq!(code(&strict), 3);
    assert_eq!(code(&["double", "--d", "2", "--L", "8", "--p", "0.5", "--x", "1,1", "--samples", "10", "--strict"]), 0);
}

#[test]
fn stochastic_output_depends_only_on_the_seed() {
    let base = ["tau", "--d", "3", "--L", "8", "--p", "0.3", "--x", "1,1,0", "--samples", "300"];
    let with = |extra: &[&str]| {
        let mut a = base.to_vec();
        a.extend_from_slice(extra);
        let out = run(&a);
        assert!(out.status.success());
        out.stdout
    };
    let reference = with(&["--seed", "5", "--threads", "1"]);
    assert_eq!(with(&["--seed", "5", "--threads", "3"]), reference);
    assert_eq!(with(&["--seed", "5"]), reference);
    assert_ne!(with(&["--seed", "6"]), reference);
}

#[test]
fn seed_zero_reports_the_drawn_seed() {
    let v = json(&["pc", "--d", "2", "--L", "8", "--samples", "3", "--seed", "0"]);
    let seed = v["seed"].as_u64().unwrap();
    assert_ne!(seed, 0);
    let again = json(&["pc", "--d", "2", "--L", "8", "--samples", "3", "--seed", &seed.to_string()]);
    assert_eq!(again["pc"], v["pc"]);
}

#[test]
fn convert_round_trips_a_series() {
    let data = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/data/site-sigma.json");
    let v = json(&["convert", "--input", data]);
    let dir = std::env::temp_dir().join(format!("sitepc-convert-{}.json", std::process::id()));
    std::fs::write(&dir, v["output"].to_string()).unwrap();
    let back = json(&["convert", "--input", dir.to_str().unwrap()]);
    std::fs::remove_file(&dir).unwrap();
    assert_eq!(back["output"], v["input"]);
}
