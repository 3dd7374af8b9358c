use std::process::Command;

use clap::Parser;
use sotype_cli::{run, Cli, EXIT_OK, EXIT_USAGE};

fn run_args(args: &[&str]) -> (i32, String, String) {
    let cli = Cli::try_parse_from(std::iter::once("sotype").chain(args.iter().copied())).unwrap();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(&cli, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(format!(
        "{}/tests/golden/{name}",
        env!("CARGO_MANIFEST_DIR")
    ))
    .unwrap()
}

#[test]
fn golden_outputs() {
    assert_eq!(
        run_args(&["invariants", "PSL(2,7)", "--json"]),
        (EXIT_OK, golden("psl27_invariants.json"), String::new())
    );
    assert_eq!(
        run_args(&["spectrum", "Q(8) x F(7,3,2)"]).1,
        golden("q8_f21_spectrum.txt")
    );
    assert_eq!(
        run_args(&["--json", "alpha", "A(5)"]).1,
        golden("a5_alpha.json")
    );
}

#[test]
fn verification_output_is_deterministic() {
    for command in [
        &["verify", "theorem"][..],
        &["verify", "counterexample"],
        &["hunt", "--order", "168"],
    ] {
        for json in [false, true] {
            let mut outputs = Vec::new();
            for threads in ["1", "2", "8", "1"] {
                let mut args = command.to_vec();
                args.extend(["--threads", threads]);
                if json {
                    args.push("--json");
                }
                let (code, out, _) = run_args(&args);
                assert_eq!(code, EXIT_OK, "{args:?}");
                outputs.push(out);
            }
            assert!(
                outputs.windows(2).all(|w| w[0] == w[1]),
                "{command:?} differs across runs"
            );
        }
    }
}

#[test]
fn json_reports_parse_and_pass() {
    let (_, out, _) = run_args(&["verify", "counterexample", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(
        v["candidates"][0]["certificate"]["reason"],
        "spectrum-mismatch"
    );
    assert_eq!(v["candidates"][0]["certificate"]["t"], 7);
    assert_eq!(v["prose_claims"][0]["consistent"], false);
    let (_, out, _) = run_args(&["verify", "theorem", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 8);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn hunt_without_simple_group_has_a_note() {
    let (code, out, _) = run_args(&["hunt", "--order", "7", "--max-factors", "1", "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["note"], "no simple catalog group of order 7 (nonabelian)");
    assert_eq!(v["collisions"].as_array().unwrap().len(), 0);
}

#[test]
fn hunt_at_60_records_absence() {
    let (code, out, _) = run_args(&["hunt", "--order", "60", "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["collisions"].as_array().unwrap().len(), 0);
    assert_eq!(v["note"], "none found in searched families");
}

#[test]
fn input_errors_exit_with_usage_code() {
    let (code, out, err) = run_args(&["alpha", "C(7) x (Q(8)"]);
    assert_eq!((code, out.as_str()), (EXIT_USAGE, ""));
    assert!(err.contains("byte 12"), "{err}");
    assert_eq!(run_args(&["alpha", "F(7,3,3)"]).0, EXIT_USAGE);
    assert_eq!(
        run_args(&["alpha", "A(5)", "--max-elements", "10"]).0,
        EXIT_USAGE
    );
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_sotype");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["alpha", "PSL(2,7)"]), Some(0));
    assert_eq!(status(&["alpha", "Z(3)"]), Some(2));
    assert_eq!(status(&["frobnicate"]), Some(2));
    assert_eq!(
        status(&["hunt", "--order", "168", "--max-factors", "0"]),
        Some(2)
    );
    assert_eq!(status(&["--help"]), Some(0));
    let out = Command::new(bin)
        .args(["alpha", "PSL(2,7)"])
        .output()
        .unwrap();
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "alpha(PSL(2,7)) = {1, 21, 42, 48, 56} (|alpha| = 5)\n"
    );
}
