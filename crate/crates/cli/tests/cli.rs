//! Command-line surface tests: exit codes, output schemas, and the factored
//! text round trip.

use std::process::Command;

use genfact_core::FactoredNat;

fn genfact(args: &[&str]) -> (i32, String, String) {
    genfact_with_env(args, &[])
}

fn genfact_with_env(args: &[&str], env: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_genfact"));
    cmd.args(args).env_remove("GENFACT_SIEVE_LIMIT");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary should run");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn json_record(args: &[&str]) -> serde_json::Value {
    let (code, stdout, stderr) = genfact(args);
    assert_eq!(code, 0, "command {args:?} failed: {stderr}");
    serde_json::from_str(stdout.trim()).expect("one JSON object per record")
}

#[test]
fn eval_examples() {
    let r = json_record(&["eval", "sf", "--degree", "1", "--x", "5", "--format", "json"]);
    assert_eq!(r["value_decimal"], "34560");
    let r = json_record(&["eval", "hf", "--degree", "1", "--x", "4", "--format", "json"]);
    assert_eq!(r["value_decimal"], "27648");
    let r = json_record(&["eval", "sf", "--degree", "2", "--x", "0", "--format", "json"]);
    assert_eq!(r["value_decimal"], "1");
    assert_eq!(r["value_factored"], "1");
}

#[test]
fn eval_pattern_and_primorial() {
    let r = json_record(&["eval", "M", "--x", "8", "--format", "json"]);
    assert_eq!(r["value_decimal"], "72831467520");
    let r = json_record(&["eval", "N", "--x", "6", "--format", "json"]);
    assert_eq!(r["value_decimal"], "1036800");
    let r = json_record(&["eval", "primorial", "--x", "5", "--format", "json"]);
    assert_eq!(r["value_decimal"], "2310");
    let r = json_record(&["eval", "primorial", "--degree", "2", "--x", "3", "--format", "json"]);
    assert_eq!(r["value_decimal"], "415800");
}

#[test]
fn json_schema_is_stable_across_functions() {
    let keys = |v: &serde_json::Value| -> Vec<String> {
        v.as_object().unwrap().keys().cloned().collect()
    };
    let sf = json_record(&["eval", "sf", "--degree", "1", "--x", "5", "--format", "json"]);
    let m = json_record(&["eval", "M", "--x", "5", "--format", "json"]);
    let pr = json_record(&["eval", "primorial", "--x", "4", "--format", "json"]);
    let val = json_record(&["valuation", "--p", "2", "--degree", "1", "--x", "4", "--format", "json"]);
    assert_eq!(keys(&sf), keys(&m));
    assert_eq!(keys(&sf), keys(&pr));
    assert_eq!(keys(&sf), keys(&val));
}

#[test]
fn factored_text_round_trips() {
    for args in [
        &["eval", "sf", "--degree", "2", "--x", "10", "--format", "json"][..],
        &["eval", "hf", "--degree", "2", "--x", "8", "--format", "json"][..],
        &["eval", "N", "--x", "11", "--format", "json"][..],
        &["eval", "primorial", "--degree", "2", "--x", "4", "--format", "json"][..],
    ] {
        let r = json_record(args);
        let parsed: FactoredNat = r["value_factored"].as_str().unwrap().parse().unwrap();
        let decimal = parsed.to_biguint().unwrap().to_string();
        assert_eq!(
            r["value_decimal"].as_str().unwrap(),
            decimal,
            "round trip for {args:?}"
        );
    }
}

#[test]
fn eval_strategies_agree_via_cli() {
    for strategy in ["recursive", "explicit", "valuation-space"] {
        let r = json_record(&[
            "eval", "sf", "--degree", "1", "--x", "5", "--strategy", strategy, "--format", "json",
        ]);
        assert_eq!(r["value_decimal"], "34560", "strategy {strategy}");
        assert_eq!(r["parameters"]["strategy"], strategy);
    }
    let (code, _, _) = genfact(&[
        "eval", "hf", "--degree", "1", "--x", "5", "--strategy", "valuation-space",
    ]);
    assert_eq!(code, 2);
}

#[test]
fn factor_prints_factored_form_only() {
    let (code, stdout, _) = genfact(&["factor", "sf", "--degree", "1", "--x", "4"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "2^5 * 3^2");
}

#[test]
fn decimal_suppressed_over_budget() {
    let r = json_record(&[
        "eval", "sf", "--degree", "1", "--x", "5", "--format", "json", "--max-digits", "2",
    ]);
    assert!(r["value_decimal"].is_null());
    assert_eq!(r["digit_count"], 5);
    assert_eq!(r["value_factored"], "2^8 * 3^3 * 5^1");
}

#[test]
fn valuation_formulas_agree() {
    for formula in ["theorem81", "digitsum", "mixed:1"] {
        let r = json_record(&[
            "valuation", "--p", "2", "--degree", "1", "--x", "4", "--formula", formula,
            "--format", "json",
        ]);
        assert_eq!(r["value_decimal"], "5", "formula {formula}");
    }
    // degree 0 routes to the plain factorial valuation
    let r = json_record(&["valuation", "--p", "2", "--degree", "0", "--x", "10", "--format", "json"]);
    assert_eq!(r["value_decimal"], "8");
    assert_eq!(r["parameters"]["formula"], "legendre");
    // a zero valuation has no factored form; the field carries "0"
    let r = json_record(&["valuation", "--p", "7", "--degree", "1", "--x", "5", "--format", "json"]);
    assert_eq!(r["value_decimal"], "0");
    assert_eq!(r["value_factored"], "0");
}

#[test]
fn domain_errors_exit_2() {
    for args in [
        &["valuation", "--p", "4", "--degree", "1", "--x", "4"][..],
        &["valuation", "--p", "2", "--degree", "2", "--x", "5", "--formula", "mixed:3"][..],
        &["eval", "hf", "--degree", "0", "--x", "3"][..],
        &["eval", "sf", "--x", "3"][..],
        &["eval", "M", "--degree", "1", "--x", "3"][..],
        &["eval", "M", "--x", "0"][..],
        &["verify", "no_such_theorem"][..],
        &["bench", "hf", "--degree", "1", "--x-max", "5", "--strategy", "valuation-space"][..],
        &["bench", "M", "--x-max", "5"][..],
    ] {
        let (code, _, stderr) = genfact(args);
        assert_eq!(code, 2, "args {args:?}: stderr {stderr}");
    }
}

#[test]
fn resource_errors_exit_3() {
    // a 100-entry primorial needs the 100th prime (541), over this ceiling
    let (code, _, stderr) = genfact_with_env(
        &["eval", "primorial", "--x", "100"],
        &[("GENFACT_SIEVE_LIMIT", "100")],
    );
    assert_eq!(code, 3, "stderr: {stderr}");
    assert!(stderr.contains("ceiling"), "stderr: {stderr}");
}

#[test]
fn verify_sweeps_run_with_overrides() {
    let (code, stdout, _) = genfact(&["verify", "theorem_7_4", "--max-x", "500"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("499 passed, 0 failed"), "stdout: {stdout}");

    let (code, stdout, _) = genfact(&["verify", "lemma_7_1", "--samples", "500", "--seed", "7"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("500 passed"), "stdout: {stdout}");

    let (code, stdout, _) = genfact(&["verify", "theorem_6_6", "--max-n", "3", "--max-x", "4"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("0 failed"), "stdout: {stdout}");
}

#[test]
fn bench_emits_csv_rows_per_strategy_and_x() {
    let (code, stdout, _) = genfact(&[
        "bench", "sf", "--degree", "1", "--x-max", "6", "--format", "csv",
    ]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.trim().lines().collect();
    assert_eq!(
        lines[0],
        "function,degree,strategy,x,elapsed_ns,digit_count,factored_terms"
    );
    // three strategies, six x values
    assert_eq!(lines.len(), 1 + 3 * 6);
    assert!(lines[1].starts_with("sf,1,recursive,1,"));
}

#[test]
fn env_var_must_be_numeric() {
    let (code, _, _) = genfact_with_env(
        &["eval", "sf", "--degree", "1", "--x", "3"],
        &[("GENFACT_SIEVE_LIMIT", "banana")],
    );
    assert_eq!(code, 2);
}
