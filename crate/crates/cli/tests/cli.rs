//! End-to-end checks of the `mzv` binary: pinned wire formats, exit
//! codes, determinism, and the environment-variable default.

use std::process::{Command, Output};

fn mzv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mzv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn mzv_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mzv"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn reduce_json_is_bit_exact() {
    let out = mzv(&["reduce", "-m", "0,0", "--json"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "{\"terms\":[{\"shift\":2,\"coeff\":\"1/2\"},{\"shift\":1,\"coeff\":\"1\"},{\"shift\":0,\"coeff\":\"1/3\"}]}\n"
    );
}

#[test]
fn zeta_neg_prints_bare_rational() {
    let out = mzv(&["zeta", "neg", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "-1/12\n");
}

#[test]
fn bernoulli_outputs() {
    assert_eq!(stdout(&mzv(&["bernoulli", "num", "12"])), "-691/2730\n");
    assert_eq!(stdout(&mzv(&["bernoulli", "poly", "2"])), "a^2 - a + 1/6\n");
    assert_eq!(
        stdout(&mzv(&["bernoulli", "poly", "1", "--bar", "--json"])),
        "{\"coeffs\":[\"1/2\",\"1\"]}\n"
    );
}

#[test]
fn hurwitz_poly_outputs() {
    assert_eq!(stdout(&mzv(&["hurwitz", "poly", "0"])), "-a + 1/2\n");
    assert_eq!(
        stdout(&mzv(&["hurwitz", "poly", "0", "--shifted"])),
        "-a - 1/2\n"
    );
}

#[test]
fn eval_exact_value() {
    let out = mzv(&["eval", "-m", "0,0", "--m1", "0"]);
    assert_eq!(stdout(&out), "-1/4\n");
}

#[test]
fn verify_prop1_has_31_passing_cases() {
    let out = mzv(&["verify", "prop1", "--max-m", "30"]);
    assert!(out.status.success(), "exit should be 0 on all-pass");
    let text = stdout(&out);
    assert_eq!(text.matches("  PASS  ").count(), 31);
    assert!(text.contains("suite prop1: PASS (31/31 cases)"));
}

#[test]
fn verify_json_parses_back() {
    let out = mzv(&["verify", "fourier", "--json"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["suite"], "fourier");
    assert_eq!(report["overall"], "pass");
    assert!(report["cases"].as_array().unwrap().len() >= 4);
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        vec!["reduce", "-m", "1,2", "--json"],
        vec!["verify", "fourier"],
        vec!["parseval", "--s1", "-0.3", "--s2", "-0.4", "--json"],
    ] {
        let a = mzv(&args);
        let b = mzv(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(mzv(&["zeta", "neg", "notanumber"]).status.code(), Some(2));
    assert_eq!(mzv(&["reduce", "--bogus-flag"]).status.code(), Some(2));
    // eval needs exactly one of --m1/--s1
    assert_eq!(mzv(&["eval", "-m", "0"]).status.code(), Some(2));
    assert_eq!(
        mzv(&["eval", "-m", "0", "--m1", "1", "--s1", "2"]).status.code(),
        Some(2)
    );
}

#[test]
fn pole_and_domain_errors_exit_3() {
    let pole = mzv(&["eval", "-m", "0", "--s1", "2"]);
    assert_eq!(pole.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&pole.stderr).contains("pole"));

    let domain = mzv(&["eval", "-m", "0", "--s1", "5"]);
    assert_eq!(domain.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&domain.stderr).contains("domain"));

    let unsafe_sum = mzv(&["prop2", "rhs", "-m", "0,0,0"]);
    assert_eq!(unsafe_sum.status.code(), Some(3));
}

#[test]
fn fourier_cutoff_env_is_honored() {
    let out = mzv_env(
        &["fourier", "partial", "-m", "2", "--alpha", "0.0", "--json"],
        "MZV_DEFAULT_CUTOFF",
        "500",
    );
    assert!(stdout(&out).contains("\"cutoff\":500"));

    let bad = mzv_env(
        &["fourier", "partial", "-m", "2", "--alpha", "0.0"],
        "MZV_DEFAULT_CUTOFF",
        "zero",
    );
    assert_eq!(bad.status.code(), Some(2));

    // explicit flag wins over the environment
    let flagged = mzv_env(
        &["fourier", "partial", "-m", "2", "--alpha", "0.0", "-N", "64", "--json"],
        "MZV_DEFAULT_CUTOFF",
        "500",
    );
    assert!(stdout(&flagged).contains("\"cutoff\":64"));
}

#[test]
fn sweep_emits_csv() {
    let out = mzv(&[
        "prop2", "rhs", "-m", "1,1", "--sweep", "500,1000", "--json",
    ]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "cutoff,approximation,reference,abs_error"
    );
    assert_eq!(lines.count(), 2);
}

#[test]
fn parseval_exact_pair_output() {
    let out = mzv(&["parseval", "--exact", "-a", "1", "-b", "1"]);
    assert_eq!(stdout(&out), "lhs = 1/720\nrhs = 1/720\n");
    let json = mzv(&["parseval", "--exact", "-a", "0", "-b", "1", "--json"]);
    assert_eq!(stdout(&json), "{\"lhs\":\"0\",\"rhs\":\"0\"}\n");
}
