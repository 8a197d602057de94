//! End-to-end tests driving the compiled binary.

use std::process::{Command, Output};

use catalan_lu::json::matrix_from_json;
use catalan_lu::{catalan_sum_matrix, catalan_sum_matrix_at, parse_rat, Poly, Rat};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_catalan-lu"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn det_value_at_one() {
    let out = run(&["det", "-n", "2", "--x", "1/1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "5");
}

#[test]
fn det_symbolic_polynomial() {
    let out = run(&["det", "-n", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1 + 5*x + 6*x^2 + 1*x^3");
}

#[test]
fn det_json_carries_polynomial_and_value() {
    let out = run(&["det", "-n", "2", "--x", "3/2", "--output", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["det"], serde_json::json!(["1", "3", "1"]));
    // 1 + 3(3/2) + (3/2)^2 = 31/4
    assert_eq!(v["value"], "31/4");
    assert_eq!(v["x"], "3/2");
}

#[test]
fn matrix_json_round_trips() {
    for n in [1usize, 4, 10] {
        let out = run(&["matrix", "-n", &n.to_string(), "--output", "json"]);
        assert!(out.status.success());
        let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        let parsed = matrix_from_json::<Poly>(&v).unwrap();
        assert_eq!(parsed, catalan_sum_matrix(n, 0), "n = {n}");
    }
}

#[test]
fn numeric_matrix_json_round_trips() {
    let out = run(&["matrix", "-n", "3", "--x", "-7/3", "--output", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let parsed = matrix_from_json::<Rat>(&v).unwrap();
    let x = parse_rat("-7/3").unwrap();
    assert_eq!(parsed, catalan_sum_matrix_at(3, 0, &x));
}

#[test]
fn matrix_with_shift_uses_shifted_catalan_numbers() {
    let out = run(&["matrix", "-n", "2", "-t", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "[1 + 2*x, 2 + 5*x]\n[2 + 5*x, 5 + 14*x]\n");
}

#[test]
fn lu_prints_closed_form_factors() {
    let out = run(&["lu", "-n", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(
        text.contains("L =\n[1, 0]\n[(1 + 2*x) / (1 + 1*x), 1]"),
        "{text}"
    );
    assert!(text.contains("U =\n[1 + 1*x, 1 + 2*x]"), "{text}");
    assert!(!text.contains("elimination"));
}

#[test]
fn lu_oracle_flag_prints_matching_elimination_factors() {
    let out = run(&["lu", "-n", "3", "--oracle", "--output", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["closed_form"]["lower"], v["elimination"]["lower"]);
    assert_eq!(v["closed_form"]["upper"], v["elimination"]["upper"]);
}

#[test]
fn lu_with_shift_warns_and_uses_elimination() {
    let out = run(&["lu", "-n", "2", "-t", "1"]);
    assert!(out.status.success());
    assert!(stderr(&out).contains("no closed form"), "{}", stderr(&out));
    assert!(stdout(&out).contains("L ="));
}

#[test]
fn lu_zero_pivot_is_a_domain_error() {
    // x = -1 kills the first leading minor 1 + x
    let out = run(&["lu", "-n", "2", "--x", "-1/1"]);
    assert_eq!(out.status.code(), Some(1));
    let err = stderr(&out);
    assert!(err.contains("zero pivot"), "{err}");
    assert!(err.contains("order 1"), "{err}");
}

#[test]
fn verify_all_checks_pass() {
    let out = run(&["verify", "--checks", "all", "-n", "8"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    for check in ["factorization", "entry-sum", "determinant", "u-world"] {
        assert!(text.contains(&format!("{check}: PASS")), "{text}");
    }
    assert!(text.contains("all checks passed"));
}

#[test]
fn verify_check_selection_is_honored() {
    let out = run(&["verify", "--checks", "entry", "-n", "3", "--output", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0]["check"], "entry-sum");
    assert_eq!(reports[0]["instances"].as_array().unwrap().len(), 9);
}

#[test]
fn verify_ranges_can_be_overridden() {
    let out = run(&[
        "verify", "--checks", "uworld", "-n", "2", "--k-max", "4", "--j-max", "3", "--output",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    // minor-subst k = 0..=4, kernel-subst 4 x 3, pf-split k = 1..=4
    assert_eq!(v[0]["instances"].as_array().unwrap().len(), 5 + 12 + 4);
}

#[test]
fn malformed_flags_exit_two() {
    assert_eq!(run(&["det", "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["det"]).status.code(), Some(2)); // -n is required
    assert_eq!(run(&["det", "-n", "0"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn bad_rational_is_a_domain_error() {
    let out = run(&["det", "-n", "2", "--x", "1/0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("parse error"), "{}", stderr(&out));
}

#[test]
fn excessive_indices_are_a_domain_error() {
    let out = run(&["matrix", "-n", "6000"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("cap"), "{}", stderr(&out));
}
