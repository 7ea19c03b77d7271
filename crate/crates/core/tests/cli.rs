use std::process::{Command, Output};

use serde_json::Value;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gamma-periods"))
        .args(args)
        .env_remove("GAMMA_PERIODS_DIGITS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn chain_and_exit_codes() {
    let o = bin(&["chain", "1/7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("Γ(1/7) → Γ(2/7) → Γ(4/7) → Γ(8/7) → Γ(1/7)"));
    assert_eq!(bin(&["chain", "seven"]).status.code(), Some(2));
    assert_eq!(bin(&["verify", "--qmax", "1"]).status.code(), Some(2));
    assert_eq!(bin(&["branch-symmetry", "1"]).status.code(), Some(2));
}

#[test]
fn verify_report_is_json() {
    let o = bin(&["verify", "--qmax", "8", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["digits"], 50);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    assert_eq!(v["rows"].as_array().unwrap().len(), 21);
}

#[test]
fn digits_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_gamma-periods"))
        .args(["period", "I", "2"])
        .env("GAMMA_PERIODS_DIGITS", "16")
        .output()
        .unwrap();
    assert_eq!(
        stdout(&o).lines().next().unwrap(),
        "I_2 = 3.141592653589793"
    );
}

#[test]
fn table_json_columns() {
    let o = bin(&["--digits", "20", "table", "--qmax", "8", "--format", "json"]);
    let rows: Vec<Value> = serde_json::from_str(&stdout(&o)).unwrap();
    let mero: Vec<bool> = rows
        .iter()
        .map(|r| r["uses_meromorphic"].as_bool().unwrap())
        .collect();
    assert_eq!(mero, [false, false, false, false, false, true, false]);
    let ell: Vec<&str> = rows
        .iter()
        .map(|r| r["elliptic_k"].as_str().unwrap())
        .collect();
    assert_eq!(ell, ["Yes", "Yes", "Yes", "???", "Yes", "???", "Yes"]);
}

#[test]
fn closed_form_latex_q5() {
    let o = bin(&["closed-form", "1/5", "--format", "latex"]);
    assert_eq!(
        stdout(&o).trim(),
        "\\Gamma(1/5)^5 = \\frac{5^3 I_2 I_{5/2} I_5^2}{2^{13/5} \\sin(\\pi/5)}"
    );
}
