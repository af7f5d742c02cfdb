//! One test per acceptance criterion. Each prints a `PASS`/`FAIL` line to
//! the real stdout (bypassing the harness capture) and fails on `FAIL`.

use std::io::Write;
use std::process::Command;

use alphanorm::verify::{format_report, run_criterion, VerifyConfig};

fn announce(line: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{line}");
    let _ = out.flush();
}

fn criterion(id: usize) {
    let r = run_criterion(id, &VerifyConfig::default());
    let status = if r.pass() { "PASS" } else { "FAIL" };
    let worst = r
        .worst()
        .map(|c| format!("{}: measured {:e}, tolerance {:e}", c.label, c.measured, c.tolerance))
        .unwrap_or_default();
    announce(&format!("criterion {id:>2} {:<26} {status}  worst [{worst}]", r.name));
    assert!(r.pass(), "criterion {id} failed:\n{}", format_report(&[r]));
}

#[test]
fn criterion_01_normalization() {
    criterion(1);
}

#[test]
fn criterion_02_gaussian_reduction() {
    criterion(2);
}

#[test]
fn criterion_03_moments() {
    criterion(3);
}

#[test]
fn criterion_04_entropy() {
    criterion(4);
}

#[test]
fn criterion_05_weibull_entropy() {
    criterion(5);
}

#[test]
fn criterion_06_psi_norms() {
    criterion(6);
}

#[test]
fn criterion_07_majorization() {
    criterion(7);
}

#[test]
fn criterion_08_shape_analysis() {
    criterion(8);
}

#[test]
fn criterion_09_bivariate_normal_cdf() {
    criterion(9);
}

#[test]
fn criterion_10_multivariate() {
    criterion(10);
}

#[test]
fn criterion_11_sampling() {
    criterion(11);
}

#[test]
fn criterion_12_limiting_law() {
    criterion(12);
}

/// The in-process determinism checks plus two runs of the binary.
#[test]
fn criterion_13_determinism() {
    let inner = run_criterion(13, &VerifyConfig::default());
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_alphanorm"))
            .args(["verify", "--suite", "all", "--seed", "42"])
            .output()
            .expect("binary runs")
    };
    let (a, b) = (run(), run());
    let codes_ok = matches!(a.status.code(), Some(0 | 3)) && a.status.code() == b.status.code();
    let same = a.stdout == b.stdout && !a.stdout.is_empty();
    let pass = inner.pass() && codes_ok && same;
    announce(&format!(
        "criterion 13 {:<26} {}  worst [verify --seed 42 twice: {} bytes, identical = {same}]",
        inner.name,
        if pass { "PASS" } else { "FAIL" },
        a.stdout.len()
    ));
    assert!(inner.pass(), "{}", format_report(&[inner]));
    assert!(codes_ok, "exit codes {:?} and {:?}", a.status.code(), b.status.code());
    assert!(same, "verify output differs between runs");
}
