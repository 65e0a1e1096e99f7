//! End-to-end tests of the `lee` binary.

use std::io::Write;
use std::process::{Command, Output};

fn lee(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lee"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn ball_size_prints_the_value() {
    let out = lee(&["ball-size", "-n", "3", "-e", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "129");
}

#[test]
fn ball_poly_prints_the_scaled_polynomial() {
    let out = lee(&["ball-poly-e", "-n", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "6*k(3,e) = 8e^3 + 12e^2 + 16e + 6");
}

#[test]
fn certificate_verdicts_drive_the_exit_code() {
    let out = lee(&["zg-check", "-n", "12", "-e", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("k(12,3) = 2625 \u{2261} 6 (mod 9)"));
    assert!(text.contains("verdict: non-existence"));

    let out = lee(&["zg-check", "-n", "1", "-e", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("verdict: inconclusive"));
}

#[test]
fn p_condition_matches_the_published_class() {
    let out = lee(&["p-condition", "-n", "22", "-e", "6", "-p", "5"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("verdict: non-existence"));

    // composite modulus is a usage error
    let out = lee(&["p-condition", "-n", "22", "-e", "6", "-p", "9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_reports_round_trip_byte_identically() {
    for args in [
        vec!["ball-size", "-n", "3", "-e", "4"],
        vec!["zg-check", "-n", "12", "-e", "3"],
        vec!["classify", "-e", "31"],
        vec!["qpoly", "-k", "2", "--lee", "2", "2"],
        vec!["reproduce", "prop6"],
    ] {
        let mut full = args.clone();
        full.extend(["--format", "json"]);
        let out = lee(&full);
        let text = stdout(&out);
        let parsed: serde_json::Value = serde_json::from_str(text.trim()).expect("valid JSON");
        assert_eq!(serde_json::to_string(&parsed).unwrap(), text.trim(), "args={args:?}");
        // determinism: a second run emits the same bytes
        let again = lee(&full);
        assert_eq!(stdout(&again), text, "args={args:?}");
    }
}

#[test]
fn enumerate_emits_sorted_lines() {
    let out = lee(&["enumerate", "-n", "1", "-e", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "-1\n0\n1\n");

    let out = lee(&["enumerate", "-n", "2", "-e", "2", "--norm", "inf"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 25);
}

#[test]
fn enumeration_cap_is_a_diagnosed_error() {
    let out = lee(&["enumerate", "-n", "4", "-e", "20", "--max-points", "100"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("cap of 100"), "stderr: {err}");
}

#[test]
fn tiling_check_consumes_enumerated_points() {
    let ball = lee(&["enumerate", "-n", "3", "-e", "8", "--norm", "2"]);
    assert!(ball.status.success());
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(&ball.stdout).unwrap();

    let path = file.path().to_str().unwrap();
    let out = lee(&["tiling-check", "--points", path, "-p", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("|B| = 2109"));
    assert!(text.contains("verdict: non-existence"));
}

#[test]
fn qpoly_text_form() {
    let out = lee(&["qpoly", "-k", "2", "--lee", "2", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "p_2 = 26; Q = 26*S[4] + 12*S[2,2]");
}

#[test]
fn scan_lists_the_residues() {
    let out = lee(&["scan", "-e", "6", "-p", "5", "--modulus", "125"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "residues mod 125: {22, 47, 72, 97, 122}");
}

#[test]
fn classify_and_delta3() {
    let out = lee(&["classify", "-e", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("empty"));

    let out = lee(&["delta3", "-e", "6"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "delta3(6) = infinity");
}

#[test]
fn zg_scan_lists_members() {
    let out = lee(&["zg-scan", "-e", "4", "--max", "27"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "ZG(4) up to 27: {3, 5, 21, 23}");
}

#[test]
fn reproduce_all_passes() {
    let out = lee(&["reproduce", "all"]);
    assert!(out.status.success(), "stdout: {}", stdout(&out));
    let text = stdout(&out);
    for case in ["prop5", "prop6", "prop7", "prop8", "lemma7", "example5", "prop16", "prop17"] {
        assert!(text.contains(&format!("case {case}: pass")), "missing {case}");
    }

    let out = lee(&["reproduce", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    let out = lee(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));

    let out = lee(&["moment", "-n", "2", "-e", "2", "-j", "1,2"]);
    assert_eq!(out.status.code(), Some(2));

    let out = lee(&["ball-size", "-n", "three", "-e", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn moment_value() {
    let out = lee(&["moment", "-n", "2", "-e", "2", "-j", "1,1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "4");
}
