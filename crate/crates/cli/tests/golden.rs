//! Golden-output tests: every bundled worked example has a recorded stdout
//! that must reproduce byte-identically in offline mode, across repeated
//! runs. This is the offline-determinism acceptance criterion for the
//! command surface.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_basechange"))
        .args(args)
        .env_remove("BASECHANGE_OFFLINE")
        .env_remove("BASECHANGE_CACHE_DIR")
        .env_remove("BASECHANGE_LMFDB_URL")
        .output()
        .expect("spawn basechange")
}

/// Run twice; stdout must match the golden bytes both times.
fn assert_golden(args: &[&str], golden: &str) {
    let first = run(args);
    assert!(
        first.status.success(),
        "args {args:?} failed: {}",
        String::from_utf8_lossy(&first.stderr)
    );
    let second = run(args);
    assert_eq!(
        first.stdout, second.stdout,
        "non-deterministic output for {args:?}"
    );
    assert_eq!(
        String::from_utf8_lossy(&first.stdout),
        golden,
        "golden mismatch for {args:?}"
    );
}

#[test]
fn lift_to_quadratic_field() {
    assert_golden(
        &[
            "--offline",
            "lift",
            "--newform",
            "11.2.a.a",
            "--field",
            "Qsqrt2",
            "--norm-bound",
            "25",
            "--inert-only",
        ],
        include_str!("golden/lift_qsqrt2.txt"),
    );
}

#[test]
fn lift_to_cubic_field() {
    assert_golden(
        &[
            "--offline",
            "lift",
            "--newform",
            "147.2.a.c",
            "--field",
            "Qzeta7plus",
            "--norm-bound",
            "50",
        ],
        include_str!("golden/lift_qzeta7.txt"),
    );
}

#[test]
fn lift_to_quintic_field() {
    assert_golden(
        &[
            "--offline",
            "lift",
            "--newform",
            "11.2.a.a",
            "--field",
            "Qzeta11plus",
            "--norm-bound",
            "32",
        ],
        include_str!("golden/lift_qzeta11.txt"),
    );
}

#[test]
fn decompose_tables() {
    assert_golden(
        &[
            "--offline",
            "decompose",
            "--field",
            "Qsqrt2",
            "--primes",
            "3,5,7",
        ],
        include_str!("golden/decompose_qsqrt2.txt"),
    );
    assert_golden(
        &[
            "--offline",
            "decompose",
            "--field",
            "Qzeta11plus",
            "--primes",
            "2",
        ],
        include_str!("golden/decompose_qzeta11.txt"),
    );
}

#[test]
fn search_unique_matches() {
    assert_golden(
        &[
            "--offline",
            "lift-search",
            "--newform",
            "147.2.a.c",
            "--field",
            "Qzeta7plus",
            "--norm-bound",
            "50",
        ],
        include_str!("golden/search_qzeta7.txt"),
    );
    assert_golden(
        &[
            "--offline",
            "lift-search",
            "--newform",
            "11.2.a.a",
            "--field",
            "Qsqrt2",
            "--norm-bound",
            "100",
        ],
        include_str!("golden/search_qsqrt2.txt"),
    );
}

#[test]
fn search_reports_multiplicity_at_small_bound() {
    assert_golden(
        &[
            "--offline",
            "lift-search",
            "--newform",
            "147.2.a.c",
            "--field",
            "Qzeta7plus",
            "--norm-bound",
            "8",
        ],
        include_str!("golden/search_multiplicity.txt"),
    );
}

#[test]
fn euler_check_sweep() {
    assert_golden(
        &[
            "--offline",
            "euler-check",
            "--newform",
            "11.2.a.a",
            "--field",
            "Qsqrt2",
            "--primes-up-to",
            "100",
        ],
        include_str!("golden/euler_qsqrt2.txt"),
    );
}

#[test]
fn hida_commands() {
    assert_golden(
        &[
            "--offline",
            "hida",
            "ordinary-check",
            "--newform",
            "11.2.a.a",
            "--p",
            "3",
        ],
        include_str!("golden/ordinary_3.txt"),
    );
    assert_golden(
        &[
            "--offline",
            "hida",
            "ordinary-check",
            "--newform",
            "11.2.a.a",
            "--p",
            "2",
        ],
        include_str!("golden/ordinary_2.txt"),
    );
    assert_golden(
        &[
            "--offline",
            "hida",
            "family-lift",
            "--family",
            "fixture:fam11",
            "--field",
            "Qsqrt2",
            "--ell",
            "3",
            "--weight",
            "2",
        ],
        include_str!("golden/family_lift.txt"),
    );
    assert_golden(
        &[
            "--offline",
            "hida",
            "stabilize",
            "--newform",
            "11.2.a.a",
            "--p",
            "3",
        ],
        include_str!("golden/stabilize_3.txt"),
    );
}

#[test]
fn json_output_round_trips() {
    assert_golden(
        &[
            "--offline",
            "lift",
            "--newform",
            "11.2.a.a",
            "--field",
            "Qsqrt2",
            "--norm-bound",
            "25",
            "--inert-only",
            "--output",
            "json",
        ],
        include_str!("golden/lift_qsqrt2_json.txt"),
    );
    // machine-readable outputs parse as JSON
    for args in [
        vec![
            "--offline",
            "euler-check",
            "--newform",
            "147.2.a.c",
            "--field",
            "Qzeta7plus",
            "--primes-up-to",
            "50",
            "--output",
            "json",
        ],
        vec![
            "--offline",
            "lift-search",
            "--newform",
            "11.2.a.a",
            "--field",
            "Qzeta11plus",
            "--norm-bound",
            "32",
            "--output",
            "json",
        ],
    ] {
        let out = run(&args);
        assert!(out.status.success());
        let value: serde_json::Value =
            serde_json::from_slice(&out.stdout).expect("valid JSON output");
        assert!(value.is_object());
    }
}

#[test]
fn exit_codes() {
    // validation error: 2
    let out = run(&[
        "--offline",
        "decompose",
        "--field",
        "Qsqrt2",
        "--primes",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(2));
    // mathematical contract violation: 3 (level prime in the trace formula)
    let out = run(&[
        "--offline",
        "hida",
        "ordinary-check",
        "--newform",
        "11.2.a.a",
        "--p",
        "11",
    ]);
    assert_eq!(out.status.code(), Some(3));
    // data-source failure: 4 (unknown label, offline)
    let out = run(&[
        "--offline",
        "lift",
        "--newform",
        "999.2.a.a",
        "--field",
        "Qsqrt2",
    ]);
    assert_eq!(out.status.code(), Some(4));
    // clap usage error: 2
    let out = run(&["lift", "--field", "Qsqrt2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn acceptance_criterion_9_offline_determinism() {
    // the three worked examples, twice each, byte-identical, offline
    let cases: Vec<Vec<&str>> = vec![
        vec![
            "--offline",
            "lift",
            "--newform",
            "11.2.a.a",
            "--field",
            "Qsqrt2",
            "--norm-bound",
            "25",
            "--inert-only",
        ],
        vec![
            "--offline",
            "lift",
            "--newform",
            "147.2.a.c",
            "--field",
            "Qzeta7plus",
            "--norm-bound",
            "50",
        ],
        vec![
            "--offline",
            "lift",
            "--newform",
            "11.2.a.a",
            "--field",
            "Qzeta11plus",
            "--norm-bound",
            "32",
        ],
    ];
    for args in &cases {
        let a = run(args);
        let b = run(args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
    println!("ACCEPTANCE 9 (offline determinism, byte-identical outputs): PASS");
}
