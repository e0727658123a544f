use std::process::Command;

use harmonic_lerch::cli::{self, read_csv, Method, EXIT_FAILURE, EXIT_OK, EXIT_USAGE};
use harmonic_lerch::verify::LEMMA_PROOF_IDENTITIES;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["harmonic-lerch"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, EXIT_OK, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn eval_fields_and_values() {
    let v = json(&["eval", "--s", "2", "--w", "-1"]);
    for key in ["value_re", "value_im", "terms_used", "error_bound", "converged", "method"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["method"], "accelerated");
    let value = v["value_re"].as_f64().unwrap();
    assert!((value + std::f64::consts::PI.powi(2) / 12.0).abs() <= 1e-12);

    let z = json(&["eval", "--s", "2", "--z", "0.5"]);
    assert_eq!(z["value_re"], v["value_re"]);
}

#[test]
fn eval_methods_agree() {
    let accelerated = json(&["eval", "--s", "3", "--w", "-0.3,0.2", "--alpha", "0.5"]);
    for method in ["direct", "euler"] {
        let other = json(&["eval", "--s", "3", "--w", "-0.3,0.2", "--alpha", "0.5", "--method", method]);
        assert_eq!(other["method"], method);
        for key in ["value_re", "value_im"] {
            let a = accelerated[key].as_f64().unwrap();
            let b = other[key].as_f64().unwrap();
            assert!((a - b).abs() <= 1e-11, "{method} {key}: {a} vs {b}");
        }
    }
}

#[test]
fn eval_rational_shift_reports_exact_check() {
    let v = json(&["eval", "--s", "2", "--w", "-1", "--alpha-rat", "1/2"]);
    let check = &v["exact_check"];
    assert_eq!(check["alpha"], "1/2");
    assert!(check["max_relative_error"].as_f64().unwrap() <= 1e-12);
}

#[test]
fn eval_errors() {
    assert_eq!(run(&["eval", "--s", "2", "--w", "0.7"]).0, EXIT_USAGE);
    assert_eq!(run(&["eval", "--s", "2", "--w", "-1", "--alpha", "-2"]).0, EXIT_USAGE);
    assert_eq!(run(&["eval", "--s", "2", "--w", "-1", "--tol", "1e-15"]).0, EXIT_USAGE);
    assert_eq!(run(&["eval", "--s", "2"]).0, EXIT_USAGE);
    assert_eq!(run(&["eval", "--s", "2", "--w", "-1", "--z", "0.5"]).0, EXIT_USAGE);
    let (code, out, _) = run(&["eval", "--s", "2", "--z", "0.99", "--max-terms", "20"]);
    assert_eq!(code, EXIT_FAILURE);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["converged"], false);
}

#[test]
fn zeta_subcommand() {
    let v = json(&["zeta", "--s", "2"]);
    assert!(v["terms_used"].as_u64().unwrap() <= 64);
    assert!((v["value"].as_f64().unwrap() - 1.6449340668482264).abs() <= 1e-12);
    assert_eq!(run(&["zeta", "--s", "1"]).0, EXIT_USAGE);
    assert_eq!(run(&["zeta", "--s", "-3"]).0, EXIT_USAGE);
}

#[test]
fn verify_lemma_suite() {
    let (code, out, _) = run(&["verify", "--suite", "lemma"]);
    assert_eq!(code, EXIT_OK);
    let reports: Vec<Value> = serde_json::from_str(&out).unwrap();
    let lemma = reports.iter().find(|r| r["identity_name"] == "lemma").unwrap();
    assert_eq!(lemma["cases_run"], 390);
    assert_eq!(lemma["cases_failed"], 0);
    assert_eq!(lemma["worst_residual"], 0.0);
}

#[test]
fn verify_rejects_forbidden_beta() {
    assert_eq!(run(&["verify", "--suite", "lemma", "--beta", "0"]).0, EXIT_USAGE);
    assert_eq!(run(&["verify", "--suite", "nonsense"]).0, EXIT_USAGE);
    let (code, out, _) = run(&["verify", "--suite", "splitting", "--beta", "1/3,-5/2"]);
    assert_eq!(code, EXIT_OK, "{out}");
}

#[test]
fn every_proof_identity_has_a_report() {
    let (code, out, _) = run(&["verify", "--suite", "all", "--s-max", "3", "--p-max", "20", "--q-max", "6"]);
    assert_eq!(code, EXIT_OK);
    let reports: Vec<Value> = serde_json::from_str(&out).unwrap();
    for (identity, name) in LEMMA_PROOF_IDENTITIES {
        let report = reports
            .iter()
            .find(|r| r["identity_name"] == *name)
            .unwrap_or_else(|| panic!("no report {name} for {identity}"));
        assert!(report["cases_run"].as_u64().unwrap() > 0, "{name}");
        assert_eq!(report["cases_failed"], 0, "{name}");
    }
}

#[test]
fn json_and_csv_files() {
    let dir = tempfile::tempdir().unwrap();
    let json_path = dir.path().join("zeta.json");
    let (code, out, _) = run(&["zeta", "--s", "3", "--json", json_path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let written = std::fs::read_to_string(&json_path).unwrap();
    assert_eq!(written.trim(), out.trim());

    let csv_path = dir.path().join("bench.csv");
    let (code, _, err) = run(&[
        "bench",
        "--s-list",
        "1,2,3",
        "--tol-list",
        "1e-6,1e-8",
        "--csv",
        csv_path.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK, "{err}");
    let text = std::fs::read_to_string(&csv_path).unwrap();
    assert!(text.starts_with("# s=1"));
    assert!(text.contains("method,s,z_re,z_im,tol,terms,achieved_error"));
    let rows = read_csv(text.as_bytes()).unwrap();
    assert_eq!(rows.len(), 3 * 2 * 2);
    assert!(rows.iter().all(|r| r.s != 1 && r.converged()));

    let mut again = Vec::new();
    harmonic_lerch::cli::write_csv(
        &harmonic_lerch::cli::BenchOutput { rows: rows.clone(), notes: vec![] },
        &mut again,
    )
    .unwrap();
    assert_eq!(read_csv(again.as_slice()).unwrap(), rows);
}

#[test]
fn accelerated_beats_direct_where_the_baseline_is_slow() {
    // Holds for s = 2, 3; from s = 4 on the alternating series is already fast.
    let out = cli::run_bench(&[2, 3], &[1e-6, 1e-8, 1e-10, 1e-12], 1_000_000).unwrap();
    for s in [2, 3] {
        for tol in [1e-6, 1e-8, 1e-10, 1e-12] {
            let pick = |m: Method| {
                out.rows
                    .iter()
                    .find(|r| r.method == m && r.s == s && r.tolerance == tol)
                    .unwrap()
                    .terms_needed
            };
            assert!(
                pick(Method::Accelerated) < pick(Method::DirectAlternating),
                "s = {s}, tol = {tol}"
            );
        }
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_harmonic-lerch");
    let ok = Command::new(bin).args(["eval", "--s", "1", "--w", "-1"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert!((v["value_re"].as_f64().unwrap() + std::f64::consts::LN_2).abs() <= 1e-12);
    let bad = Command::new(bin).args(["zeta", "--s", "1"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
    let usage = Command::new(bin).arg("frobnicate").output().unwrap();
    assert_eq!(usage.status.code(), Some(1));
}
