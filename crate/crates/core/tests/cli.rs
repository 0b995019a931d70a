use std::path::PathBuf;
use std::process::Command;

use su2cert::cli::{run_with, EXIT_ABSTAIN, EXIT_INCONSISTENT, EXIT_OK, EXIT_PARSE, EXIT_USAGE};

fn sample(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/samples").join(name).display().to_string()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_with(std::iter::once("su2cert").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn output_is_byte_identical_across_runs() {
    let queries = sample("queries.toml");
    for args in [
        vec!["--json", "certify", queries.as_str()],
        vec!["--trace", "certify", queries.as_str()],
        vec!["seifert", "M(-2; 1/2, 2/3, 9/11)"],
        vec!["casson", "--link", "Y-mn"],
    ] {
        let first = run(&args);
        for _ in 0..3 {
            assert_eq!(run(&args), first, "{args:?}");
        }
    }
}

#[test]
fn batch_preserves_input_order() {
    let queries = sample("queries.toml");
    let (c1, sequential, _) = run(&["--json", "certify", &queries]);
    let (c2, batch, _) = run(&["--json", "certify", "--batch", &queries]);
    assert_eq!(c1, c2);
    assert_eq!(sequential, batch);
    let records: Vec<serde_json::Value> = serde_json::from_str(&batch).unwrap();
    assert!(records.len() >= 5);
    for r in &records {
        for field in ["conclusion", "chain", "inputs", "version"] {
            assert!(r.get(field).is_some(), "{field} missing");
        }
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["certify", "--knot", "5_2m", "--slope", "7/3"]).0, EXIT_OK);
    assert_eq!(run(&["certify", "--knot", "P(-2,3,7)m", "--slope", "-37/2"]).0, EXIT_ABSTAIN);
    assert_eq!(run(&["certify", "--seifert", "M(-2; 1/2, 2/3, 4/5)"]).0, EXIT_ABSTAIN);
    assert_eq!(run(&["lspace", &sample("genus2.toml")]).0, EXIT_INCONSISTENT);
    assert_eq!(run(&["certify", "--knot", "5_2m", "--slope", "x/3"]).0, EXIT_PARSE);
    assert_eq!(run(&["certify", "--knot", "no-such-knot", "--slope", "1"]).0, EXIT_PARSE);
    assert_eq!(run(&["no-such-command"]).0, EXIT_USAGE);
    assert_eq!(run(&["donaldson-check", &sample("models.toml")]).0, EXIT_OK);
    assert_eq!(run(&["knot-table", "list"]).0, EXIT_OK);
}

#[test]
fn abstention_is_reported_honestly() {
    let (_, out, _) = run(&["certify", "--knot", "3_1m", "--slope", "12"]);
    assert!(out.contains("no_certificate"), "{out}");
    assert!(out.contains("Boyer-Nicas"), "{out}");
    assert!(out.contains("does not exist"), "{out}");
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_su2cert");
    let ok = Command::new(bin).args(["certify", "--knot", "5_2m", "--slope", "7/3"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("irreducible_rep"));
    let bad = Command::new(bin).args(["certify", "--slope", "1"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
}
