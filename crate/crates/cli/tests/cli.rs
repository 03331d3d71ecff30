use std::process::{Command, Output};

use klschubert::field::FieldElement;
use klschubert::hecke::a_w0_exact;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_klschubert")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn passing_check_exits_zero() {
    let out = run(&["check", "--lemma", "klcom", "--rank", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("klcom"));
}

#[test]
fn bad_arguments_exit_two() {
    assert_eq!(run(&["check", "--all", "--rank", "0"]).status.code(), Some(2));
    assert_eq!(run(&["check", "--lemma", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["restrict", "--rank", "2", "--u", "2,3,1", "--w", "2,3,1"]).status.code(), Some(2));
    assert_eq!(run(&["klpoly", "--rank", "2", "--u", "9,9,9", "--v", "e"]).status.code(), Some(2));
}

#[test]
fn full_check_run_reports_the_known_failure() {
    let out = run(&["check", "--all", "--rank", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("billey-oracle"));
    assert!(text.contains("28 of 29 checks passed"));
}

#[test]
fn list_names_every_check() {
    let out = run(&["check", "--list"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).lines().filter(|l| !l.trim().is_empty()).count() >= 29);
}

#[test]
fn reproduce_paper_matches_golden_data() {
    let out = run(&["reproduce-paper"]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["--format", "json", "reproduce-paper"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 8);
    assert!(rows.iter().all(|r| r["matches"] == serde_json::Value::Bool(true)));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["--format", "json", "check", "--all", "--rank", "2", "--fast", "--seed", "3"],
        vec!["--format", "json", "kdual", "--rank", "2"],
    ] {
        assert_eq!(run(&args).stdout, run(&args).stdout);
    }
}

#[test]
fn csv_pairing_matrix_is_well_formed() {
    let out = run(&["--format", "csv", "kdual", "--rank", "2", "--J", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    assert_eq!(reader.headers().unwrap().iter().collect::<Vec<_>>(), ["w", "u", "ok", "value"]);
    let rows: Vec<csv::StringRecord> = reader.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 9);
    assert!(rows.iter().all(|r| &r[2] == "true"));
    assert!(rows.iter().filter(|r| r[0] != r[1]).all(|r| &r[3] == "0"));
}

#[test]
fn json_output_parses() {
    let out = run(&["--format", "json", "klpoly", "--rank", "3", "--u", "e", "--v", "3,4,1,2"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["polynomials"][0]["coeffs"], serde_json::json!([1, 1]));
    let out = run(&["--format", "json", "check", "--lemma", "klcom", "--rank", "2"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(FieldElement::from_json(&v["a_w0"]).unwrap(), a_w0_exact(2));
}

#[test]
fn words_and_one_line_notation_agree() {
    let a = run(&["gamma", "--rank", "2", "--w", "s1s2", "--sign", "minus"]);
    let b = run(&["gamma", "--rank", "2", "--w", "2,3,1", "--sign", "minus"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn billey_without_w_emits_the_full_matrix() {
    let out = run(&["--format", "csv", "billey", "--rank", "3", "--J", "1,2"]);
    assert_eq!(out.status.code(), Some(0));
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    let rows: Vec<csv::StringRecord> = reader.records().map(|r| r.unwrap()).collect();
    // 24 elements times 4 minimal coset representatives
    assert_eq!(rows.len(), 96);
    assert!(rows.iter().filter(|r| &r[1] == "1,2,3,4").all(|r| &r[2] == "1" && &r[3] == "1"));
}

#[test]
fn comma_separated_words_are_accepted() {
    let a = run(&["billey", "--rank", "4", "--J", "1,2,4", "--w", "2,1,3,2,4,3", "--u", "2,3"]);
    let b = run(&["billey", "--rank", "4", "--J", "1,2,4", "--w", "s2s1s3s2s4s3", "--u", "s2s3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["class", "--rank", "3", "--J", "1,2", "--u", "2,3", "--variant", "ctildej"]);
    assert_eq!(c.status.code(), Some(0));
}
