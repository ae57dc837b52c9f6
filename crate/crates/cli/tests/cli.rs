use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn stacktop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stacktop")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn write_dw(dir: &Path, group: &str) -> String {
    let out = dir.join(group);
    assert_eq!(code(&stacktop(&["dw", "--group", group, "--out", out.to_str().unwrap()])), 0);
    out.join("algebra.json").to_str().unwrap().to_string()
}

/// Change one coefficient of `left ⋆ left`, breaking associativity.
fn corrupt(path: &str, left: &str) -> String {
    let mut doc: Value = serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap();
    let entry = doc["product"]
        .as_array_mut()
        .unwrap()
        .iter_mut()
        .find(|e| e[0] == left && e[1] == left)
        .unwrap();
    entry[2][0][1] = Value::from("5");
    let bad = format!("{path}.bad.json");
    fs::write(&bad, serde_json::to_string_pretty(&doc).unwrap()).unwrap();
    bad
}

#[test]
fn passing_fixture_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_dw(dir.path(), "S3");
    let o = stacktop(&["check", "--algebra", &path]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let stdout = String::from_utf8(o.stdout).unwrap();
    assert_eq!(stdout.lines().filter(|l| l.starts_with("PASS")).count(), 6);
}

#[test]
fn failing_fixture_exits_one_with_witness_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let bad = corrupt(&write_dw(dir.path(), "S3"), "[(1 2)]");
    let out = dir.path().join("report");
    let o = stacktop(&["check", "--algebra", &bad, "--check", "associativity", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    let stdout = String::from_utf8(o.stdout).unwrap();
    assert!(stdout.starts_with("FAIL associativity"), "{stdout}");
    assert!(stdout.contains("[(1 2)]"));
    let report: Value = serde_json::from_str(&fs::read_to_string(out.join("report.json")).unwrap()).unwrap();
    assert_eq!(report["passed"], false);
    assert!(!report["reports"][0]["violations"].as_array().unwrap().is_empty());
}

#[test]
fn garbage_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let junk = dir.path().join("junk.json");
    fs::write(&junk, "{ not json").unwrap();
    let cases: Vec<Vec<&str>> = vec![
        vec!["check", "--algebra", junk.to_str().unwrap()],
        vec!["dw", "--table", junk.to_str().unwrap()],
        vec!["dw", "--group", "S9"],
        vec!["dw", "--perms", "(1 2"],
        vec!["dw", "--group", "S3", "--check", "bogus"],
        vec!["grading", "--exponents", "1/0"],
        vec!["lie", "--lie-name", "E9"],
        vec!["tqft", "--group", "Z2", "--inputs", "[5]"],
        vec!["frobnicate"],
    ];
    for args in cases {
        let o = stacktop(&args);
        assert_eq!(code(&o), 2, "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn non_group_table_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("t.json");
    fs::write(&table, r#"{"elements": ["e", "a"], "rows": [["e", "a"], ["a", "a"]]}"#).unwrap();
    let o = stacktop(&["dw", "--table", table.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("inverse"));
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let runs: Vec<Vec<&str>> = vec![
        vec!["dw", "--group", "S4", "--check", "all"],
        vec!["sphere", "--n", "3", "--check", "all"],
        vec!["lie", "--lie-name", "SU(3)", "--truncate", "6", "--check", "all"],
        vec!["grading", "--exponents", "1/5,2/5,3/5", "--check", "all"],
        vec!["phi", "--n", "2"],
    ];
    for args in runs {
        let dirs = [tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap()];
        let mut seen = Vec::new();
        for d in &dirs {
            let mut full = args.clone();
            full.extend(["--out", d.path().to_str().unwrap()]);
            let o = stacktop(&full);
            assert_eq!(code(&o), 0, "{args:?}: {}", String::from_utf8_lossy(&o.stdout));
            let mut files: Vec<(String, Vec<u8>)> = fs::read_dir(d.path())
                .unwrap()
                .map(|e| {
                    let e = e.unwrap();
                    (e.file_name().into_string().unwrap(), fs::read(e.path()).unwrap())
                })
                .collect();
            files.sort();
            seen.push((o.stdout, files));
        }
        assert_eq!(seen[0], seen[1], "{args:?}");
    }
}

#[test]
fn closed_genus_one_counts_classes() {
    let o = stacktop(&["tqft", "--group", "S3", "--genus", "1", "--outputs", "0"]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8(o.stdout).unwrap().contains("\"3\""));
}
