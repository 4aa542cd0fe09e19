//! CLI output compared byte for byte against files in tests/golden.
//! Set UPDATE_GOLDEN=1 to rewrite them.

use std::path::PathBuf;

use selfdual_core::cli;

fn run(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(std::iter::once("selfdual").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

fn golden(name: &str, args: &[&str]) {
    let (code, out) = run(args);
    assert_eq!(code, cli::EXIT_OK, "{args:?}");
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &out).unwrap();
    }
    let want = std::fs::read_to_string(&path).unwrap();
    assert_eq!(out, want, "{name}");
}

#[test]
fn enumerate_outputs() {
    golden("enumerate_s3_m1.jsonl", &["enumerate", "--s", "3", "--m", "1"]);
    golden("enumerate_s2_m2.csv", &["enumerate", "--s", "2", "--m", "2", "--format", "csv"]);
    golden("enumerate_s4_m1_limit10.jsonl", &["enumerate", "--s", "4", "--m", "1", "--limit", "10"]);
}

#[test]
fn enumerate_s3_has_19_records() {
    let (_, out) = run(&["enumerate", "--s", "3", "--m", "1"]);
    let lines: Vec<serde_json::Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 20);
    assert_eq!(lines[19]["summary"]["total"], 19);
    assert!(lines[..19].iter().all(|r| r["s"] == 3 && r["modulus"] == "0x3"));
}

#[test]
fn count_output() {
    golden("count_s10_m4.txt", &["count", "--s", "10", "--m", "4"]);
}

#[test]
fn verify_output() {
    golden("verify_s3_m1_full.txt", &["verify", "--s", "3", "--m", "1", "--full"]);
}

#[test]
fn table_outputs() {
    golden("tables_m8.txt", &["tables", "--M", "8"]);
    golden("tables_g3.txt", &["tables", "--G", "3"]);
    golden("space_16.txt", &["space", "--l", "16"]);
}

#[test]
fn gray_outputs() {
    golden("gray_s3_m1_i5.csv", &["gray", "--s", "3", "--m", "1", "--index", "5"]);
    golden("gray_s2_m2_i7.json", &["gray", "--s", "2", "--m", "2", "--index", "7", "--format", "json"]);
}

#[test]
fn explicit_modulus_changes_nothing_for_default() {
    let (_, a) = run(&["enumerate", "--s", "2", "--m", "2"]);
    let (_, b) = run(&["enumerate", "--s", "2", "--m", "2", "--modulus", "0x7"]);
    assert_eq!(a, b);
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("selfdual-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.txt");
    let (code, out) = run(&["count", "--s", "3", "--output", path.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (0, ""));
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "19\n");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["enumerate", "--s", "13"]).0, cli::EXIT_USAGE);
    assert_eq!(run(&["enumerate", "--s", "2", "--m", "17"]).0, cli::EXIT_USAGE);
    assert_eq!(run(&["enumerate", "--s", "2", "--modulus", "zz"]).0, cli::EXIT_USAGE);
    assert_eq!(run(&["verify", "--s", "4", "--full", "--cap", "100"]).0, cli::EXIT_CAP);
    assert_eq!(run(&["gray", "--s", "4", "--index", "0", "--cap", "1000"]).0, cli::EXIT_CAP);
}
