use std::fs;
use std::path::PathBuf;
use std::process::Command;

use mzv::cli::{run, EXIT_FAILURE, EXIT_OK, EXIT_USAGE};
use mzv::{parse_rational, rat};

fn call(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("mzv").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn temp_dir(tag: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("mzv-cli-{tag}-{}", std::process::id()));
    let _ = fs::remove_dir_all(&d);
    fs::create_dir_all(&d).unwrap();
    d
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_mzv"))
}

#[test]
fn value_paths_agree() {
    let (code, out, _) = call(&[
        "value", "--kind", "mzf-rev", "--index", "1,1", "--path", "all",
    ]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.matches("1/240").count(), 3);
    assert!(out.contains("AGREE"));
}

#[test]
fn json_values_parse_back_exactly() {
    let (code, out, _) = call(&[
        "--json",
        "table",
        "--kind",
        "mzsf-rev",
        "--max-depth",
        "2",
        "--max-weight",
        "3",
    ]);
    assert_eq!(code, EXIT_OK);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    let records = doc["records"].as_array().unwrap();
    assert!(records.len() >= 10);
    for r in records {
        let v = parse_rational(r["value"].as_str().unwrap()).unwrap();
        let q = r["query"].as_str().unwrap();
        let idx = q.trim_start_matches("mzsf-rev(").trim_end_matches(')');
        assert_eq!(v, mzv::mzsf_rev(&idx.parse().unwrap()), "{q}");
    }
}

#[test]
fn csv_has_header_and_rows() {
    let (code, out, _) = call(&["--csv", "gregory", "--max", "2", "2"]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines.len() >= 3);
    assert!(out.contains("1/12"));
    assert!(out.contains("-1/2"));
}

#[test]
fn decimal_flag_adds_approximation() {
    let (code, out, _) = call(&[
        "--decimal",
        "6",
        "value",
        "--kind",
        "mzf-rev",
        "--index",
        "1,1",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("1/240"));
    assert!(out.contains("0.004167"));
}

#[test]
fn coefficients_and_stirling() {
    let (code, out, _) = call(&["coeff", "--index", "1,1", "--d", "1", "--a", "1,1"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("1/720"));
    let (code, out, _) = call(&["stirling", "--kind", "S-poly", "--n", "2", "--m", "1"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("2*Y + 1"));
}

#[test]
fn verify_reports_counts() {
    let (code, out, _) = call(&[
        "verify",
        "--suite",
        "sign",
        "--max-depth",
        "3",
        "--max-weight",
        "4",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("identities verified"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "--suite", "bogus"][..],
        &["value", "--kind", "mzf-rev", "--index", "1,x"],
        &[
            "value", "--kind", "mzf-reg", "--index", "1", "--path", "gregory",
        ],
        &["coeff", "--index", "1,1", "--d", "1,1", "--a", "1,1"],
        &["frobnicate"],
        &["--json", "--csv", "gregory"],
    ] {
        let (code, _, err) = call(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn binary_uses_cache_dir() {
    let dir = temp_dir("roundtrip");
    let status = bin()
        .env("MZV_CACHE_DIR", &dir)
        .args([
            "table",
            "--kind",
            "mzf-rev",
            "--max-depth",
            "3",
            "--max-weight",
            "3",
        ])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(EXIT_OK));
    let text = fs::read_to_string(dir.join("values.v1.txt")).unwrap();
    let rec = text
        .lines()
        .find(|l| l.starts_with("mzf-rev|1,1|"))
        .unwrap();
    assert_eq!(
        parse_rational(rec.rsplit('|').next().unwrap()).unwrap(),
        rat(1, 240)
    );

    let again = bin()
        .env("MZV_CACHE_DIR", &dir)
        .args(["value", "--kind", "mzf-rev", "--index", "1,1"])
        .output()
        .unwrap();
    assert_eq!(again.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8_lossy(&again.stdout).contains("1/240"));
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn corrupted_cache_is_detected_as_disagreement() {
    let dir = temp_dir("poison");
    fs::write(dir.join("values.v1.txt"), "mzf-rev|1,1|1/2\nnot a record\n").unwrap();
    let out = bin()
        .env("MZV_CACHE_DIR", &dir)
        .args([
            "value", "--kind", "mzf-rev", "--index", "1,1", "--path", "all",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_FAILURE));
    assert!(String::from_utf8_lossy(&out.stdout).contains("DISAGREE"));
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn binary_usage_error() {
    let out = bin().arg("value").output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
}
