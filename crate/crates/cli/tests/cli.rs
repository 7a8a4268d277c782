use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cbnef"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

#[test]
fn golden_files_are_current() {
    let tmp = tempfile::tempdir().unwrap();
    let out = run(&["golden", "--out", tmp.path().to_str().unwrap()]);
    assert!(out.status.success());
    let mut names: Vec<String> = fs::read_dir(golden_dir())
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    let mut fresh: Vec<String> = fs::read_dir(tmp.path())
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    fresh.sort();
    assert_eq!(names, fresh);
    for name in names {
        let want = fs::read_to_string(golden_dir().join(&name)).unwrap();
        let got = fs::read_to_string(tmp.path().join(&name)).unwrap();
        assert_eq!(
            got, want,
            "{name} differs; rerun `cbnef golden --out crates/cli/tests/golden`"
        );
    }
}

#[test]
fn envelope_shape() {
    let v = json(&["class", "--n", "8", "--j", "2"]);
    assert_eq!(v["command"], "class");
    assert_eq!(v["format_version"], "1");
    assert_eq!(v["params"]["n"], 8);
    let coeffs: Vec<&str> = v["result"]["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap())
        .collect();
    assert_eq!(coeffs, ["2/7", "6/7", "12/7"]);
}

#[test]
fn keys_are_sorted() {
    let out = run(&["extremal", "--n", "20", "--j", "6"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let top: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("  \""))
        .map(|l| l.trim().split('"').nth(1).unwrap())
        .collect();
    assert_eq!(top, ["command", "format_version", "params", "result"]);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["extremal", "--n", "31", "--j", "9"][..],
        &[
            "hassett",
            "--n",
            "15",
            "--weights",
            "4",
            "--samples",
            "3000",
            "--seed",
            "11",
        ],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout);
    }
}

#[test]
fn degenerate_and_trivial_classes() {
    let v = json(&["class", "--n", "5", "--j", "2"]);
    assert_eq!(v["result"]["coefficients"].as_array().unwrap().len(), 1);
    let v = json(&["class", "--n", "13", "--j", "1"]);
    assert!(v["result"]["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c == "0"));
}

#[test]
fn intersection_values() {
    let v = json(&["intersect", "--n", "20", "--j", "6", "--shape", "1,1,2,16"]);
    assert_eq!(v["result"]["value"], 4);
    let v = json(&[
        "intersect",
        "--n",
        "20",
        "--j",
        "6",
        "--partition",
        "1|2|3,4|5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20",
    ]);
    assert_eq!(v["result"]["value"], 4);
    let v = json(&[
        "intersect",
        "--n",
        "8",
        "--weights",
        "2,2,2,2,2,2,2,2",
        "--partition",
        "1|2|3|4,5,6,7,8",
    ]);
    assert_eq!(v["result"]["certified_zero"], true);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["intersect", "--n", "20", "--j", "6", "--shape", "1,1,1,16"][..],
        &["intersect", "--n", "20", "--j", "6", "--weights", "6"],
        &[
            "intersect",
            "--n",
            "8",
            "--weights",
            "2,2,2,2,2,2,2,2",
            "--shape",
            "1,1,1,5",
        ],
        &["class", "--n", "20", "--j", "11"],
        &["class", "--n", "3", "--j", "1"],
        &["basis", "--n", "5", "--which", "M"],
        &["basis", "--n", "12", "--which", "Q"],
        &["hassett", "--n", "14", "--weights", "3"],
        &["hassett", "--n", "8", "--weights", "1"],
        &["survey", "--n-min", "9", "--n-max", "7"],
        &["frobnicate"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn partition_cap_from_environment() {
    let out = bin()
        .args(["hassett", "--n", "13", "--weights", "6"])
        .env("CBNEF_PARTITION_CAP", "13")
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["checked"], 2_532_530);
    let low = bin()
        .args(["hassett", "--n", "12", "--weights", "3"])
        .env("CBNEF_PARTITION_CAP", "11")
        .output()
        .unwrap();
    assert_eq!(low.status.code(), Some(2));
    let bad = bin()
        .args(["hassett", "--n", "8", "--weights", "2"])
        .env("CBNEF_PARTITION_CAP", "many")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn expect_extremal_gates_exit_code() {
    assert_eq!(
        run(&["extremal", "--n", "25", "--j", "7", "--expect-extremal"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        run(&["extremal", "--n", "5", "--j", "2", "--expect-extremal"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["extremal", "--n", "5", "--j", "2"]).status.code(),
        Some(0)
    );
    assert_eq!(
        run(&["extremal", "--n", "20", "--j", "1", "--expect-extremal"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn example_certificates() {
    let v = json(&["extremal", "--n", "25", "--j", "7"]);
    assert_eq!(v["result"]["verdict"], "Extremal");
    assert_eq!(v["result"]["det_expected"], "5");
    let det = v["result"]["minor_det"]
        .as_str()
        .unwrap()
        .trim_start_matches('-')
        .to_string();
    assert_eq!(det, "5");
    let v = json(&["extremal", "--n", "9", "--j", "4"]);
    assert_eq!(v["result"]["method"], "bruteforce");
    let out = run(&["--format", "text", "extremal", "--n", "4", "--j", "2"]);
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("degenerate"));
}

#[test]
fn basis_matches_printed_matrix() {
    let v = json(&["basis", "--n", "12", "--which", "N"]);
    assert_eq!(v["result"]["entries"][1][0], "-5/11");
    assert_eq!(v["result"]["entries"][4][4], "15/11");
    let out = run(&["--format", "text", "basis", "--n", "13", "--which", "M"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("M(13):"));
}

#[test]
fn gamma_expansion() {
    let v = json(&["gamma", "--n", "12", "--shape", "7,2,2,1"]);
    assert_eq!(v["params"]["shape"], "1,2,2,7");
    let g: Vec<i64> = v["result"]["gammas"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_i64().unwrap())
        .collect();
    assert_eq!(g, [-1, 1, 1, 0, 0]);
}

#[test]
fn survey_rows_independent_of_jobs() {
    let one = run(&["survey", "--n-min", "6", "--n-max", "18", "--jobs", "1"]);
    let four = run(&["survey", "--n-min", "6", "--n-max", "18", "--jobs", "4"]);
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
    let text = String::from_utf8(one.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,j,k,r,method,verdict,minor_det,det_expected,nef,family"
    );
    let rows: Vec<&str> = lines.collect();
    let expected: u32 = (6..=18).map(|n| n / 2 - 1).sum();
    assert_eq!(rows.len() as u32, expected);
    assert!(rows.iter().all(|r| r.contains(",Extremal,")));
}

#[test]
fn survey_to_file_and_expectation() {
    let tmp = tempfile::tempdir().unwrap();
    let path = tmp.path().join("s.csv");
    let out = run(&[
        "survey",
        "--n-min",
        "6",
        "--n-max",
        "12",
        "--out",
        path.to_str().unwrap(),
        "--expect-extremal",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["rows"], 23);
    assert_eq!(fs::read_to_string(&path).unwrap().lines().count(), 24);
    let out = run(&[
        "survey",
        "--n-min",
        "4",
        "--n-max",
        "6",
        "--expect-extremal",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn single_partition_hassett() {
    let v = json(&[
        "hassett",
        "--n",
        "8",
        "--weights",
        "2",
        "--partition",
        "1|2|3|4,5,6,7,8",
    ]);
    assert_eq!(v["result"]["contracted"], true);
    assert_eq!(v["result"]["certified_zero"], true);
    assert_eq!(v["result"]["value"], 0);
}
