//! End-to-end runs of the `braidex` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn braidex(args: &[&str], envs: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_braidex"));
    cmd.args(args).env_remove("BRAIDEX_THREADS");
    for (k, v) in envs {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("examples/data")
        .join(name)
        .display()
        .to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn rational_json_values() {
    let o = braidex(&["rational", "17426/4117", "--json"], &[]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["braid_index"], 9);
    let sv = v["signed_vectors"].as_array().unwrap();
    assert_eq!(sv.len(), 2);
    assert_eq!(sv[0]["choice"], "A");
    assert_eq!(sv[0]["braid_index"], 10);
    assert_eq!(sv[1]["choice"], "B");
    assert_eq!(sv[1]["braid_index"], 9);
}

#[test]
fn montesinos_with_verification() {
    let o = braidex(
        &["montesinos", "7/19,1/3,1/2,e=0", "--verify", "--json"],
        &[],
    );
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["braid_index"], 5);
}

#[test]
fn homfly_of_pd_file() {
    let o = braidex(&["homfly", "--pd", &data("trefoil.json"), "--json"], &[]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(
        (v["E"].as_i64(), v["e"].as_i64(), v["mwf"].as_i64()),
        (Some(-2), Some(-4), Some(2))
    );
    assert_eq!(v["crossings"], 3);

    let o = braidex(
        &[
            "homfly",
            "--pd",
            &data("torus_link_2_4_antiparallel.json"),
            "--json",
        ],
        &[],
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["components"], 2);
    assert_eq!(v["mwf"], 3);
}

#[test]
fn trace_lines_are_json() {
    let dir = std::env::temp_dir().join(format!("braidex-trace-{}", std::process::id()));
    let file = dir.with_extension("jsonl");
    let o = braidex(
        &[
            "homfly",
            "--pd",
            &data("trefoil.json"),
            "--trace",
            file.to_str().unwrap(),
        ],
        &[],
    );
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&file).unwrap();
    std::fs::remove_file(&file).ok();
    let lines: Vec<serde_json::Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines[0]["kind"], "root");
    assert!(lines.iter().skip(1).all(|l| l["parent"].is_u64()));
}

#[test]
fn input_errors_exit_one() {
    for args in [
        vec!["rational", "4/2"],
        vec!["rational", "seven"],
        vec!["montesinos", "1/3"],
        vec!["montesinos", "1/0,1/3,e=0"],
        vec!["homfly", "--pd", "/nonexistent/file.json"],
        vec!["verify", "--family", "rational", "--max-crossings", "1"],
        vec!["no-such-command"],
    ] {
        let o = braidex(&args, &[]);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn help_exits_zero() {
    let o = braidex(&["--help"], &[]);
    assert_eq!(o.status.code(), Some(0));
    for sub in ["rational", "montesinos", "homfly", "verify"] {
        assert!(stdout(&o).contains(sub));
    }
}

#[test]
fn verify_reports_identical_across_threads() {
    let runs: Vec<Vec<u8>> = ["1", "4", "8"]
        .iter()
        .map(|t| {
            let o = braidex(
                &["verify", "--family", "montesinos", "--max-crossings", "9"],
                &[("BRAIDEX_THREADS", t)],
            );
            assert_eq!(o.status.code(), Some(0));
            o.stdout
        })
        .collect();
    assert!(!runs[0].is_empty());
    assert_eq!(runs[0], runs[1]);
    assert_eq!(runs[0], runs[2]);

    let flag = braidex(
        &[
            "verify",
            "--family",
            "montesinos",
            "--max-crossings",
            "9",
            "--threads",
            "3",
        ],
        &[],
    );
    assert_eq!(flag.stdout, runs[0]);
}

#[test]
fn verify_writes_report_file() {
    let file = std::env::temp_dir().join(format!("braidex-report-{}.jsonl", std::process::id()));
    let o = braidex(
        &[
            "verify",
            "--family",
            "rational",
            "--max-crossings",
            "8",
            "--out",
            file.to_str().unwrap(),
        ],
        &[],
    );
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&file).unwrap();
    std::fs::remove_file(&file).ok();
    assert!(text
        .lines()
        .all(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()["status"] == "verified"));
}
