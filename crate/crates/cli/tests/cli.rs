use std::process::{Command, Output};

use serde_json::Value;

fn qkborel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qkborel")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8 output")
}

#[test]
fn verify_all_suites_at_rank_two_passes() {
    let out = qkborel(&["verify", "--n", "2", "--suite", "all"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).ends_with("overall: PASS\n"));
}

#[test]
fn out_of_range_rank_is_a_usage_error() {
    for n in ["0", "7"] {
        let out = qkborel(&["verify", "--n", n]);
        assert_eq!(out.status.code(), Some(2));
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn unknown_suite_and_variant_are_usage_errors() {
    assert_eq!(qkborel(&["verify", "--n", "2", "--suite", "bogus"]).status.code(), Some(2));
    assert_eq!(qkborel(&["show", "f", "--n", "2", "--l", "1", "--variant", "upper:x"]).status.code(), Some(2));
}

#[test]
fn solve_system_recovers_elementary_sums() {
    let out = qkborel(&["--json", "solve-system", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["passed"], Value::Bool(true));
    let rows = v["solution"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|r| r["equals_elementary"] == Value::Bool(true)));
}

#[test]
fn reports_are_byte_identical_across_runs_and_thread_counts() {
    let args = ["--json", "verify", "--n", "2", "--suite", "relations"];
    let a = qkborel(&args);
    let b = Command::new(env!("CARGO_BIN_EXE_qkborel")).args(args).env("QKC_THREADS", "1").output().unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn json_report_matches_schema() {
    let schema: Value = serde_json::from_str(include_str!("../schema/report.schema.json")).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    for extra in [&[][..], &["--timings"][..]] {
        let mut args = vec!["--json"];
        args.extend_from_slice(extra);
        args.extend_from_slice(&["verify", "--n", "2", "--suite", "all", "--mode", "exact"]);
        let out = qkborel(&args);
        let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
        let errors: Vec<String> = validator.iter_errors(&report).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{errors:?}");
        assert_eq!(report["trunc"], Value::Null);
        assert_eq!(report["suites"].as_array().unwrap().len(), 6);
    }
}

#[test]
fn config_file_supplies_defaults_and_flags_override() {
    let dir = std::env::temp_dir().join(format!("qkborel-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("defaults.conf");
    std::fs::write(&path, "n = 2\ntrunc = 5\nsuites = qbg, alcove\n").unwrap();
    let p = path.to_str().unwrap();

    let out = qkborel(&["--json", "--config", p, "verify"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["n"], 2);
    assert_eq!(v["trunc"], 5);
    let names: Vec<&str> = v["suites"].as_array().unwrap().iter().map(|s| s["suite"].as_str().unwrap()).collect();
    assert_eq!(names, ["qbg", "alcove"]);

    let out = qkborel(&["--json", "--config", p, "verify", "--n", "1", "--suite", "qbg"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["n"], 1);
    assert_eq!(v["suites"].as_array().unwrap().len(), 1);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn ic_matches_closed_form() {
    let out = qkborel(&["ic", "--n", "3", "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("closed form: PASS"));
}

#[test]
fn exports_and_listings() {
    let dot = stdout(&qkborel(&["qbg", "export", "--n", "2"]));
    assert!(dot.starts_with("digraph"));
    let json: Value = serde_json::from_str(&stdout(&qkborel(&["qbg", "export", "--n", "2", "--format", "json"]))).unwrap();
    assert!(json.is_object());
    let out = qkborel(&["--json", "alcove", "list", "--n", "2", "--w", "[2,-1]", "--seq", "theta:2"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["subsets"].as_array().unwrap().len(), 2);
    for cmd in [&["show", "ff", "--n", "2", "--l", "1"][..], &["show", "ideal", "--n", "2"], &["show", "schubert", "--n", "2", "--k", "2", "--barred"]] {
        assert_eq!(qkborel(cmd).status.code(), Some(0), "{cmd:?}");
    }
}
