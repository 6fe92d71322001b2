//! The `nlclass` binary: output contract, determinism and exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

fn nlclass(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nlclass")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("nlclass-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn json(line: &str) -> serde_json::Value {
    serde_json::from_str(line).expect("valid json line")
}

#[test]
fn demo_twisted_cubic_jsonl() {
    let o = nlclass(&["demo", "twisted-cubic", "--seed", "7", "--format", "jsonl", "--expect", "perfect=yes"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 1);
    let v = json(lines[0]);
    assert_eq!(v["reconstruction"]["m"], 2);
    assert_eq!(v["reconstruction"]["reconstructed"], true);
    assert_eq!(v["perfect"]["perfect"], true);
    assert_eq!(v["class"]["alpha_dims"], serde_json::json!([0, 0, 3, 16, 34]));
    assert!(v.get("timings_ms").is_none());
    // byte-identical on a rerun
    let again = nlclass(&["demo", "twisted-cubic", "--seed", "7", "--format", "jsonl", "--expect", "perfect=yes"]);
    assert_eq!(out, stdout(&again));
}

#[test]
fn demo_rational_quartic_ledger_and_mismatch() {
    let o = nlclass(&[
        "demo",
        "rational-quartic",
        "--format",
        "jsonl",
        "--expect",
        "perfect=no",
        "--expect",
        "ledger_total.3=14",
        "--expect",
        "alpha_dim.3=16",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(stdout(&o).trim());
    assert_eq!(v["perfect"]["ledger"][3]["curves"], 10);
    assert_eq!(v["perfect"]["ledger"][3]["jacobian"], 4);
    assert_eq!(v["lattice"]["residual_matches"], true);

    let o = nlclass(&["demo", "rational-quartic", "--expect", "perfect=yes"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("MISMATCH"));
}

#[test]
fn demo_acm_ci_cross_prime() {
    let o = nlclass(&[
        "demo", "acm-ci", "--d1", "2", "--d2", "2", "--s", "6", "--check-prime", "65521", "--expect", "reconstructed=yes",
        "--expect", "cross_prime=yes",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("reconstruction at level 3: RECONSTRUCTED"));
}

#[test]
fn trials_aggregate_is_last_line() {
    let o = nlclass(&["trials", "twisted_cubic", "--count", "3", "--seed", "40", "--format", "jsonl"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 4);
    let seeds: Vec<u64> = lines[..3].iter().map(|l| json(l)["seed"].as_u64().unwrap()).collect();
    assert_eq!(seeds, [40, 41, 42]);
    let agg = json(lines[3]);
    assert_eq!(agg["kind"], "aggregate");
    assert_eq!(agg["counts"]["reconstructed"], 3);
    assert_eq!(agg["anomalies"], serde_json::json!([]));
}

#[test]
fn inspect_fixtures() {
    let cat = nlclass(&["catalog", "twisted_cubic"]);
    let tc = scratch("tc.txt", &stdout(&cat));
    let o = nlclass(&["inspect", tc.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("HF: 1,4,7,10,13"));
    assert!(out.contains("ACM: yes, r=2, a=(2,2,2), b=(3,3)"));

    let rq = scratch("rq.txt", &stdout(&nlclass(&["catalog", "rational_quartic"])));
    assert!(stdout(&nlclass(&["inspect", rq.to_str().unwrap()])).contains("ACM: no"));

    let empty = scratch("empty.txt", "");
    let o = nlclass(&["inspect", empty.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("parse error"));

    let bad = scratch("bad.txt", "x*z - y^2\nx*w - y*$\n");
    let o = nlclass(&["inspect", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    let cone = scratch("cone.txt", "x^2 + y^2 + z^2\n");
    let o = nlclass(&["inspect", tc.to_str().unwrap(), "--surface", cone.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn usage_errors() {
    assert_eq!(nlclass(&["demo", "nope"]).status.code(), Some(4));
    assert_eq!(nlclass(&["--prime", "32004", "lattice"]).status.code(), Some(4));
    assert_eq!(nlclass(&["lattice", "--expect", "nonsense"]).status.code(), Some(4));
    assert_eq!(nlclass(&["trials", "twisted_cubic", "--count", "0"]).status.code(), Some(4));
    assert_eq!(nlclass(&["--help"]).status.code(), Some(0));
}

#[test]
fn lattice_command() {
    let o = nlclass(&["lattice", "--format", "jsonl"]);
    let v = json(stdout(&o).trim());
    assert_eq!(v["survivors"].as_array().unwrap().len(), 1);
    assert_eq!(v["survivors"][0]["y"], 10);
}
