use std::process::Command;

use serde_json::Value;

fn scp(args: &[&str]) -> (bool, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_scp")).args(args).output().expect("binary runs");
    (out.status.success(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (ok, stdout, stderr) = scp(args);
    assert!(ok, "scp {args:?} failed: {stderr}");
    serde_json::from_str(&stdout).expect("json output")
}

#[test]
fn decide_and_search() {
    let v = json(&["decide", "--a", "1 2; 2", "--c", "2 1; 1"]);
    assert_eq!(v["decision"], "conjugate");
    let v = json(&["search", "--a", "1 2; 2", "--c", "2 1; 1"]);
    assert_eq!(v["verified"], true);
    // Exponent sums agree, but a conjugator would have to centralize σ₁.
    let v = json(&["--n", "3", "search", "--a", "1; 2", "--c", "1; 1"]);
    assert_eq!(v["decision"], "not_conjugate");
    assert!(v["witness"].is_null());
}

#[test]
fn bkl_words_parse() {
    let v = json(&["--structure", "bkl", "decide", "--a", "(2,1) -(3,1)", "--c", "(3,1) -(2,1)"]);
    assert_eq!(v["decision"], "conjugate");
}

#[test]
fn invariant_schema() {
    let v = json(&["--n", "3", "invariant", "--a", "1 1", "--kind", "lsss", "--members"]);
    assert_eq!(v["size"], 2);
    assert_eq!(v["variant"], "lsss");
    assert_eq!(v["interval"]["lo"], serde_json::json!([0]));
    assert_eq!(v["interval"]["hi"], serde_json::json!([2]));
    assert_eq!(v["members"], serde_json::json!([["1 1"], ["2 2"]]));
    for key in ["structure", "n", "r", "truncated", "mod_tau", "witness"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    let v = json(&["--n", "3", "--mod-tau", "invariant", "--a", "1 1"]);
    assert_eq!(v["size"], 1);
    let v = json(&["--n", "3", "invariant", "--a", "1; 2 2", "--kind", "lss"]);
    assert_eq!(v["interval"]["hi"], serde_json::json!(["inf", "inf"]));
}

#[test]
fn attack_report() {
    for problem in ["dh", "dcp", "commutator", "centralizer"] {
        let v = json(&["--n", "6", "attack", "--problem", problem, "--seed", "3"]);
        assert_eq!(v["problem"], problem);
        assert_eq!(v["success"], true, "{v}");
        assert!(v["oracle_calls"].as_u64().unwrap() >= 1);
        assert!(v["wall_time_ms"].is_u64());
        assert_eq!(v["params"]["n"], 6);
    }
}

#[test]
fn bench_csv_and_config() {
    let (ok, stdout, _) = scp(&["bench", "table1", "--trials", "2", "--r", "2", "--kinds", "LSS,LSSS", "--deterministic"]);
    assert!(ok);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines[0], "kind,structure,N,r,min,median,max,failure_pct,trials");
    assert_eq!(lines.len(), 5);
    assert!(lines[1].starts_with("LSS,artin,4,2,"));

    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    let out = dir.path().join("rows.json");
    std::fs::write(&cfg, r#"{"structure":"bkl","N":4,"r":3,"trials":2,"kinds":["LSSS"],"seed":5}"#).unwrap();
    let (ok, _, stderr) = scp(&["bench", "run", "--config", cfg.to_str().unwrap(), "--format", "json", "--out", out.to_str().unwrap()]);
    assert!(ok, "{stderr}");
    let rows: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(rows[0]["kind"], "LSSS");
    assert_eq!(rows[0]["trials"], 2);
}

#[test]
fn errors_are_reported() {
    let (ok, _, stderr) = scp(&["decide", "--a", "1 7", "--c", "1"]);
    assert!(!ok);
    assert!(stderr.contains("out of range"), "{stderr}");
    let (ok, _, stderr) = scp(&["decide", "--a", "1; 2", "--c", "1"]);
    assert!(!ok);
    assert!(stderr.contains("entries"), "{stderr}");
}
