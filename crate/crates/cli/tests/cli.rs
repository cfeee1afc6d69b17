use std::process::{Command, Output};

use serde_json::Value;

fn qd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qdissect"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json on stdout")
}

#[test]
fn expand_text_and_json() {
    let o = qd(&["expand", "f2/f1^2", "--order", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1 2 4 8 14 24 40");

    let v = json(&qd(&["expand", "dissect(pbar, 8, 7)", "-n", "2", "--mod", "1000", "--json"]));
    assert_eq!(v["order"], 2);
    assert_eq!(v["modulus"], 1000);
    assert_eq!(v["coefficients"], serde_json::json!(["64", "472", "728"]));
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["expr", "order", "modulus", "coefficients"]);
}

#[test]
fn parse_errors_exit_2_with_a_caret() {
    let o = qd(&["expand", "f1 + * f2", "--order", "5"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("column 6"), "{err}");
    assert!(err.contains("       ^"), "{err}");
    assert_eq!(qd(&["expand", "1/(q - q^2)", "--order", "5"]).status.code(), Some(2));
    assert_eq!(qd(&["verify", "no-such-id"]).status.code(), Some(2));
    assert_eq!(qd(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_pass_and_fail() {
    let o = qd(&["verify", "M-2", "--order", "60"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("PASS  M-2"), "{text}");
    assert!(text.contains("1 records: 1 passed, 0 failed, 0 errors"), "{text}");

    let o = qd(&["verify", "3-6c", "--order", "60", "--verbatim", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v[0]["status"], "fail");
    assert!(v[0]["first_mismatch"]["exponent"].is_u64());

    // below the record minimum
    assert_eq!(qd(&["verify", "M-2", "--order", "3"]).status.code(), Some(2));
}

#[test]
fn report_shape_is_stable() {
    let v = json(&qd(&["verify", "3-14", "--order", "40", "--json", "--audit"]));
    let r = v[0].as_object().unwrap();
    let keys: Vec<&str> = r.keys().map(String::as_str).collect();
    assert_eq!(keys, ["id", "status", "order", "ms"]);
    assert_eq!(r["order"], 40);
}

#[test]
fn exported_catalog_reimports() {
    let dir = std::env::temp_dir().join(format!("qdissect-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("all.qcat");
    let p = path.to_str().unwrap();
    assert_eq!(qd(&["catalog", "--export", p]).status.code(), Some(0));
    let o = qd(&["verify", "--all", "--order", "30", "--catalog", p, "--json", "--parallel"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let listed = json(&qd(&["catalog", "--json"]));
    assert_eq!(json(&o).as_array().unwrap().len(), listed.as_array().unwrap().len());

    std::fs::write(&path, "@record broken\nanchor: x\nlhs: f1 +\n").unwrap();
    assert_eq!(qd(&["verify", "--all", "--catalog", p]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn scan_reports_violations() {
    let o = qd(&["scan", "--step", "4", "--offset", "3", "--mod", "16", "--nmax", "5", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    let first = &v["violations"][0];
    // pbar(3) = 8
    assert_eq!(first["n"], 0);
    assert_eq!(first["residue"], 8);

    let o = qd(&["scan", "--step", "8", "--offset", "7", "--mod", "64", "--nmax", "50", "--exact"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("no violations"));
}

#[test]
fn oracle_lists_counts() {
    let o = qd(&["oracle", "--nmax", "4"]);
    assert_eq!(stdout(&o), "0 1\n1 2\n2 4\n3 8\n4 14\n");
    let v = json(&qd(&["oracle", "--nmax", "3", "--mod", "3", "--json"]));
    assert_eq!(v["values"], serde_json::json!(["1", "2", "1", "2"]));
}

#[test]
fn catalog_listing_has_no_trailing_space() {
    let text = stdout(&qd(&["catalog"]));
    assert!(text.lines().count() >= 30);
    assert!(text.lines().all(|l| !l.ends_with(' ')));
    assert!(text.lines().any(|l| l.starts_with("3-6c") && l.ends_with("corrected")));
}
