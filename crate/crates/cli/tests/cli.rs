//! The binary end to end: outputs, exit codes and the record store.

use std::process::{Command, Output};

use serde_json::Value;

fn g2disc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_g2disc"))
        .args(args)
        .env_remove("G2DISC_STORE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = g2disc(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

#[test]
fn family_record_for_a_prime_discriminant() {
    let r: Value = serde_json::from_str(&ok(&["family", "thm7-E", "3"])).unwrap();
    assert_eq!(r["discriminant"]["value"], "2837");
    assert_eq!(r["odd_part_prime"]["prime"], true);
    assert_eq!(r["family"]["name"], "thm7-E");
    assert_eq!(r["id"].as_str().unwrap().len(), 64);
}

#[test]
fn scan_lists_the_published_values() {
    let out = ok(&["scan", "thm7-F", "1", "99"]);
    let ts: Vec<i64> = out
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap()["family"]["t"].as_str().unwrap().parse().unwrap())
        .collect();
    assert_eq!(ts, [3, 6, 10, 12, 13, 18, 23, 25, 27, 31, 35, 44, 51, 58, 74, 80, 82, 93, 95]);
}

#[test]
fn jobs_do_not_change_output_bytes() {
    let a = ok(&["scan", "sec8-i", "-40", "120", "--jobs", "1"]);
    let b = ok(&["scan", "sec8-i", "-40", "120", "--jobs", "6"]);
    assert_eq!(a, b);
    let c = ok(&["classify", "2q", "--format", "json", "--jobs", "1"]);
    let d = ok(&["classify", "2q", "--format", "json", "--jobs", "5"]);
    assert_eq!(c, d);
}

#[test]
fn singular_equation_has_zero_discriminant() {
    let d: Value = serde_json::from_str(&ok(&["disc", r#"{"P": [0, 0, 1, 0, 0, 1]}"#])).unwrap();
    assert_eq!(d["value"], "0");
    assert_eq!(d["smooth"], false);
}

#[test]
fn family_output_round_trips_through_disc_and_igusa() {
    let r: Value = serde_json::from_str(&ok(&["family", "thm7-E4", "-2", "1", "-1", "1"])).unwrap();
    let eq = serde_json::json!({"P": r["P"], "Q": r["Q"]}).to_string();
    let d: Value = serde_json::from_str(&ok(&["disc", &eq])).unwrap();
    assert_eq!(d, r["discriminant"]);
    let j: Value = serde_json::from_str(&ok(&["igusa", &eq])).unwrap();
    assert_eq!(j["J"], r["J"]);
}

#[test]
fn six_point_invariants_and_reduction() {
    let e0 = r#"{"P": ["0", "4", "0", "-5", "0", "1"]}"#;
    let j: Value = serde_json::from_str(&ok(&["igusa", e0])).unwrap();
    assert_eq!(j["J"], serde_json::json!(["620", "9830", "-17820", "-26919325", "21233664"]));
    let g: Value = serde_json::from_str(&ok(&["potgood", e0, "5"])).unwrap();
    assert_eq!(g["potential_good_reduction"], true);
    let g: Value = serde_json::from_str(&ok(&["potgood", e0, "3"])).unwrap();
    assert_eq!(g["potential_good_reduction"], false);
}

#[test]
fn usage_errors_exit_2_and_name_the_field() {
    for (args, needle) in [
        (vec!["disc", r#"{"Q": [1]}"#], "`P`"),
        (vec!["disc", r#"{"P": [1, "2/0"]}"#], "`P[1]`"),
        (vec!["disc", r#"{"P": [1], "R": []}"#], "`R`"),
        (vec!["disc", r#"{"P": [0,0,0,0,0,0,0,1]}"#], "`P`"),
        (vec!["family", "thm7-E", "x"], "`t`"),
        (vec!["family", "nope", "1"], "nope"),
        (vec!["potgood", r#"{"P": [0,1,0,0,0,1]}"#, "9"], "`p`"),
        (vec!["classify", "3wp", "--modulus", "48"], "power of 2"),
        (vec!["disc", r#"{"P": [1]}"#, "--format", "csv"], "csv"),
    ] {
        let o = g2disc(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8_lossy(&o.stderr);
        assert!(err.contains(needle), "{args:?}: {err}");
    }
    assert_eq!(g2disc(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn store_appends_once_per_id() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("curves.jsonl");
    let p = path.to_str().unwrap();
    ok(&["scan", "thm7-E", "1", "20", "--out", p]);
    let first = std::fs::read_to_string(&path).unwrap();
    ok(&["scan", "thm7-E", "1", "30", "--out", p]);
    let second = std::fs::read_to_string(&path).unwrap();
    assert!(second.starts_with(&first));
    let ids: Vec<String> = second
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap()["id"].as_str().unwrap().to_string())
        .collect();
    let mut unique = ids.clone();
    unique.sort();
    unique.dedup();
    assert_eq!(unique.len(), ids.len());
    assert_eq!(ids.len(), ok(&["scan", "thm7-E", "1", "30"]).lines().count());

    // the environment variable is the default store
    let env_path = dir.path().join("env.jsonl");
    let o = Command::new(env!("CARGO_BIN_EXE_g2disc"))
        .args(["family", "thm7-E", "3"])
        .env("G2DISC_STORE", &env_path)
        .output()
        .unwrap();
    assert!(o.status.success());
    assert_eq!(std::fs::read_to_string(&env_path).unwrap().lines().count(), 1);
}

#[test]
fn csv_and_table_formats() {
    let csv = ok(&["scan", "thm7-E", "1", "10", "--format", "csv"]);
    assert!(csv.starts_with("id,P,Q,disc,sign,v2,odd_part,smooth,J,family,t,eps"));
    assert_eq!(csv.lines().count(), 5);
    let table = ok(&["classify", "6wp", "--bound", "8"]);
    assert!(table.contains("2 geometric / 4 rational classes"));
    assert!(table.contains("21233664"));
}

#[test]
fn verify_command_reports_each_criterion() {
    let o = g2disc(&["verify-paper", "--criterion", "1", "--criterion", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("[PASS] criterion 1"));
    assert!(out.contains("[PASS] criterion 3"));
    // the two-quadratic byproduct list disagrees with the published one
    let o = g2disc(&["verify-paper", "--criterion", "6"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("[FAIL] criterion 6"));
}
