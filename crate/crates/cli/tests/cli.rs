use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn lk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lk")).args(args).env_remove("LK_BUDGET").output().expect("run lk")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

#[test]
fn roots_counts() {
    let a2 = lk(&["roots", "--type", "A", "--rank", "2"]);
    assert!(a2.status.success());
    let v = json(&a2);
    assert_eq!(v["type"], "A");
    assert_eq!(v["rank"], 2);
    assert_eq!(v["roots"], serde_json::json!([[1, 0], [0, 1], [1, 1]]));
    assert_eq!(v["cartan"], serde_json::json!([[2, -1], [-1, 2]]));

    let e8 = lk(&["roots", "--type", "E", "--rank", "8"]);
    assert_eq!(json(&e8)["roots"].as_array().unwrap().len(), 120);
}

#[test]
fn roots_rejects_d3() {
    let o = lk(&["roots", "--type", "D", "--rank", "3"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("invalid type D3"));
}

#[test]
fn roots_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let o = lk(&["roots", "--type", "D", "--rank", "4", "--out", dir.path().to_str().unwrap(), "--format", "json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&fs::read_to_string(dir.path().join("roots.json")).unwrap()).unwrap();
    assert_eq!(v["roots"].as_array().unwrap().len(), 12);
    assert_eq!(v["roots"][0], serde_json::json!([1, 0, 0, 0]));
}

fn rep_files(family: &str, rank: &str) -> (tempfile::TempDir, Vec<Value>, Value) {
    let dir = tempfile::tempdir().unwrap();
    let o = lk(&["rep", "--type", family, "--rank", rank, "--out", dir.path().to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let n: usize = rank.parse().unwrap();
    let mats = (1..=n)
        .map(|k| serde_json::from_str(&fs::read_to_string(dir.path().join(format!("sigma_{k}.json"))).unwrap()).unwrap())
        .collect();
    let table = serde_json::from_str(&fs::read_to_string(dir.path().join("ttable.json")).unwrap()).unwrap();
    (dir, mats, table)
}

#[test]
fn rep_exports() {
    let (_d, mats, table) = rep_files("A", "2");
    assert_eq!(mats.len(), 2);
    for (k, m) in mats.iter().enumerate() {
        assert_eq!(m["generator"], k + 1);
        assert_eq!(m["size"], 3);
        assert_eq!(m["entries"].as_array().unwrap().len(), 3);
    }
    // σ_1 column α_1+α_2 has t(r⁵ - r³) in row α_1.
    assert_eq!(mats[0]["entries"][0][2], serde_json::json!([["-1", 3, 1], ["1", 5, 1]]));
    assert_eq!(table.as_array().unwrap().len(), 6);
    assert_eq!(table[2], serde_json::json!({"k": 1, "root": [1, 1], "poly": [["-1", 3, 0], ["1", 5, 0]]}));

    let (_d, mats, _) = rep_files("D", "4");
    assert_eq!(mats.len(), 4);
    assert!(mats.iter().all(|m| m["size"] == 12));

    let (_d, mats, _) = rep_files("A", "1");
    assert_eq!(mats[0]["entries"], serde_json::json!([[[["1", 4, 1]]]]));
}

#[test]
fn verify_passes_and_reports() {
    let o = lk(&["verify", "--type", "A", "--rank", "3", "--suite", "braid,det,ttable"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("braid") && out.contains("det") && out.contains("ttable.closed_form"));
    assert!(!out.contains("FAIL"));

    let e6 = lk(&["verify", "--type", "E", "--rank", "6", "--suite", "braid,w0", "--format", "json"]);
    assert!(e6.status.success());
    let v = json(&e6);
    let w0 = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "w0").unwrap();
    assert_eq!(w0["pass"], true);
    assert_eq!(w0["detail"], "scalar t*r^24");

    let eq = lk(&["verify", "--type", "A", "--rank", "2", "--suite", "equivariance"]);
    assert!(eq.status.success());
    assert!(stdout(&eq).contains("exhaustive over 7 closed sets"));
}

#[test]
fn verify_report_is_sorted_and_byte_stable() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for d in [&a, &b] {
        let o = lk(&["verify", "--type", "A", "--rank", "2", "--suite", "w0,cone,braid", "--seed", "7", "--out", d.path().to_str().unwrap()]);
        assert!(o.status.success());
    }
    let ra = fs::read(a.path().join("report.json")).unwrap();
    assert_eq!(ra, fs::read(b.path().join("report.json")).unwrap());
    let v: Value = serde_json::from_slice(&ra).unwrap();
    let names: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["braid", "cone", "w0"]);
    assert!(a.path().join("timing.json").exists());
}

#[test]
fn verify_failure_exit_code() {
    // The search oracle cannot enumerate W(D4) under a budget of 10.
    let o = Command::new(env!("CARGO_BIN_EXE_lk"))
        .args(["verify", "--type", "D", "--rank", "4", "--suite", "charney"])
        .env("LK_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn verify_rejects_unknown_suite_and_bad_r0() {
    assert!(!lk(&["verify", "--type", "A", "--rank", "2", "--suite", "nope"]).status.success());
    assert!(!lk(&["verify", "--type", "A", "--rank", "2", "--r0", "3/2"]).status.success());
}

#[test]
fn charney_examples() {
    assert_eq!(stdout(&lk(&["charney", "--type", "A", "--rank", "2", "--word", "1 2 1"])), "1\n");
    assert_eq!(stdout(&lk(&["charney", "--type", "A", "--rank", "2", "--word", ""])), "0\n");
    let o = lk(&["charney", "--type", "A", "--rank", "2", "--word", "1 -2", "--oracle"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "2\noracle 2\n");
}

#[test]
fn head_examples() {
    let first = |w: &str| stdout(&lk(&["head", "--type", "A", "--rank", "2", "--word", w])).lines().next().unwrap().to_string();
    assert_eq!(first("1 1 2"), "1");
    assert_eq!(first("1 2 1"), "1 2 1");
    assert_eq!(first(""), "");
    let o = lk(&["head", "--type", "A", "--rank", "2", "--word", "1 2"]);
    assert_eq!(stdout(&o), "1 2\n[[1,0],[1,1]]\n");
    let neg = lk(&["head", "--type", "A", "--rank", "2", "--word", "1 -2"]);
    assert!(!neg.status.success());
    assert!(String::from_utf8_lossy(&neg.stderr).contains("negative letter"));
}
