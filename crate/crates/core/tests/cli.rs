//! End-to-end runs of the `coxeter` binary.

use std::process::{Command, Output};

fn coxeter(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxeter")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn report_examples() {
    for (ty, h) in [("D4", vec![1, 1, 3, 1, 1]), ("I2(9)", vec![1, 1]), ("A1xA1", vec![1, 2, 1])] {
        let o = coxeter(&["report", ty, "--json"]);
        assert!(o.status.success(), "{ty}");
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        let want = serde_json::json!(h);
        assert_eq!(v["h_formula"], want, "{ty}");
        assert_eq!(v["h_enumerated"], want, "{ty}");
        assert_eq!(v["h_mismatch"], false);
    }
    let text = stdout(&coxeter(&["report", "D4", "--text"]));
    assert!(text.contains("1 + t + 3t^2 + t^3 + t^4"));
}

#[test]
fn json_output_is_reproducible() {
    let a = coxeter(&["report", "H3", "--json"]);
    let b = coxeter(&["report", "H3", "--json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_errors_exit_with_2() {
    assert_eq!(coxeter(&["report", "Q7"]).status.code(), Some(2));
    assert_eq!(coxeter(&["report", "I2(1)"]).status.code(), Some(2));
    assert_eq!(coxeter(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(coxeter(&["verify", "--check", "no-such-check"]).status.code(), Some(2));
}

#[test]
fn tables() {
    let h = stdout(&coxeter(&["table", "h-poly", "--csv"]));
    assert!(h.lines().any(|l| l == "B9,1,2,3,4,5,5,4,3,2,1"));
    assert_eq!(h, stdout(&coxeter(&["table", "h-poly", "--csv"])));
    let cubes = stdout(&coxeter(&["table", "cube-counts", "--csv"]));
    assert!(cubes.lines().any(|l| l.starts_with("H4,75")));
    let deg = stdout(&coxeter(&["table", "degrees", "--csv"]));
    let e6: Vec<&str> = deg.lines().find(|l| l.starts_with("E6,")).unwrap().split(',').collect();
    assert_eq!(e6[6], "4");
}

#[test]
fn verify_single_check_and_fault_injection() {
    let ok = coxeter(&["verify", "--check", "characteristic-degrees"]);
    assert!(ok.status.success());
    assert!(stdout(&ok).contains("all 1 checks passed"));
    let bad = coxeter(&["verify", "--check", "1", "--inject-fault"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("orders-and-reflections"));
}

#[test]
fn exports_parse() {
    let roots: serde_json::Value = serde_json::from_slice(&coxeter(&["export", "roots", "H3"]).stdout).unwrap();
    assert_eq!(roots["positive_roots"], 15);
    let fano: serde_json::Value = serde_json::from_slice(&coxeter(&["export", "fano"]).stdout).unwrap();
    assert_eq!(fano["blocks"].as_array().unwrap().len(), 7);
    let steiner: serde_json::Value = serde_json::from_slice(&coxeter(&["export", "steiner"]).stdout).unwrap();
    assert_eq!(steiner["blocks"].as_array().unwrap().len(), 14);
}
