use std::process::{Command, Output};

fn assoc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_assoc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = assoc(&all);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn tables_reproduce_reference_rows() {
    let out = assoc(&["tables"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for line in [
        "β^6_d: 1 9 16 9 1",
        "f(6, d-1): 1 9 21 14 1",
        "β^7_d: 1 14 35 35 14 1",
        "f(7, d-1): 1 14 56 84 42 1",
        "β^8_d: 1 20 64 90 64 20 1",
        "f(8, d-1): 1 20 120 300 330 132 1",
        "β^9_d: 1 27 105 189 189 105 27 1",
        "f(9, d-1): 1 27 225 825 1485 1287 429 1",
    ] {
        assert!(text.lines().any(|l| l == line), "missing {line:?}");
    }
}

#[test]
fn dissections_by_support() {
    let out = assoc(&["dissections", "6", "3", "--by-support"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "3:2 4:12\n");
    let v = json(&["dissections", "6", "3", "--by-support", "--trees"]);
    assert_eq!(v["by_support"], serde_json::json!({"3": 2, "4": 12}));
    assert_eq!(v["trees"], 12);
    assert_eq!(json(&["dissections", "5", "1"])["count"], 5);
}

#[test]
fn betti_all_methods_agree() {
    let out = assoc(&["betti", "6", "--method", "all"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("β^6_d: 1 9 16 9 1\n"));
    assert!(text.contains("hochster = closed = recursion"));
    let v = json(&["betti", "9", "--method", "recursion"]);
    assert_eq!(
        v["table"]["totals"],
        serde_json::json!([1, 27, 105, 189, 189, 105, 27, 1])
    );
}

#[test]
fn fvector_agrees() {
    let v = json(&["fvector", "8"]);
    assert_eq!(v["enumerated"], serde_json::json!([1, 20, 120, 300, 330, 132, 1]));
    assert_eq!(v["agree"], true);
}

#[test]
fn verify_resolution_report() {
    let v = json(&["verify-resolution", "6", "--field", "gf2"]);
    assert_eq!(v["n"], 6);
    assert_eq!(v["field"], "gf2");
    assert_eq!(v["checked"], 64);
    assert_eq!(v["failures"], serde_json::json!([]));
    assert_eq!(v["minimal"], false);
    assert!(!v["witnesses"].as_array().unwrap().is_empty());

    let out = assoc(&["verify-resolution", "5", "--field", "rational"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("checking 32 restrictions"));
    assert!(!stdout(&out).contains("checking"));
}

#[test]
fn cap_needs_override() {
    assert_eq!(assoc(&["verify-resolution", "9"]).status.code(), Some(2));
}

#[test]
fn minimality_lists() {
    assert_eq!(json(&["minimality", "5"])["minimal"], true);
    let v = json(&["minimality", "6"]);
    assert_eq!(v["minimal"], false);
    assert!(v["witnesses"]
        .as_array()
        .unwrap()
        .contains(&serde_json::json!({"lower": "{13,46}", "upper": "{13,36,46}", "label": [1, 3, 4, 6]})));
}

#[test]
fn morse_report() {
    let v = json(&["morse", "6", "--extend"]);
    assert_eq!(v["critical"], serde_json::json!([9, 16, 9, 1]));
    assert_eq!(v["validation"]["valid"], true);
    assert_eq!(v["extension"]["attains_betti"], true);
    let v = json(&["morse", "7"]);
    assert_eq!(v["n7_extension"]["edges"], 35);
    assert_eq!(v["formulas"]["critical_edges"], 35);
}

#[test]
fn syt_counts_and_lists() {
    let out = assoc(&["syt", "--family", "syzygy", "--n", "6", "--d", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("16 standard tableaux"));
    let v = json(&["syt", "--shape", "2,2,1", "--enumerate"]);
    assert_eq!(v["count"], 5);
    assert_eq!(v["tableaux"][0], serde_json::json!([[1, 2], [3, 4], [5]]));
    assert_eq!(assoc(&["syt", "--shape", "1,2"]).status.code(), Some(2));
    assert_eq!(assoc(&["syt"]).status.code(), Some(2));
}

#[test]
fn involution_verifies() {
    let v = json(&["involution", "8", "3", "--verify"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["check"]["fixed"], 90);
    let out = assoc(&["involution", "7", "2"]);
    assert!(stdout(&out).contains("1,2,3/4,5,6/7/8 -> 1,2,3,8/4,5,6,9/7 (d=3)"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(assoc(&["betti", "3"]).status.code(), Some(2));
    assert_eq!(assoc(&["dissections", "6", "4"]).status.code(), Some(2));
    assert_eq!(assoc(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let a = assoc(&["--threads", "3", "--json", "verify-resolution", "7"]);
    let b = assoc(&["--json", "verify-resolution", "7"]);
    assert_eq!(a.stdout, b.stdout);
}
