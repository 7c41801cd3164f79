use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn zz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zz"))
        .args(args)
        .env_remove("ZZ_ORDER")
        .output()
        .expect("run zz")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let o = zz(&all);
    serde_json::from_str(&stdout(&o)).expect("JSON document")
}

fn temp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("zz-cli-test-{}-{name}", std::process::id()))
}

#[test]
fn cartan_compare_affine_d4() {
    let o = zz(&["cartan", "compare", "--graph", "affD4", "--order", "12"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "identity holds to q^12");
}

#[test]
fn braid_relations_a3() {
    let o = zz(&["braid", "verify", "--graph", "A3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("braid relations: all"), "{}", stdout(&o));
    let doc = json(&["braid", "verify", "--graph", "A3"]);
    let checks = doc["result"]["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["status"] == "pass"));
    let relations: Vec<&str> = checks.iter().map(|c| c["relation"].as_str().unwrap()).collect();
    for r in ["invertible", "braid", "commute"] {
        assert!(relations.contains(&r), "{r} missing");
    }
}

#[test]
fn mckay_check_binary_tetrahedral() {
    let o = zz(&["mckay", "check", "--group", "2T", "--n", "20"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("all 147 multiplicities match"), "{}", stdout(&o));
}

#[test]
fn json_envelope_and_determinism() {
    let a = zz(&["adjoint", "verify-uq", "--graph", "A2", "--json"]);
    let b = zz(&["adjoint", "verify-uq", "--graph", "A2", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    let doc: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(doc["schema"], "zz/1");
    assert_eq!(doc["command"], "adjoint verify-uq");
    assert_eq!(doc["status"], "pass");
}

#[test]
fn order_from_environment_and_flag() {
    let run = |env: Option<&str>, flag: Option<&str>| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_zz"));
        c.args(["cartan", "inverse", "--graph", "A1", "--json"]).env_remove("ZZ_ORDER");
        if let Some(e) = env {
            c.env("ZZ_ORDER", e);
        }
        if let Some(f) = flag {
            c.args(["--order", f]);
        }
        let doc: Value = serde_json::from_slice(&c.output().unwrap().stdout).unwrap();
        doc["result"]["order"].as_u64().unwrap()
    };
    assert_eq!(run(None, None), 12);
    assert_eq!(run(Some("5"), None), 5);
    assert_eq!(run(Some("5"), Some("3")), 3);
}

#[test]
fn inverse_series_of_a1() {
    let doc = json(&["cartan", "inverse", "--graph", "A1", "--order", "6"]);
    assert_eq!(doc["result"]["determinant"], "1 + q^2");
    assert_eq!(doc["result"]["matrix"][0][0], "1 - q^2 + q^4 - q^6 + O(q^7)");
}

#[test]
fn classification_examples() {
    for (g, class) in [("chain:3", "A3"), ("cycle:3", "affA2"), ("affD4", "affD4"), ("E8", "E8")] {
        let doc = json(&["graph", "classify", "--graph", g]);
        assert_eq!(doc["result"]["class"], class, "{g}");
    }
    let star = temp_path("star.json");
    std::fs::write(&star, r#"{"vertices":["c","1","2","3","4","5"],"edges":[["c","1"],["c","2"],["c","3"],["c","4"],["c","5"]]}"#)
        .unwrap();
    let doc = json(&["graph", "classify", "--graph", star.to_str().unwrap()]);
    assert_eq!(doc["result"]["kind"], "other");
    std::fs::remove_file(star).ok();
}

#[test]
fn algebra_dimensions() {
    let doc = json(&["algebra", "dims", "--graph", "D5"]);
    assert_eq!(doc["result"]["graded"]["0"], 5);
    assert_eq!(doc["result"]["graded"]["1"], 8);
    assert_eq!(doc["result"]["graded"]["2"], 5);
    let o = zz(&["algebra", "trivial-extension-check", "--graph", "D4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn module_verbs() {
    let doc = json(&["module", "indecomposables", "--graph", "A3"]);
    assert_eq!(doc["result"]["count"], 12);
    let doc = json(&["module", "decompose", "--graph", "A2", "--module", "P:a+L:b{1}+P:a{-2}"]);
    let names: Vec<&str> = doc["result"]["summands"].as_array().unwrap().iter().map(|s| s["name"].as_str().unwrap()).collect();
    assert_eq!(names.len(), 3);
    assert!(names.contains(&"L:b{1}"));
    let doc = json(&["module", "hom", "--graph", "A2", "--module", "P:a", "--to", "P:a"]);
    assert_eq!(doc["result"]["graded_hom"], "1 + q^2");
    let doc = json(&["module", "tensor", "--graph", "A3", "--bimodule", "rP:b", "--module", "P:b"]);
    assert_eq!(doc["result"]["graded_dims"], serde_json::json!({"0": 1, "2": 1}));
}

#[test]
fn adjoint_verbs() {
    let doc = json(&["adjoint", "class", "--graph", "A1", "--object", "P_a"]);
    assert_eq!(doc["result"]["class"]["l_a"], "q + q^3");
    let doc = json(&["adjoint", "act", "--graph", "A2", "--word", "E:a", "--object", "C_(-1,0)"]);
    assert_eq!(doc["result"]["class"]["l_a"], "1 + q^2");
    assert_eq!(doc["result"]["class"]["l_b"], "q");
    let o = zz(&["adjoint", "form", "--graph", "A2"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn braid_verbs() {
    let doc = json(&["braid", "apply", "--graph", "A2", "--word", "a' a", "--module", "L:b"]);
    let terms = doc["result"]["complex"]["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 1);
    assert_eq!(terms[0]["degree"], 0);
    let doc = json(&["braid", "class-action", "--graph", "A1", "--word", "a"]);
    assert_eq!(doc["result"]["images"]["h_a"][0], "q^2");
    let o = zz(&["braid", "verify", "--graph", "cycle:3", "--skew"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn out_file() {
    let path = temp_path("out.json");
    let o = zz(&["mckay", "graph", "--group", "2I", "--json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["result"]["class"], "affE8");
    std::fs::remove_file(path).ok();
}

#[test]
fn invalid_input_exits_two() {
    for args in [
        vec!["graph", "classify", "--graph", "X9"],
        vec!["graph", "roots"],
        vec!["graph", "roots", "--graph", "affE6"],
        vec!["mckay", "table", "--group", "3Z"],
        vec!["mckay", "graph", "--group", "cyclic:1"],
        vec!["module", "decompose", "--graph", "A2", "--module", "Q:a"],
        vec!["braid", "apply", "--graph", "A2", "--word", "z", "--module", "P:a"],
        vec!["braid", "verify", "--graph", "A3", "--skew"],
        vec!["cartan", "show", "--graph", "A2", "--order", "-1"],
        vec!["selftest", "--only", "17"],
    ] {
        let o = zz(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
    let doc = json(&["mckay", "table", "--group", "3Z"]);
    assert_eq!(doc["status"], "invalid-input");
}

#[test]
fn selftest_subset() {
    let o = zz(&["selftest", "--only", "1,4,16"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 3);
    assert!(out.lines().all(|l| l.contains(" PASS ")));
}
