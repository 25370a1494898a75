use samod_core::algebra::ModuleDocument;
use samod_core::fixtures::fixture;
use std::process::{Command, Output};

fn samod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_samod")).args(args).output().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn validate_fixture_exits_zero() {
    let out = samod(&["validate", "--module", "B2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn hull_json() {
    let out = samod(&["hull", "--module", "C3", "--D", "{0,2}", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(json(&out).to_string().contains("[0,1,2]"));
}

#[test]
fn missing_amalgamation_is_an_answer_not_a_violation() {
    let out = samod(&["am", "--module", "C3", "--factors", "{0,1};{0,2}", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out).to_string();
    assert!(v.contains("\"has_am\":false"), "{v}");
}

#[test]
fn pinned_counterexample_exits_one() {
    let out = samod(&["suite", "--module", "C4", "--A", "{0,3}", "--D", "{0}", "--T", "{0,1}", "--suite", "T7.7", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["result"]["violations"][0]["theorem"], "T7.7");
    assert!(v["seed"].is_null());
}

#[test]
fn pinned_pass_exits_zero() {
    let out = samod(&["suite", "--module", "C4", "--A", "{0,1,3}", "--D", "{0,1}", "--T", "{0,1}", "--suite", "T7.7"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn bad_input_exits_two() {
    for args in [
        &["validate", "--module", "NOPE(3)"][..],
        &["suite", "--suite", "X9.9"],
        &["hull", "--module", "C3", "--D", "{0,"],
        &["frobnicate"],
    ] {
        let out = samod(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn module_file_matches_fixture() {
    let dir = std::env::temp_dir();
    let good = dir.join(format!("samod-c3-{}.json", std::process::id()));
    let bad = dir.join(format!("samod-bad-{}.json", std::process::id()));
    let c3 = fixture("C3").unwrap();
    std::fs::write(&good, serde_json::to_string(&ModuleDocument::from_module(&c3)).unwrap()).unwrap();
    std::fs::write(&bad, "{\"semiring\": 1}").unwrap();
    let from_file = samod(&["submodules", "--module", good.to_str().unwrap(), "--json"]);
    let from_fixture = samod(&["submodules", "--module", "C3", "--json"]);
    assert_eq!(from_file.status.code(), Some(0));
    assert_eq!(from_file.stdout, from_fixture.stdout);
    assert_eq!(samod(&["validate", "--module", bad.to_str().unwrap()]).status.code(), Some(2));
    let _ = std::fs::remove_file(good);
    let _ = std::fs::remove_file(bad);
}
