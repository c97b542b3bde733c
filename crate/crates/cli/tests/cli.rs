use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn seccat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_seccat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn scratch(name: &str, bytes: &[u8]) -> String {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(name);
    std::fs::write(&path, bytes).unwrap();
    path.display().to_string()
}

#[test]
fn group_sigma_of_v4() {
    let v = json(&seccat(&[
        "group",
        "sigma",
        "--group",
        &data("v4.json"),
        "--variant",
        "proper",
    ]));
    assert_eq!(v["value"], 3);
    assert_eq!(v["certificate"].as_array().unwrap().len(), 3);
    let v = json(&seccat(&["group", "sigma", "--group", &data("s3.json")]));
    assert_eq!(v["value"], 4);
}

#[test]
fn infinity_is_a_string_with_an_obstruction() {
    let v = json(&seccat(&["group", "sigma", "--group", "corpus:Z6"]));
    assert_eq!(v["value"], "infinity");
    assert_eq!(v["uncovered"], 1);
    let v = json(&seccat(&["group", "sec", "--hom", &data("q_z4_z2.json")]));
    assert_eq!(v["value"], "infinity");
    assert!(v["uncovered"].is_number());
}

#[test]
fn json_output_is_byte_identical() {
    let args = [
        "laws",
        "--suite",
        "sectional",
        "--seed",
        "3",
        "--max-size",
        "16",
        "--cases",
        "40",
    ];
    let a = seccat(&args);
    let b = seccat(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let args = [
        "sec",
        "--cat",
        &data("retract.json"),
        "--top",
        "trivial",
        "--morphism",
        "s",
    ];
    assert_eq!(seccat(&args).stdout, seccat(&args).stdout);
}

#[test]
fn law_suite_passes() {
    let v = json(&seccat(&["laws", "--suite", "all", "--seed", "7", "--max-size", "16"]));
    assert_eq!(v["violations"], 0);
    assert!(v["laws"].as_array().unwrap().len() > 20);
}

#[test]
fn top_check_on_two_objects() {
    let v = json(&seccat(&[
        "top",
        "check",
        "--cat",
        &data("two.json"),
        "--top",
        "trivial",
        "--axioms",
        "T1,T2,T3",
    ]));
    assert_eq!(v["all_pass"], true);
    let v = json(&seccat(&[
        "top",
        "check",
        "--cat",
        &data("two.json"),
        "--top",
        &format!("rule:{}", data("two_rule.json")),
    ]));
    assert_eq!(v["all_pass"], false);
    assert_eq!(v["axioms"][0]["counterexample"]["object"], "A");
}

#[test]
fn sieves_from_the_command_line() {
    let v = json(&seccat(&[
        "sieve",
        "gen",
        "--cat",
        &data("retract.json"),
        "--target",
        "X",
        "--gens",
        "s",
    ]));
    assert_eq!(v["members"], serde_json::json!(["s", "e"]));
    let v = json(&seccat(&[
        "sieve",
        "pullback",
        "--cat",
        &data("retract.json"),
        "--along",
        "s",
        "--sieve",
        "s,e",
    ]));
    assert_eq!(v["members"], serde_json::json!(["1Y", "p"]));
}

#[test]
fn sec_certificates_replay() {
    for (m, expected) in [("p", Value::from(1)), ("s", Value::from("infinity"))] {
        let out = seccat(&[
            "sec",
            "--cat",
            &data("retract.json"),
            "--top",
            "trivial",
            "--morphism",
            m,
        ]);
        let v = json(&out);
        assert_eq!(v["value"], expected);
        let cert = scratch(&format!("sec_{m}.json"), &out.stdout);
        let args = [
            "sec",
            "--cat",
            &data("retract.json"),
            "--top",
            "trivial",
            "--morphism",
            m,
            "--verify",
            &cert,
        ];
        assert_eq!(json(&seccat(&args))["verified"], true);
    }
}

#[test]
fn instance_certificates_replay() {
    let cases: Vec<Vec<String>> = vec![
        vec!["group".into(), "sigma".into(), "--group".into(), data("v4.json")],
        vec!["group".into(), "sigma".into(), "--group".into(), "corpus:Z8".into()],
        vec![
            "group".into(),
            "sigma".into(),
            "--group".into(),
            "corpus:Q8".into(),
            "--variant".into(),
            "cyclic".into(),
        ],
        vec!["group".into(), "sec".into(), "--hom".into(), data("p_v4_z2.json")],
        vec![
            "group".into(),
            "sec".into(),
            "--hom".into(),
            data("q_z4_z2.json"),
            "--variant".into(),
            "proper".into(),
        ],
        vec!["ring".into(), "sigma".into(), "--ring".into(), "corpus:F2xF2".into()],
        vec!["ring".into(), "sigma".into(), "--ring".into(), "corpus:Z4".into()],
        vec!["graph".into(), "sec".into(), "--hom".into(), data("double_cover.json")],
        vec![
            "graph".into(),
            "sec".into(),
            "--hom".into(),
            data("double_cover.json"),
            "--mono".into(),
        ],
    ];
    for (i, args) in cases.iter().enumerate() {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let out = seccat(&args);
        json(&out);
        let cert = scratch(&format!("cert_{i}.json"), &out.stdout);
        let mut with = args.clone();
        with.extend(["--verify", &cert]);
        assert_eq!(json(&seccat(&with))["verified"], true, "{args:?}");
    }
}

#[test]
fn tampered_certificates_are_rejected() {
    let out = seccat(&["group", "sigma", "--group", &data("v4.json")]);
    let mut v = json(&out);
    v["value"] = 2.into();
    v["certificate"].as_array_mut().unwrap().pop();
    let cert = scratch("bad_sigma.json", v.to_string().as_bytes());
    let out = seccat(&["group", "sigma", "--group", &data("v4.json"), "--verify", &cert]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("certificate rejected"));

    let out = seccat(&["graph", "sec", "--hom", &data("double_cover.json")]);
    let mut v = json(&out);
    v["certificate"][0]["section"][0] = 3.into();
    let cert = scratch("bad_graph.json", v.to_string().as_bytes());
    let out = seccat(&["graph", "sec", "--hom", &data("double_cover.json"), "--verify", &cert]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn ring_and_number_commands() {
    let v = json(&seccat(&["ring", "nil", "--ring", "corpus:Z8", "--set", "2"]));
    assert_eq!(v["value"], 3);
    let v = json(&seccat(&["ring", "nil", "--ring", "corpus:Z4", "--set", "1"]));
    assert_eq!(v["value"], "infinity");
    let v = json(&seccat(&["set", "goldbach", "--max", "1000"]));
    assert_eq!(v["exceptions"], serde_json::json!([]));
    let v = json(&seccat(&["set", "twins", "--max", "20"]));
    assert_eq!(v["obstruction"], 17);
    assert_eq!(v["value"], "infinity");
}

#[test]
fn exit_codes() {
    assert_eq!(
        seccat(&["cat", "validate", "--cat", &data("two.json")]).status.code(),
        Some(0)
    );
    assert_eq!(seccat(&["cat", "validate", "--bogus"]).status.code(), Some(2));
    assert_eq!(seccat(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        seccat(&[
            "sec",
            "--cat",
            &data("two.json"),
            "--top",
            "nonsense",
            "--morphism",
            "f"
        ])
        .status
        .code(),
        Some(2)
    );

    let out = seccat(&["cat", "validate", "--cat", &data("broken.json")]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("broken.json:5:"), "{err}");

    let out = seccat(&["sec", "--cat", &data("two.json"), "--morphism", "nope"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert_eq!(seccat(&["set", "goldbach", "--max", "4"]).status.code(), Some(1));
}

#[test]
fn guardrail_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_seccat"))
        .args(["cat", "validate", "--cat", &data("retract.json")])
        .env("SECCAT_MAX_MORPHISMS", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = seccat(&[
        "cat",
        "validate",
        "--cat",
        &data("retract.json"),
        "--max-morphisms",
        "5",
    ]);
    assert!(out.status.success());
}

#[test]
fn human_format() {
    let out = seccat(&["--format", "human", "group", "sigma", "--group", &data("v4.json")]);
    assert_eq!(
        String::from_utf8_lossy(&out.stdout).trim(),
        "σ = 3 for a group of order 4"
    );
    let out = seccat(&["group", "sec", "--hom", &data("q_z4_z2.json"), "--format", "human"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("sec = infinity"));
}
