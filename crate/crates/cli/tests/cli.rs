use std::process::{Command, Output};

use serde_json::Value;

fn spo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spo")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = spo(args);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

#[test]
fn text_examples() {
    assert_eq!(stdout(&["modrule", "--m", "1", "--mu", "2,2,2,2"]), "i=1 tau=-");
    assert_eq!(stdout(&["modrule", "--m", "1", "--mu", "2,2,2,2", "--method", "border"]), "i=1 tau=-");
    assert_eq!(stdout(&["modrule", "--m", "0", "--mu", "1,1"]), "i=infinity");
    assert_eq!(stdout(&["zmod", "hilbert", "--m", "1", "--n", "1", "--deg", "4"]), "1 3 5 7 9");
    assert_eq!(stdout(&["zmod", "hilbert", "--m", "1", "--n", "2", "--deg", "3", "--closed"]), "1 6 19 44");
    assert_eq!(stdout(&["char", "--group", "so_odd", "--m", "1", "--lambda", "1"]), "x^1 + 1 + x^-1");
    assert_eq!(stdout(&["char", "--group", "spo", "--m", "1", "--lambda", "1"]), "x^1 + 1 + x^-1");
    assert_eq!(stdout(&["zmod", "weight", "--m", "1", "--weight", "2,1"]), "extracted=15 product=15");
    assert_eq!(stdout(&["tor", "--m", "1", "--lambda=-", "--max-i", "1"]), "Tor_0 = s(-)\nTor_1 = s(2,2,2,2)");
    assert_eq!(stdout(&["tor", "--m", "0", "--variant", "s22ev", "--max-i", "1"]), "Tor_0 = s(-)\nTor_1 = s(2,2)");
}

#[test]
fn json_output() {
    let v: Value =
        serde_json::from_str(&stdout(&["--json", "zmod", "hilbert", "--m", "1", "--n", "2", "--deg", "3"])).unwrap();
    assert_eq!(v["schema"], "1");
    assert_eq!(v["series"], serde_json::json!([1, 6, 19, 44]));
    let v: Value = serde_json::from_str(&stdout(&["modrule", "--json", "--m", "1", "--mu", "2,2,2,1"])).unwrap();
    assert_eq!((v["i"].as_u64(), v["tau"].as_str()), (Some(1), Some("1")));
    let v: Value = serde_json::from_str(&stdout(&["--json", "char", "--m", "1", "--lambda", "1"])).unwrap();
    assert_eq!(v["dimension"], 3);
    assert_eq!(v["terms"][0]["exp"], serde_json::json!([1]));
}

#[test]
fn verify_reports() {
    let text = stdout(&["verify", "linkage"]);
    assert!(text.starts_with("PASS 9. linkage"), "{text}");
    let v: Value = serde_json::from_str(&stdout(&[
        "--json",
        "--jobs",
        "2",
        "verify",
        "commutators",
        "--m",
        "1",
        "--n",
        "1",
        "--deg",
        "2",
    ]))
    .unwrap();
    assert_eq!(v["status"], "pass");
    assert_eq!(v["suites"][0]["failures"], serde_json::json!([]));
}

#[test]
fn deterministic() {
    let args = ["--json", "verify", "tor1"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn exit_codes() {
    assert_eq!(spo(&["verify", "nope"]).status.code(), Some(2));
    assert_eq!(spo(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(spo(&["tor", "--m", "1", "--lambda", "2,2"]).status.code(), Some(2));
    assert_eq!(spo(&["modrule", "--m", "1", "--mu", "2,x"]).status.code(), Some(2));
    assert_eq!(spo(&["verify", "linkage", "--m", "1", "--n", "1"]).status.code(), Some(2));
}
