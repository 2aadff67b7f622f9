use std::process::{Command, Output};

use serde_json::Value;

fn gqt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gqt")).args(args).env_remove("GQT_GUARD_OVERRIDE").output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn success_envelope() {
    let out = gqt(&["kernel", "enumerate", "--p", "3", "--deterministic"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["tool"], "gqt");
    assert!(v.get("generated_at_unix").is_none());
    assert_eq!(v["config"]["command"], "kernel enumerate");
    assert_eq!(v["result"]["points"].as_array().unwrap().len(), 280);
    assert_eq!(v["result"]["lines"].as_array().unwrap().len(), 112);

    let stamped = json(&gqt(&["theory", "--i", "1", "--m", "1", "--pp", "3"]));
    assert!(stamped["generated_at_unix"].is_u64());
}

#[test]
fn domain_errors_exit_one_with_json() {
    let out = gqt(&["sdc", "--p", "2", "--message", "11"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"]["code"], "Char2MessageUnsupported");

    let out = gqt(&["teleport", "--p", "2", "--alpha", "1", "--beta", "0", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"]["code"], "Char2NotSupported");

    let out = gqt(&["field", "--p", "4", "--x", "1", "--op", "inv"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(json(&out)["error"]["code"].is_string());
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["frobnicate"][..],
        &["teleport", "--p", "3", "--alpha", "1", "--beta", "1"],
        &["sdc", "--p", "3", "--message", "01", "--format", "csv"],
        &["kernel", "enumerate", "--p", "2", "--format", "xml"],
    ] {
        let out = gqt(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn guard_and_override() {
    let args = ["kernel", "enumerate", "--p", "2", "--dim", "5", "--deterministic"];
    let out = gqt(&args);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"]["code"], "TooLarge");

    let out = Command::new(env!("CARGO_BIN_EXE_gqt")).args(args).env("GQT_GUARD_OVERRIDE", "1").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["config"]["guard_override"], true);
    assert!(!v["result"]["points"].as_array().unwrap().is_empty());

    let flagged = gqt(&[&args[..], &["--guard-override"]].concat());
    assert_eq!(flagged.status.code(), Some(0));
    assert_eq!(flagged.stdout, out.stdout);
}

#[test]
fn csv_and_out_file() {
    let dir = std::env::temp_dir().join(format!("gqt-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("h34.csv");
    let out = gqt(&["kernel", "enumerate", "--p", "2", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("#points,45"));
    assert_eq!(text.lines().filter(|l| l.starts_with("point,")).count(), 45);
    assert_eq!(text.lines().filter(|l| l.starts_with("line,")).count(), 27);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn deterministic_runs_are_identical() {
    let args = ["geocode", "roundtrip", "--p", "2", "--seed", "3", "--trials", "30", "--deterministic"];
    let a = gqt(&args);
    let b = gqt(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn encode_then_decode() {
    let enc = gqt(&["geocode", "encode", "--p", "3", "--seed", "7", "--state", "1,0,0,t", "--deterministic"]);
    assert_eq!(enc.status.code(), Some(0));
    let enc = json(&enc);
    let hex = enc["result"]["transmit"]["hex"].as_str().unwrap();
    let dec = gqt(&["geocode", "decode", "--p", "3", "--seed", "7", "--hex", hex, "--deterministic"]);
    assert_eq!(dec.status.code(), Some(0));
    assert_eq!(json(&dec)["result"]["decoded"], serde_json::json!(["1", "0", "0", "t"]));

    let bad = gqt(&["geocode", "encode", "--p", "3", "--seed", "7", "--state", "1,t,0,2"]);
    assert_eq!(bad.status.code(), Some(1));
    assert_eq!(json(&bad)["error"]["code"], "SelfOrthogonalState");
}
