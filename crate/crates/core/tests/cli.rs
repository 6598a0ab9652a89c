use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_nsgff");

fn nsgff(args: &[&str]) -> (i32, String) {
    let out = Command::new(BIN)
        .args(args)
        .env_remove("NSGFF_THREADS")
        .output()
        .unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn validator() -> jsonschema::Validator {
    let schema: Value = serde_json::from_str(nsgff::cli::SCHEMA).unwrap();
    jsonschema::validator_for(&schema).unwrap()
}

fn check(doc: &str) -> Value {
    let v: Value = serde_json::from_str(doc).unwrap_or_else(|e| panic!("{e}: {doc}"));
    let errors: Vec<String> = validator().iter_errors(&v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}\n{doc}");
    v
}

#[test]
fn every_command_matches_the_schema() {
    let cases: &[(&[&str], i32)] = &[
        (&["info", "7,8,11,17,20"], 0),
        (&["info", "1"], 0),
        (&["info", "2,3"], 0),
        (&["info", "4,6"], 2),
        (&["info", "0,3"], 2),
        (&["info", ""], 2),
        (&["ideal", "5,6,13,14", "(H:C)*C"], 0),
        (&["ideal", "5,6,13,14", "H:(H:C)"], 0),
        (&["ideal", "5,6,13,14", "{-3,2}*N"], 0),
        (&["ideal", "5,6,13,14", "(H:"], 2),
        (&["rohrbach", "6"], 0),
        (&["rohrbach", "20", "--table"], 0),
        (&["rohrbach", "12", "--budget", "50"], 3),
        (&["rohrbach", "0"], 2),
        (&["verify", "routes", "--max-genus", "10"], 0),
        (&["verify", "interval", "--max-genus", "10"], 0),
        (&["verify", "thm41", "--max-genus", "10", "--sample", "5", "--ideals", "5"], 0),
        (&["verify", "bidual", "--max-genus", "10", "--sample", "5", "--ideals", "20"], 0),
        (&["verify", "type3", "--max-m", "1"], 0),
        (&["verify", "bounds", "--max-genus", "41"], 2),
        (&["explore", "3", "--max-genus", "12"], 0),
        (&["explore", "1", "--max-genus", "6"], 0),
        (&["frobnicate"], 2),
    ];
    for (args, code) in cases {
        let (c, out) = nsgff(args);
        assert_eq!(c, *code, "{args:?}: {out}");
        let v = check(&out);
        if *code == 2 {
            assert!(v["error"]["kind"].is_string());
        }
    }
}

#[test]
fn stdin_batch() {
    let mut child = Command::new(BIN)
        .args(["info", "--stdin-batch"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"5,6,13,14\n9,10,11,12,15\n13,14,15,16,17,18,21,23\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v = check(std::str::from_utf8(&out.stdout).unwrap());
    let rows = v["result"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r["flags"]["ffg"] == true));
}

#[test]
fn output_is_deterministic_apart_from_timing() {
    let strip = |s: String| {
        let mut v: Value = serde_json::from_str(&s).unwrap();
        v.as_object_mut().unwrap().remove("timing_ms");
        v
    };
    for args in [
        &["info", "9,10,11,12,15"][..],
        &["verify", "thm41", "--max-genus", "12", "--sample", "10", "--ideals", "10", "--seed", "7"],
        &["rohrbach", "9"],
    ] {
        let a = strip(nsgff(args).1);
        let b = strip(nsgff(args).1);
        assert_eq!(a, b, "{args:?}");
    }
}

#[test]
fn thread_variable() {
    let out = Command::new(BIN)
        .args(["info", "3,4,5"])
        .env("NSGFF_THREADS", "nope")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(BIN)
        .args(["verify", "routes", "--max-genus", "12"])
        .env("NSGFF_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn pretty_output_is_plain_text() {
    let (code, out) = nsgff(&["--pretty", "rohrbach", "4", "--table"]);
    assert_eq!(code, 0);
    assert!(serde_json::from_str::<Value>(&out).is_err());
    assert!(out.lines().any(|l| l.starts_with("result.value") && l.trim_end().ends_with("9")));
}

#[test]
fn explore_type_one_note() {
    let (_, out) = nsgff(&["explore", "1", "--max-genus", "8"]);
    let v = check(&out);
    assert_eq!(v["result"]["multiplicities"], serde_json::json!([]));
    assert!(v["result"]["note"].as_str().unwrap().contains("full monoid"));
}
