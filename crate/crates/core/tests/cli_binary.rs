//! Runs the `multischur` binary end to end.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use multischur::exactalg::{parse_scalar, Scalar};
use multischur::expansions::SymFunc;
use multischur::shapes::Partition;
use serde_json::{json, Value};

fn run_with(args: &[&str], stdin: &str, envs: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_multischur"));
    cmd.args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    for (k, v) in envs {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn run(args: &[&str], stdin: &str) -> Output {
    run_with(args, stdin, &[])
}

fn body(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn multischur_request() {
    let req = r#"{"command":"multischur","λ":[1,1],"bx":{"prefix":[["x1","x2"],["x1","x2","t1"]],"tail":{"kind":"empty"}}}"#;
    let out = run(&[], req);
    assert!(out.status.success());
    let s: Scalar = serde_json::from_value(body(&out)).unwrap();
    assert_eq!(s, parse_scalar("x1*x2 + t1*x1 + t1*x2").unwrap());
}

#[test]
fn expand_request() {
    let out = run(&[], r#"{"command":"expand","λ":[2,1],"basis":"refined","t":["t1","t2"]}"#);
    assert!(out.status.success());
    let f: SymFunc = serde_json::from_value(body(&out)).unwrap();
    let sf = |v: Vec<usize>| SymFunc::schur(Partition::new(v).unwrap());
    assert_eq!(f, sf(vec![2, 1]).add(&sf(vec![2]).scale(&Scalar::var("t1"))));
}

#[test]
fn verify_request_and_flags() {
    let out = run(&[], r#"{"command":"verify","theorem":"orthonormality","maxWeight":4}"#);
    assert!(out.status.success());
    let b = body(&out);
    assert_eq!(b["passed"], json!(true));
    assert_eq!(b["parameters"]["maxWeight"], json!(4));
    let n4 = b["cases"].as_u64().unwrap();
    assert!(n4 > 0);

    let out = run(&["--command", "verify", "--max-weight", "2"], r#"{"theorem":"orthonormality"}"#);
    let b = body(&out);
    assert!(b["cases"].as_u64().unwrap() < n4);

    let out = run(&["--command", "verify", "--seed", "11"], r#"{"theorem":"ring-axioms","cases":5}"#);
    assert!(out.status.success());
    assert_eq!(body(&out)["parameters"]["seed"], json!(11));
}

#[test]
fn input_file_and_thread_variable() {
    let dir = std::env::temp_dir().join(format!("multischur-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("req.json");
    let req = r#"{"command":"expand","λ":[2,2],"basis":"grothendieck","t":{"kind":"beta"},"truncation":5}"#;
    std::fs::write(&path, req).unwrap();
    let one = run_with(&["--input", path.to_str().unwrap()], "", &[("MULTISCHUR_THREADS", "1")]);
    let many = run_with(&[], req, &[("MULTISCHUR_THREADS", "4")]);
    assert!(one.status.success() && many.status.success());
    assert_eq!(one.stdout, many.stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn responses_are_byte_identical() {
    let req = r#"{"command":"skew","λ":[2,1],"μ":[1],"bx":{"tail":{"kind":"refined","t":{"kind":"symbolic","stem":"t"}}},"bp":{"tail":{"kind":"refined","t":{"kind":"symbolic","stem":"t"}}}}"#;
    let a = run(&[], req);
    let b = run(&[], req);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    // and the output re-parses to the same value
    let f: SymFunc = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(serde_json::to_value(&f).unwrap(), body(&a));
}

#[test]
fn errors_are_objects_with_nonzero_exit() {
    for (req, kind) in [
        ("not json", "usage"),
        (r#"{"command":"expand","λ":[1],"basis":"refined","t":["beta"]}"#, "usage"),
        (r#"{"command":"eval"}"#, "usage"),
        (r#"{"command":"verify","theorem":"orthonormality","maxWeight":"four"}"#, "usage"),
        (
            r#"{"command":"expand","λ":[1],"basis":"stable-dual-in-G","truncation":2,"bx":{"tail":{"kind":"refined","t":{"kind":"symbolic","stem":"s"}}},"t":{"kind":"symbolic","stem":"t"}}"#,
            "stability",
        ),
    ] {
        let out = run(&[], req);
        assert!(!out.status.success(), "{req}");
        let b = body(&out);
        assert_eq!(b["error"]["kind"], json!(kind), "{req}");
        assert!(b["error"]["operation"].is_string());
        assert!(b["error"]["message"].is_string());
    }
}
