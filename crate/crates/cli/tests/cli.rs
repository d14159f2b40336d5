use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_quatimm"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn quatimm");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "exit {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn matrix_doc(a: &str, b: &str, rows: &[&[[&str; 4]]]) -> String {
    serde_json::json!({
        "algebra": {"a": a, "b": b},
        "n": rows.len(),
        "entries": rows,
    })
    .to_string()
}

const Z: &str = "0";

#[test]
fn rdet_of_real_matrix() {
    let doc = matrix_doc(
        "-1",
        "1",
        &[
            &[["1", Z, Z, Z], ["2", Z, Z, Z]],
            &[["3", Z, Z, Z], ["4", Z, Z, Z]],
        ],
    );
    let v = json(&run(
        &["compute", "--input", "-", "--op", "rdet", "--anchor", "1"],
        &doc,
    ));
    assert_eq!(v["value"], serde_json::json!(["-2", "0", "0", "0"]));
    assert_eq!(v["anchor"], 1);
    assert_eq!(v["op"], "rdet");
    assert_eq!(v["char"]["type"], "sign");
}

#[test]
fn hermitian_matrix_all_immanants_agree() {
    let doc = matrix_doc(
        "-1",
        "1",
        &[
            &[["2", Z, Z, Z], ["1", Z, "1", Z]],
            &[["1", Z, "-1", Z], ["3", Z, Z, Z]],
        ],
    );
    let v = json(&run(
        &["compute", "--input", "-", "--op", "all", "--char", "sign"],
        &doc,
    ));
    assert_eq!(v["all_equal"], true);
    let values = v["values"].as_array().unwrap();
    assert_eq!(values.len(), 4);
    for entry in values {
        assert_eq!(entry["value"], serde_json::json!(["6", "0", "0", "0"]));
    }
}

#[test]
fn identity_immanant_is_dimension() {
    let one = ["1", Z, Z, Z];
    let zero = [Z, Z, Z, Z];
    let doc = matrix_doc(
        "-1",
        "-1",
        &[&[one, zero, zero], &[zero, one, zero], &[zero, zero, one]],
    );
    for op in ["rimm", "cimm"] {
        let args = [
            "compute", "--input", "-", "--op", op, "--char", "2,1", "--anchor", "2",
        ];
        let v = json(&run(&args, &doc));
        assert_eq!(v["value"], serde_json::json!(["2", "0", "0", "0"]));
        assert_eq!(
            v["char"],
            serde_json::json!({"type": "partition", "parts": [2, 1]})
        );
    }
}

#[test]
fn noncommutative_rows_differ() {
    // [[i, j], [k, 1]] in H(-1,-1)
    let doc = matrix_doc(
        "-1",
        "-1",
        &[
            &[[Z, "1", Z, Z], [Z, Z, "1", Z]],
            &[[Z, Z, Z, "1"], ["1", Z, Z, Z]],
        ],
    );
    let r1 = json(&run(
        &["compute", "--input", "-", "--op", "rdet", "--anchor", "1"],
        &doc,
    ));
    let r2 = json(&run(
        &["compute", "--input", "-", "--op", "rdet", "--anchor", "2"],
        &doc,
    ));
    // rdet_1 = a11 a22 - a12 a21 = i - jk = i - i = 0
    assert_eq!(r1["value"], serde_json::json!(["0", "0", "0", "0"]));
    // rdet_2 = a22 a11 - a21 a12 = i - kj = i + i = 2i
    assert_eq!(r2["value"], serde_json::json!(["0", "2", "0", "0"]));
}

#[test]
fn repr_of_isotropic_quaternion() {
    let doc = matrix_doc("-1", "1", &[&[["1", Z, "1", Z]]]);
    let v = json(&run(&["repr", "--input", "-", "--c", "1"], &doc));
    assert_eq!(v["blocks"], serde_json::json!([["2", "0"], ["0", "0"]]));
    assert_eq!(v["det"], "0");
    assert_eq!(v["norm"], "0");

    let v = json(&run(&["repr", "--input", "-", "--c", "-1"], &doc));
    assert_eq!(v["blocks"], serde_json::json!([["0", "0"], ["0", "2"]]));

    let out = run(&["repr", "--input", "-", "--c", "2"], &doc);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn repr_block_layout() {
    let doc = matrix_doc(
        "-1",
        "1",
        &[
            &[["1", Z, Z, Z], [Z, "1", Z, Z]],
            &[[Z, Z, "1", Z], [Z, Z, Z, "1"]],
        ],
    );
    let v = json(&run(&["repr", "--input", "-", "--c", "1"], &doc));
    let expected = serde_json::json!([
        ["1", "0", "0", "1"],
        ["0", "1", "-1", "0"],
        ["1", "0", "0", "-1"],
        ["0", "-1", "-1", "0"],
    ]);
    assert_eq!(v["blocks"], expected);
    assert!(v.get("det").is_none());
}

#[test]
fn verify_suite_passes() {
    let args = [
        "verify",
        "--suite",
        "tn-lemma",
        "--n",
        "8",
        "--algebra",
        "-1,-1",
        "--trials",
        "5",
        "--seed",
        "7",
    ];
    let v = json(&run(&args, ""));
    assert_eq!(v["passed"], true);
    assert_eq!(v["checks"], 5);
    assert_eq!(v["failures"], serde_json::json!([]));
}

#[test]
fn verify_with_explicit_characters() {
    let args = [
        "verify",
        "--suite",
        "hermitian-equality",
        "--n",
        "3",
        "--algebra",
        "-1,1",
        "--trials",
        "3",
        "--chars",
        "sign",
        "2,1",
    ];
    let v = json(&run(&args, ""));
    assert_eq!(v["passed"], true);
}

#[test]
fn unknown_suite_is_usage_error() {
    let out = run(&["verify", "--suite", "bogus"], "");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("tn-lemma"));
}

#[test]
fn malformed_inputs_exit_2() {
    let bad_entry = r#"{"algebra":{"a":"-1","b":"1"},"n":1,"entries":[[["1","1.5","0","0"]]]}"#;
    let out = run(
        &["compute", "--input", "-", "--op", "rper", "--anchor", "1"],
        bad_entry,
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("entries[0][0][1]"));

    let bad_algebra = r#"{"algebra":{"a":"0","b":"1"},"n":1,"entries":[[["1","0","0","0"]]]}"#;
    let out = run(
        &["compute", "--input", "-", "--op", "rper", "--anchor", "1"],
        bad_algebra,
    );
    assert_eq!(out.status.code(), Some(2));

    let good = matrix_doc("-1", "1", &[&[["1", Z, Z, Z]]]);
    for args in [
        &["compute", "--input", "-", "--op", "rimm"][..],
        &["compute", "--input", "-", "--op", "rimm", "--anchor", "2"],
        &[
            "compute", "--input", "-", "--op", "rimm", "--anchor", "1", "--char", "2,1",
        ],
        &[
            "compute", "--input", "-", "--op", "rdet", "--anchor", "1", "--char", "constant",
        ],
    ] {
        let out = run(args, &good);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn missing_file_exits_2() {
    let out = run(
        &["compute", "--input", "/nonexistent/m.json", "--op", "all"],
        "",
    );
    assert_eq!(out.status.code(), Some(2));
}
