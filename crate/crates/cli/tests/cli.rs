use std::process::{Command, Output};

use serde_json::Value;

const EXAMPLE_F: &str = "1/(x^3*(x+2)^3*(x+3)*(x^2+1)*(x^2+4*x+5)^2)";

fn dres(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dres"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = dres(&all);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_str(&stdout(&out)).unwrap()
}

#[test]
fn summable_telescoper() {
    let out = dres(&["summable", "1/(x*(x+1))"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "summable\n");
    let out = dres(&["summable", "1/x"]);
    assert_eq!(stdout(&out), "not summable\n");
}

#[test]
fn summable_certificate_json() {
    let v = json(&["summable", "--certificate", "1/(x*(x+1))"]);
    assert_eq!(v["summable"], true);
    assert_eq!(v["certificate"]["num"], serde_json::json!(["-1/1"]));
    assert_eq!(v["certificate"]["den"], serde_json::json!(["0/1", "1/1"]));
}

#[test]
fn shift_set_of_worked_denominator() {
    let out = dres(&["shift-set", "(x^2+1)*(x+3)*(x^2+4*x+5)*(x+2)*x"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1 2 3\n");
    assert_eq!(
        json(&["shift-set", "x^2+1"])["shifts"],
        serde_json::json!([])
    );
}

#[test]
fn dres_of_simple_pole() {
    let out = dres(&["dres", "1/x"]);
    assert_eq!(stdout(&out), "k=1 B=[0, 1] D=[1]\n");
    let v = json(&["dres", "1/x"]);
    assert_eq!(
        v,
        serde_json::json!({"pairs": [{"k": 1, "B": ["0/1", "1/1"], "D": ["1/1"]}]})
    );
    let out = dres(&["dres", "-1/x"]);
    assert_eq!(stdout(&out), "k=1 B=[0, 1] D=[-1]\n");
}

#[test]
fn dres_of_worked_example() {
    let v = json(&["dres", EXAMPLE_F]);
    let pair = &v["pairs"][0];
    assert_eq!(pair["B"], serde_json::json!(["15/1", "17/1", "7/1", "1/1"]));
    assert_eq!(
        pair["D"],
        serde_json::json!(["-1321/80000", "33/40000", "59/16000"])
    );
    let per_order = json(&["dres", "--per-order", EXAMPLE_F]);
    assert_eq!(per_order["pairs"][0], v["pairs"][0]);
    assert_eq!(v["pairs"].as_array().unwrap().len(), 3);
}

#[test]
fn polynomial_parts_are_ignored() {
    assert_eq!(json(&["dres", "x^3 + 1/x"]), json(&["dres", "1/x"]));
    assert_eq!(json(&["dres", "x - x"]), serde_json::json!({"pairs": []}));
}

#[test]
fn exit_codes() {
    assert_eq!(dres(&["dres", "2x"]).status.code(), Some(1));
    assert_eq!(dres(&["dres", "1/(x-x)"]).status.code(), Some(1));
    assert_eq!(dres(&[]).status.code(), Some(1));
    assert_eq!(dres(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(dres(&["reduce", "1/x^2"]).status.code(), Some(2));
    assert_eq!(dres(&["shift-set", "1/x"]).status.code(), Some(2));
    assert_eq!(dres(&["mult-relations", "0"]).status.code(), Some(2));
    assert_eq!(dres(&["--help"]).status.code(), Some(0));
}

#[test]
fn parse_errors_report_offset() {
    let out = dres(&["dres", "1/(x+1"]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("at byte 6"), "{err}");
}

#[test]
fn quiet_prints_nothing() {
    let out = dres(&["--quiet", "summable", "1/x"]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
}

#[test]
fn reduce_certificate_identity() {
    let out = dres(&["reduce", "--certificate", "--pretty", "x^2 + 1/x - 1/(x+3)"]);
    let text = stdout(&out);
    assert!(text.starts_with("reduced=0\n"), "{text}");
    let v = json(&["reduce", "--certificate", "1/x + 1/(x+2)"]);
    assert_eq!(v["reduced"]["num"], serde_json::json!(["2/1"]));
    // both poles move to the leftmost point of the orbit
    assert_eq!(v["reduced"]["den"], serde_json::json!(["2/1", "1/1"]));
}

#[test]
fn hermite_layers() {
    let out = dres(&["hermite", "--pretty", "1/(x^2*(x+1))"]);
    assert_eq!(stdout(&out), "k=1 f=(-1)/(x^2 + x)\nk=2 f=(1)/(x)\n");
}

#[test]
fn vspace_and_alias() {
    let v = json(&["vspace", "1/x", "1/(x+1)"]);
    assert_eq!(v["dimension"], 1);
    assert_eq!(v["basis"], serde_json::json!([["1/1", "-1/1"]]));
    assert_eq!(json(&["block-diagonal", "1/x", "1/(x+1)"]), v);
}

#[test]
fn dres_multi_common_denominator() {
    let v = json(&["dres-multi", "1/x", "1/(x+3)"]);
    assert_eq!(v["B"], serde_json::json!(["3/1", "1/1"]));
    assert_eq!(v["D"], serde_json::json!([[["1/1"]], [["1/1"]]]));
}

#[test]
fn multiplicative_relations() {
    let v = json(&["mult-relations", "x", "2*x"]);
    assert_eq!(v["tilde_basis"], serde_json::json!([["1", "-1"]]));
    assert_eq!(v["gammas"], serde_json::json!(["1/2"]));
    assert_eq!(v["basis"], serde_json::json!([]));
    let v = json(&["mult-relations", "x", "2*x", "4*x"]);
    assert_eq!(v["basis"], serde_json::json!([["1", "-2", "1"]]));
}

#[test]
fn oracle_spec_file() {
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli_oracle_spec.txt");
    std::fs::write(&path, "# two orbits\n0 1 1\n3 1 -1\n1/2 2 7/3\n").unwrap();
    let out = dres(&["oracle", path.to_str().unwrap()]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(stdout(&out), "orbit=1/2 k=2 residue=7/3\nmatch\n");
    std::fs::write(&path, "0 1 0\n").unwrap();
    assert_eq!(
        dres(&["oracle", path.to_str().unwrap()]).status.code(),
        Some(1)
    );
}
