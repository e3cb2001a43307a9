use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::{json, Value};

fn symtab(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_symtab")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn ok_json(args: &[&str]) -> Value {
    let (code, stdout) = symtab(args);
    assert_eq!(code, 0, "{args:?}");
    serde_json::from_str(&stdout).unwrap()
}

const KING: &str = r#"{"shape":[3,3,2,1],"rows":[[1,2,4],[-2,-2,6],[3,-4],[5]]}"#;
const ARRAY: &str = r#"{"top":[1,1,1,2,3,3,4,4,4,5,5],"bottom":[-1,2,-2,2,1,-1,1,1,-1,1,-2]}"#;

#[test]
fn berele_example() {
    let out = ok_json(&["insert", "--type", "c", KING, "-1"]);
    assert_eq!(
        out,
        json!({
            "tableau": {"shape": [3, 3, 1, 1], "rows": [[1, -1, 4], [-2, -4, 6], [3], [5]]},
            "step": {"kind": "deleted", "cell": [3, 2]}
        })
    );
}

#[test]
fn insert_into_empty() {
    let out = ok_json(&["insert", "--type", "a", r#"{"shape":[],"rows":[]}"#, "-3"]);
    assert_eq!(out["tableau"]["rows"], json!([[-3]]));
    assert_eq!(out["step"], json!({"kind": "added", "cell": [1, 1]}));
}

#[test]
fn exit_codes() {
    assert_eq!(symtab(&["insert", "--type", "c", r#"{"shape":[2],"rows":[[1]]}"#, "1"]).0, 2);
    assert_eq!(symtab(&["insert", "--type", "c", "not json", "1"]).0, 2);
    assert_eq!(symtab(&["insert", "--type", "c", r#"{"shape":[1,1],"rows":[[1],[-1]]}"#, "1"]).0, 3);
    assert_eq!(symtab(&["insert", "--type", "a", r#"{"shape":[2],"rows":[[2,1]]}"#, "1"]).0, 3);
    assert_eq!(symtab(&["insert", "--type", "a", r#"{"shape":[],"rows":[]}"#, "0"]).0, 2);
    assert_eq!(symtab(&["verify", "no-such-suite"]).0, 2);
    assert_eq!(symtab(&["bk", "--type", "a", "--i", "0", r#"{"shape":[1],"rows":[[1]]}"#]).0, 2);
    let mismatch = r#"{"shapes":[[],[1],[2]]}"#;
    assert_eq!(symtab(&["inverse", "--type", "c", r#"{"shape":[1],"rows":[[1]]}"#, mismatch]).0, 3);
}

#[test]
fn rsk_c_example_and_inverse() {
    let out = ok_json(&["rsk", "--type", "c", ARRAY]);
    assert_eq!(out["p"], json!({"shape": [2, 1], "rows": [[1, -2], [2]]}));
    assert_eq!(out["q"], json!({"final_shape": [2, 1], "grid": [[[1], [1, 4, 4, 5, 5], [1, 3]], [[2, 3, 4]]]}));
    let back = ok_json(&["inverse", "--type", "c", &out["p"].to_string(), &out["q"].to_string()]);
    assert_eq!(back, serde_json::from_str::<Value>(ARRAY).unwrap());
}

#[test]
fn rs_c_example_and_inverse() {
    let out = ok_json(&["rsk", "--type", "c", "[-2,2,-2,2,1,-1]"]);
    assert_eq!(out["p"], json!({"shape": [2], "rows": [[1, -1]]}));
    assert_eq!(out["q"], json!({"shapes": [[], [1], [1, 1], [2, 1], [2, 2], [2, 1], [2]]}));
    let back = ok_json(&["inverse", "--type", "c", &out["p"].to_string(), &out["q"].to_string()]);
    assert_eq!(back, json!([-2, 2, -2, 2, 1, -1]));
}

#[test]
fn empty_correspondences() {
    let out = ok_json(&["rsk", "--type", "c", "[]"]);
    assert_eq!(out, json!({"p": {"shape": [], "rows": []}, "q": {"shapes": [[]]}}));
    let out = ok_json(&["rsk", "--type", "a", r#"{"top":[],"bottom":[]}"#]);
    assert_eq!(out["q"], json!({"shape": [], "rows": []}));
}

#[test]
fn type_a_round_trips() {
    let out = ok_json(&["rsk", "--type", "a", "[3,1,2,1]"]);
    let back = ok_json(&["inverse", "--type", "a", &out["p"].to_string(), &out["q"].to_string()]);
    assert_eq!(back, json!([3, 1, 2, 1]));
    let array = r#"{"top":[1,1,2],"bottom":[1,2,1]}"#;
    let out = ok_json(&["rsk", "--type", "a", array]);
    let back = ok_json(&["inverse", "--type", "a", &out["p"].to_string(), &out["q"].to_string()]);
    assert_eq!(back, serde_json::from_str::<Value>(array).unwrap());
}

#[test]
fn knuth_verbs() {
    let out = ok_json(&["knuth", "--type", "c", "[5,3,-4,-2,-2,6,1,2,4,-1]", "[5,3,-2,-4,6,1,-1,4]"]);
    assert_eq!(out, json!({"equivalent": true, "canonical": [5, 3, -2, -4, 6, 1, -1, 4]}));
    let out = ok_json(&["knuth", "--type", "a", "[2,1,3]", "[2,3,1]"]);
    assert_eq!(out["equivalent"], json!(true));
}

#[test]
fn bk_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_symtab"))
        .args(["bk", "--type", "a", "--i", "3", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"shape":[8,7,3],"rows":[[1,1,1,2,2,2,3,4],[2,2,3,3,4,4,4],[3,3,4]]}"#)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["rows"], json!([[1, 1, 1, 2, 2, 2, 3, 3], [2, 2, 3, 3, 3, 4, 4], [4, 4, 4]]));
}

#[test]
fn bk_on_an_ssot_is_an_involution() {
    let s = r#"{"final_shape":[2,1],"grid":[[[1],[1,2,2,3,3],[2,3]],[[2]]]}"#;
    let g = ok_json(&["bk", "--type", "c", "--i", "2", "--k", "3", s]);
    let back = ok_json(&["bk", "--type", "c", "--i", "2", "--k", "3", &g.to_string()]);
    assert_eq!(back, serde_json::from_str::<Value>(s).unwrap());
}

#[test]
fn enumerate_counts() {
    assert_eq!(ok_json(&["enumerate", "ssyt", "--k", "3", "--shape", "2,1"]).as_array().unwrap().len(), 8);
    assert_eq!(ok_json(&["enumerate", "ssot", "--k", "3", "--n", "5", "--shape", "2,1"]).as_array().unwrap().len(), 24);
    assert_eq!(ok_json(&["enumerate", "kt", "--k", "2", "--shape", "1,1"]).as_array().unwrap().len(), 5);
    assert_eq!(symtab(&["enumerate", "ot", "--k", "2", "--shape", "1"]).0, 2);
}

#[test]
fn polynomials() {
    let sp = ok_json(&["poly", "sp", "--k", "1", "--shape", "1"]);
    assert_eq!(sp, json!([{"coeff": 1, "x": {"1": -1}, "y": {}}, {"coeff": 1, "x": {"1": 1}, "y": {}}]));
    let s21 = ok_json(&["poly", "schur", "--k", "3", "--shape", "2,1"]);
    assert_eq!(s21.as_array().unwrap().len(), 7);
}

#[test]
fn verify_suites() {
    assert_eq!(ok_json(&["verify", "cauchy", "--k", "2", "--degree", "4"])["passed"], json!(true));
    assert_eq!(ok_json(&["verify", "bijection-c", "--k", "2", "--n", "5"])["passed"], json!(true));
    assert_eq!(ok_json(&["verify", "ssot-symmetry", "--k", "3", "--shape", "2,1", "--n", "5"])["passed"], json!(true));
}

#[test]
fn ascii_output() {
    let (code, out) = symtab(&["--format", "ascii", "insert", "--type", "c", KING, "-1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "1 1\u{305} 4\n2\u{305} 4\u{305} 6\n3\n5\ndeleted (3,2)\n");
}

#[test]
fn output_is_deterministic() {
    let a = symtab(&["enumerate", "ssot", "--k", "2", "--n", "4", "--shape", "2"]);
    let b = symtab(&["enumerate", "ssot", "--k", "2", "--n", "4", "--shape", "2"]);
    assert_eq!(a, b);
}
