use std::process::Command;

use multikoszul::cli::{run, CORPUS};
use multikoszul::presentation::BigradedTable;
use serde_json::Value;

fn mk(args: &[&str]) -> multikoszul::cli::Outcome {
    run(std::iter::once("multikoszul").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let out = mk(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn scratch(name: &str, body: &str) -> String {
    let dir = std::env::temp_dir().join(format!("mk-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn check_trunc3_is_multikoszul() {
    let v = json(&["check", "trunc3.alg", "--hdeg", "6", "--adeg", "12"]);
    assert_eq!(v["verdict"], "multi-koszul-up-to-bounds");
    assert_eq!(v["bounds"], serde_json::json!([6, 12]));
    assert_eq!(v["schema"], 1);
}

#[test]
fn expect_koszul_fails_on_nonkoszul() {
    let out = mk(&["check", "nonkoszul", "--hdeg", "4", "--adeg", "8", "--expect-koszul"]);
    assert_eq!(out.code, 1);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["verdict"], "not-multi-koszul");
    assert_eq!(mk(&["check", "nonkoszul", "--hdeg", "4", "--adeg", "8"]).code, 0);
}

#[test]
fn inhomogeneous_relation_is_an_input_error() {
    let path = scratch("inhom.alg", "field Q\ngens x:1, y:2\nrel x*x + x\n");
    let out = mk(&["check", &path]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("error"), "{}", out.stderr);
    assert!(out.stdout.is_empty());
}

#[test]
fn bad_bounds_and_flags_are_input_errors() {
    assert_eq!(mk(&["check", "trunc3", "--hdeg", "0"]).code, 2);
    assert_eq!(mk(&["check", "trunc3", "--adeg", "1"]).code, 2);
    assert_eq!(mk(&["check", "trunc3", "--field", "F", "4"]).code, 2);
    assert_eq!(mk(&["frobnicate"]).code, 2);
    assert_eq!(mk(&["check", "no_such_algebra"]).code, 2);
    assert_eq!(mk(&["--help"]).code, 0);
}

#[test]
fn cap_exceeded_exits_3() {
    let path = scratch("free4.alg", "field Q\ngens a:1, b:1, c:1, d:1\n");
    let out = Command::new(env!("CARGO_BIN_EXE_multikoszul"))
        .args(["check", &path, "--hdeg", "3", "--adeg", "8"])
        .env("MK_MAX_WORDS", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn reports_are_deterministic() {
    for args in [
        &["check", "mixed", "--hdeg", "5", "--adeg", "10"][..],
        &["ainfty", "trunc3", "--hdeg", "5", "--adeg", "10"],
        &["yoneda", "weighted", "--hdeg", "4", "--adeg", "10"],
        &["jspaces", "sym_2_1", "--hdeg", "3", "--adeg", "8", "--format", "text"],
    ] {
        let a = mk(args);
        let b = mk(args);
        assert_eq!(a.code, 0, "{}", a.stderr);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn binary_output_matches_library() {
    let args = ["jspaces", "trunc4", "--hdeg", "4", "--adeg", "10"];
    let out = Command::new(env!("CARGO_BIN_EXE_multikoszul")).args(args).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), mk(&args).stdout);
}

#[test]
fn modular_and_rational_tables_agree() {
    for (name, _) in CORPUS {
        let q = json(&["check", name, "--hdeg", "4", "--adeg", "8"]);
        let p = json(&["check", name, "--hdeg", "4", "--adeg", "8", "--field", "F", "32003"]);
        for key in ["jdims", "tor"] {
            assert_eq!(q[key], p[key], "{name} {key}");
        }
        assert_eq!(q["verdict"], p["verdict"], "{name}");
    }
}

#[test]
fn tables_round_trip() {
    let v = json(&["check", "mixed", "--hdeg", "5", "--adeg", "10"]);
    for key in ["jdims", "tor"] {
        let t = BigradedTable::from_json((5, 10), &v[key]).unwrap();
        assert_eq!(t.to_json(), v[key]);
    }
    let text = serde_json::to_string_pretty(&v).unwrap() + "\n";
    assert_eq!(text, mk(&["check", "mixed", "--hdeg", "5", "--adeg", "10"]).stdout);
}

#[test]
fn empty_tables_serialize_as_empty_objects() {
    assert_eq!(BigradedTable::new(3, 4).to_json(), serde_json::json!({}));
    // free algebra: J_i = 0 for i ≥ 2, so the basis rows are empty
    let v = json(&["jspaces", "free2", "--hdeg", "3", "--adeg", "4", "--basis-dump"]);
    assert!(v["jdims"].get("2").is_none());
    assert_eq!(v["basis"]["2"], serde_json::json!({}));
}

#[test]
fn text_grid_marks_structural_zeros_and_witness() {
    let out = mk(&["check", "nonkoszul", "--hdeg", "4", "--adeg", "8", "--format", "text"]);
    assert!(out.stdout.contains("verdict: not-multi-koszul"));
    assert!(out.stdout.contains("bounds: H = 4, D = 8"));
    let row3 = out.stdout.lines().find(|l| l.trim_start().starts_with("3  -")).unwrap();
    assert!(row3.contains(".*"), "{row3}");
    assert!(row3.split_whitespace().filter(|c| *c == "-").count() >= 3);
}

#[test]
fn yoneda_requires_formal_on_nonkoszul() {
    assert_eq!(mk(&["yoneda", "nonkoszul", "--hdeg", "3", "--adeg", "8"]).code, 2);
    let v = json(&["yoneda", "nonkoszul", "--hdeg", "3", "--adeg", "8", "--formal"]);
    assert_eq!(v["formal"], true);
    assert!(v["notes"][0].as_str().unwrap().contains("formal"));
}

#[test]
fn ainfty_report_on_trunc3() {
    let v = json(&["ainfty", "trunc3", "--hdeg", "6", "--adeg", "12", "--nmax", "4"]);
    assert_eq!(v["stasheff"]["violations"], serde_json::json!([]));
    assert_eq!(v["twisted"]["equal"], true);
    assert_eq!(v["coproducts"]["3"]["2,3,0"], serde_json::json!([["1", [[1, 1, 0], [1, 1, 0], [1, 1, 0]]]]));
}

#[test]
fn oracle_and_tor_agree() {
    let v = json(&["oracle", "weighted", "--oracle-bounds", "3,8"]);
    assert_eq!(v["agree"], true);
    assert_eq!(v["bounds"], serde_json::json!([3, 8]));
    let t = json(&["tor", "weighted", "--hdeg", "3", "--adeg", "8"]);
    assert_eq!(t["tor"], v["bar"]);
}

#[test]
fn timing_is_opt_in() {
    let v = json(&["hilbert", "trunc2", "--adeg", "6"]);
    assert!(v.get("timing_ms").is_none());
    assert_eq!(v["hilbert"], serde_json::json!([1, 1, 0, 0, 0, 0, 0]));
    let v = json(&["hilbert", "trunc2", "--adeg", "6", "--timing"]);
    assert!(v["timing_ms"].is_u64());
}
