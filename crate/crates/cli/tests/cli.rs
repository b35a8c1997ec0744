use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn qderiv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qderiv"))
        .args(args)
        .env_remove("QDERIV_VERBOSE")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

#[test]
fn dihedral3_gf3_has_two_derivations() {
    let out = qderiv(&["derivations", "--quandle", "dihedral:3", "--field", "GF(3)"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["dim"], 2);
    assert_eq!(v["field"], "GF(3)");
    let basis = v["basis"].as_array().unwrap();
    assert_eq!(basis.len(), 2);
    // residues are plain integers in 0..p
    for m in basis {
        for row in m.as_array().unwrap() {
            for c in row.as_array().unwrap() {
                assert!(c.as_u64().unwrap() < 3);
            }
        }
    }
}

#[test]
fn latin_order_four_catalog_entry_is_rigid_over_q() {
    let out = qderiv(&["derivations", "--quandle", "catalog:4.7", "--field", "Q"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["dim"], 0);
    assert_eq!(v["basis"], Value::Array(vec![]));
}

#[test]
fn rationals_are_strings() {
    let v = json(&qderiv(&["derivations", "--quandle", "trivial:2"]));
    assert_eq!(v["dim"], 2);
    assert!(v["basis"][0][0][0].is_string());
}

#[test]
fn bad_table_reports_axiom_iii_witness() {
    let out = qderiv(&["validate", "--file", &data("bad.json")]);
    assert_eq!(out.status.code(), Some(1));
    let e = &json(&out)["error"];
    assert_eq!(e["kind"], "axiom_iii");
    assert_eq!(
        (e["x"].as_u64(), e["y"].as_u64(), e["z"].as_u64()),
        (Some(0), Some(1), Some(0))
    );
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["lietransform", "--quandle", "catalog:3.2"][..],
        &["symmetries", "--quandle", "dihedral:8"],
        &["props", "--quandle", "s3", "--format", "text"],
    ] {
        let (a, b) = (qderiv(args), qderiv(args));
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn exported_quandle_round_trips() {
    let exported = json(&qderiv(&["validate", "--quandle", "dihedral:3"]));
    let from_file: Value = serde_json::from_str(&std::fs::read_to_string(data("dihedral3.json")).unwrap()).unwrap();
    assert_eq!(exported["quandle"], from_file);

    let a = qderiv(&["derivations", "--quandle", "dihedral:3", "--field", "GF(3)"]);
    let b = qderiv(&["derivations", "--file", &data("dihedral3.json"), "--field", "GF(3)"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_errors_are_json() {
    let out = qderiv(&["derivations"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["kind"], "usage");

    let out = qderiv(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["kind"], "usage");

    let out = qderiv(&[
        "derivations",
        "--quandle",
        "dihedral:3",
        "--file",
        &data("dihedral3.json"),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn computation_errors_are_json() {
    let out = qderiv(&["derivations", "--quandle", "s3", "--field", "GF(4)"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"]["kind"], "unsupported_field");

    let out = qderiv(&["props", "--quandle", "catalog:5.1"]);
    assert_eq!(json(&out)["error"]["kind"], "unknown_label");

    let out = qderiv(&["symmetries", "--quandle", "trivial:4"]);
    assert_eq!(json(&out)["error"]["kind"], "not_dihedral");

    let out = qderiv(&["validate", "--file", "/nonexistent/q.json"]);
    assert_eq!(json(&out)["error"]["kind"], "io");
}

#[test]
fn symmetries_report_shape() {
    let v = json(&qderiv(&["symmetries", "--quandle", "dihedral:8"]));
    assert_eq!(v["n"], 8);
    assert_eq!(v["dim"], 4);
    assert_eq!(v["prediction"]["value"], 4);
    for b in v["basis"].as_array().unwrap() {
        assert_eq!(b["blocks"]["pm"]["holds"], true);
        assert_eq!(b["blocks"]["uv"]["holds"], true);
        for r in b["relations"].as_array().unwrap() {
            assert_ne!(r["status"]["status"], "fails", "{r}");
        }
    }
}

#[test]
fn tables_lists_every_entry_in_fixed_order() {
    let out = qderiv(&["tables"]);
    let v = json(&out);
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), v["total"].as_u64().unwrap() as usize);
    assert_eq!(entries[0]["name"], "order3-3.1-q");
    let passed = entries.iter().filter(|e| e["pass"] == true).count();
    assert_eq!(v["passed"].as_u64().unwrap() as usize, passed);
    // Exit status follows the overall verdict.
    assert_eq!(out.status.success(), v["ok"] == true);

    let s3: Vec<_> = entries.iter().filter(|e| e["quandle"] == "s3").collect();
    assert_eq!(s3.len(), 3);
    assert_eq!(s3[0]["solver_dim"], 0);
    assert_eq!(s3[1]["solver_dim"], 0);
}

#[test]
fn verbosity_only_changes_text() {
    let run = |verbose: bool, format: &str| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_qderiv"));
        c.args(["lietransform", "--quandle", "dihedral:3", "--format", format]);
        if verbose {
            c.env("QDERIV_VERBOSE", "1");
        } else {
            c.env_remove("QDERIV_VERBOSE");
        }
        c.output().unwrap().stdout
    };
    assert_eq!(run(false, "json"), run(true, "json"));
    assert!(run(true, "text").len() > run(false, "text").len());
}
