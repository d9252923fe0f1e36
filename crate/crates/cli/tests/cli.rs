use std::path::{Path, PathBuf};
use std::process::Command as Process;

use serde_json::Value;
use tempfile::TempDir;

use solvlie_cli::document::AlgebraDocument;
use solvlie_core::catalog::{self, FixtureId, FixtureKind};
use solvlie_core::FieldDescriptor;

struct Run {
    code: i32,
    json: Value,
    stdout: String,
}

fn solvlie(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Process::new(env!("CARGO_BIN_EXE_solvlie"));
    cmd.args(args).env_remove("SOLVLIE_MAX_SUBSPACES");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    Run {
        code: out.status.code().unwrap(),
        json: serde_json::from_str(&stdout).unwrap_or(Value::Null),
        stdout,
    }
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn fixture_file(dir: &TempDir, kind: FixtureKind, p: u64) -> PathBuf {
    let l = catalog::fixture(&FixtureId { kind, field: FieldDescriptor::prime(p).unwrap() }).unwrap();
    write(dir, &format!("{kind}_{p}.json"), &AlgebraDocument::from_algebra(&l).to_json())
}

fn check<'a>(r: &'a Run, name: &str) -> &'a Value {
    r.json["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["check"] == name)
        .unwrap_or_else(|| panic!("no check {name} in {}", r.stdout))
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn validate_examples() {
    let dir = TempDir::new().unwrap();
    let h = fixture_file(&dir, FixtureKind::Heisenberg3, 2);
    let r = solvlie(&["validate", p(&h)], &[]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(check(&r, "solvable")["status"], "pass");

    let cross = write(
        &dir,
        "cross.json",
        r#"{"field":{"kind":"Q"},"dim":3,"basis_names":["x","y","z"],
           "brackets":[{"i":0,"j":1,"value":["0","0","1"]},
                       {"i":1,"j":2,"value":["1","0","0"]},
                       {"i":0,"j":2,"value":["0","-1","0"]}]}"#,
    );
    let r = solvlie(&["validate", p(&cross)], &[]);
    assert_eq!(check(&r, "jacobi")["status"], "pass");
    assert_eq!(check(&r, "solvable")["status"], "fail");
    assert_eq!(r.code, 1);

    let bad = write(
        &dir,
        "bad.json",
        r#"{"field":{"kind":"Q"},"dim":2,"basis_names":["x","y"],"brackets":[{"i":0,"j":1,"value":["1/0","0"]}]}"#,
    );
    let r = solvlie(&["validate", p(&bad)], &[]);
    assert_eq!(check(&r, "parse")["status"], "fail");
    assert_eq!(check(&r, "parse")["witness"]["path"], "brackets[0].value[0]");
    assert_eq!(r.code, 1);

    let broken = write(&dir, "broken.json", "{\n \"field\": {\"kind\": \"Q\"},\n \"dim\": 2,,\n}");
    let r = solvlie(&["validate", p(&broken)], &[]);
    assert_eq!(check(&r, "parse")["witness"]["line"], 3);

    let non_jacobi = write(
        &dir,
        "nonjacobi.json",
        r#"{"field":{"kind":"Fp","p":3},"dim":3,"basis_names":["x","y","z"],
           "brackets":[{"i":0,"j":1,"value":["0","0","1"]},{"i":0,"j":2,"value":["1","0","0"]}]}"#,
    );
    let r = solvlie(&["validate", p(&non_jacobi)], &[]);
    assert_eq!(check(&r, "jacobi")["status"], "fail");
    assert_eq!(check(&r, "jacobi")["witness"]["triple"].as_array().unwrap().len(), 3);
}

#[test]
fn query_examples() {
    let dir = TempDir::new().unwrap();
    let d2 = fixture_file(&dir, FixtureKind::Dim2Nonabelian, 3);
    let r = solvlie(&["query", p(&d2), "core", "--subspace", "0,1"], &[]);
    assert_eq!(check(&r, "core")["witness"]["core"], "");

    let r = solvlie(&["query", p(&d2), "chief-series"], &[]);
    let terms: Vec<&str> = check(&r, "chief_series")["witness"]["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t.as_str().unwrap())
        .collect();
    assert_eq!(terms, ["", "1,0", "1,0;0,1"]);

    let h = fixture_file(&dir, FixtureKind::Heisenberg3, 2);
    let r = solvlie(&["query", p(&h), "maximals"], &[]);
    let planes = check(&r, "maximals")["witness"]["maximal_subalgebras"].as_array().unwrap().clone();
    assert_eq!(planes.len(), 3);
    assert!(planes.iter().all(|s| s.as_str().unwrap().split(';').count() == 2));

    let r = solvlie(&["query", p(&h), "centralizer", "--subspace", "1,0,0"], &[]);
    assert_eq!(check(&r, "centralizer")["witness"]["centralizer"], "1,0,0;0,0,1");

    let r = solvlie(&["query", p(&h), "minimal-ideals"], &[]);
    assert_eq!(check(&r, "minimal_ideals")["witness"]["minimal_ideals"][0], "0,0,1");

    let r = solvlie(&["query", p(&h), "core"], &[]);
    assert_eq!(r.code, 1);
}

#[test]
fn conjugacy_examples() {
    let dir = TempDir::new().unwrap();
    let d2 = fixture_file(&dir, FixtureKind::Dim2Nonabelian, 3);
    let r = solvlie(&["conjugacy", p(&d2), "--m", "0,1", "--k", "1,1", "--method", "both"], &[]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(check(&r, "core_test")["witness"]["verdict"], "conjugate");
    assert_eq!(check(&r, "brute_force")["witness"]["verdict"], "conjugate");
    assert!(check(&r, "brute_force")["witness"]["search"]["witness"]["word"].is_array());
    assert_eq!(check(&r, "agreement")["status"], "pass");

    let aa = fixture_file(&dir, FixtureKind::Dim3AlmostAbelian, 3);
    let r = solvlie(&["conjugacy", p(&aa), "--m", "1,0,0;0,0,1", "--k", "0,1,0;0,0,1"], &[]);
    assert_eq!(check(&r, "core_test")["witness"]["verdict"], "not_conjugate");
    assert_eq!(check(&r, "brute_force")["witness"]["verdict"], "not_conjugate");

    let e4 = fixture_file(&dir, FixtureKind::Example4, 2);
    let maximals = solvlie(&["query", p(&e4), "maximals"], &[]);
    let list = check(&maximals, "maximals")["witness"]["maximal_subalgebras"].clone();
    let (m, k) = (list[0].as_str().unwrap(), list[1].as_str().unwrap());
    let r = solvlie(&["conjugacy", p(&e4), "--m", m, "--k", k, "--method", "core"], &[]);
    assert_eq!(check(&r, "core_test")["status"], "skipped");
    assert_eq!(check(&r, "core_test")["reason"], "hypothesis_not_met");
    assert_eq!(r.code, 0);

    let r = solvlie(&["conjugacy", p(&aa), "--m", "0,0,1", "--k", "0,1,0;0,0,1"], &[]);
    assert_eq!(check(&r, "input")["status"], "fail");
    assert_eq!(r.code, 1);
}

#[test]
fn theorems_examples() {
    let dir = TempDir::new().unwrap();
    let aa = fixture_file(&dir, FixtureKind::Dim3AlmostAbelian, 3);
    let r = solvlie(&["theorems", "--file", p(&aa), "--suite", "bijection"], &[]);
    assert_eq!(r.code, 0);
    let rows = check(&r, "bijection")["witness"]["ideals"].as_array().unwrap().clone();
    let x = rows.iter().find(|r| r["ideal"] == "1,0,0").unwrap();
    assert_eq!((x["classes"].as_u64(), x["ideal_complements"].as_u64()), (Some(3), Some(3)));

    let e4 = write(
        &dir,
        "example4_p2.json",
        &AlgebraDocument::from_algebra(&catalog::example4(2).unwrap()).to_json(),
    );
    let r = solvlie(&["theorems", "--file", p(&e4), "--suite", "all"], &[]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(check(&r, "core_equality")["status"], "skipped");
    assert_eq!(check(&r, "monolith")["status"], "pass");
    assert_eq!(check(&r, "monolith")["algebra"], "example4_p2");

    let r = solvlie(&["theorems", "--catalog", "gf2,dim<=3", "--count", "4", "--samples", "40"], &[]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json["summary"]["fail"], 0);
}

#[test]
fn caps_become_skips() {
    let dir = TempDir::new().unwrap();
    let aa = fixture_file(&dir, FixtureKind::Dim3AlmostAbelian, 3);
    let r = solvlie(&["theorems", "--file", p(&aa), "--suite", "intersection"], &[("SOLVLIE_MAX_SUBSPACES", "5")]);
    assert_eq!(check(&r, "intersection")["status"], "skipped");
    assert!(check(&r, "intersection")["reason"].as_str().unwrap().starts_with("cap_exceeded"));
    assert_eq!(r.code, 0);
    let r = solvlie(
        &["theorems", "--file", p(&aa), "--suite", "intersection", "--max-subspaces", "100000"],
        &[("SOLVLIE_MAX_SUBSPACES", "5")],
    );
    assert_eq!(check(&r, "intersection")["status"], "pass");
}

#[test]
fn fixture_and_random_round_trip() {
    for kind in [
        FixtureKind::Dim2Nonabelian,
        FixtureKind::Heisenberg3,
        FixtureKind::Dim3AlmostAbelian,
        FixtureKind::Dim3Scaled(2),
        FixtureKind::UpperTriangular(3),
        FixtureKind::Example4,
    ] {
        for field in ["gf2", "gf3"] {
            let r = solvlie(&["fixture", &kind.to_string(), "--field", field], &[]);
            assert_eq!(r.code, 0);
            let doc = AlgebraDocument::parse(&r.stdout).unwrap();
            let f = solvlie_cli::document::parse_field(field).unwrap();
            let expected = catalog::fixture(&FixtureId { kind, field: f }).unwrap();
            assert_eq!(doc.build().unwrap(), expected);
        }
    }
    let a = solvlie(&["random", "--seed", "42", "--dim", "3", "--field", "gf2"], &[]);
    let b = solvlie(&["random", "--seed", "42", "--dim", "3", "--field", "gf2"], &[]);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    assert!(AlgebraDocument::parse(&a.stdout).unwrap().build().unwrap().is_solvable());

    let r = solvlie(&["fixture", "example4", "--field", "q"], &[]);
    assert_eq!(r.code, 1);
}
