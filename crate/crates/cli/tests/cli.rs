//! Golden-output tests for the command-line tool. Set `BLESS=1` to rewrite
//! the expected outputs under `tests/golden`.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn dir(sub: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join(sub)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_selfdist"))
        .args(args)
        .current_dir(dir("data"))
        .output()
        .expect("binary runs")
}

fn golden(name: &str, args: &[&str], code: i32) {
    let out = run(args);
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        out.status.code(),
        Some(code),
        "{name}: stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let path = dir("golden").join(format!("{name}.out"));
    if std::env::var_os("BLESS").is_some() {
        fs::write(&path, &stdout).unwrap();
        return;
    }
    let expected = fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
    assert_eq!(stdout, expected, "{name}");
}

#[test]
fn props_report() {
    golden("props_ildq15", &["props", "ildq15.txt"], 0);
    golden("props_bloop15", &["props", "bloop15.txt"], 0);
}

#[test]
fn checks() {
    golden("check_ld", &["check", "ildq15.txt", "left-distributive"], 0);
    golden("check_medial", &["check", "galkin.txt", "medial"], 1);
    golden("check_connected", &["check", "r3.txt", "connected"], 0);
    golden("check_bloop", &["check", "bloop15.txt", "bloop"], 0);
    golden("check_trimedial", &["--strict", "check", "affine5.txt", "trimedial"], 0);
}

#[test]
fn failing_check_reports_witness() {
    let out = run(&["check", "z3.txt", "quandle"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("!="), "{err}");
    let out = run(&["check", "galkin.txt", "medial"]);
    assert!(String::from_utf8(out.stderr).unwrap().contains("fails at"));
}

#[test]
fn errors_exit_two() {
    for args in [
        &["props", "broken.txt"][..],
        &["props", "no-such-file.txt"],
        &["check", "ildq15.txt", "moufang"],
        &["check", "ildq15.txt", "no-such-property"],
        &["identity", "check", "r3.txt", "x*y="],
        &["enumerate", "loop", "9"],
        &["enumerate", "groupoid", "3"],
        &["construct", "nothing"],
        &["bo-loop", "z3.txt", "0"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8(out.stderr).unwrap().starts_with("error:"), "{args:?}");
    }
}

#[test]
fn identities() {
    golden("identity_holds", &["identity", "check", "ildq15.txt", "x*(x*y)=y"], 0);
    golden("identity_fails", &["identity", "check", "z3.txt", "x*y=y*x*x"], 1);
    golden(
        "identity_find",
        &["identity", "find", "-n", "4", "--quasigroup", "--idempotent", "x*(y*z)=(x*y)*(x*z)"],
        0,
    );
    golden(
        "identity_count_bol",
        &["identity", "find", "-n", "6", "--loop", "--count", "x*(y*(x*z))=(x*y*x)*z"],
        0,
    );
    golden(
        "identity_none",
        &["identity", "find", "-n", "4", "--loop", "--not", "x*y=y*x", "x*(y*z)=(x*y)*z"],
        1,
    );
}

#[test]
fn constructions() {
    golden("construct_list", &["construct"], 0);
    golden("construct_bloop15", &["construct", "bloop15"], 0);
    golden("isotope", &["isotope", "r3.txt", "0", "1"], 0);
    golden("core_bloop15", &["core", "bloop15.txt"], 0);
    golden("bo_loop", &["bo-loop", "ildq15.txt", "0"], 0);
    golden("bo_quandle", &["bo-quandle", "boloop15.txt", "psi15.txt"], 0);
    golden("envelope", &["envelope", "ildq15.txt", "0"], 0);
    golden("envelope_build", &["envelope", "build", "s3.txt", "transposition.txt", "2"], 0);
    golden("represent_medial", &["represent", "medial", "affine5.txt", "0", "0"], 0);
}

#[test]
fn isomorphism() {
    golden("iso_same", &["iso", "boloop15.txt", "bloop15.txt"], 0);
    golden("iso_galkin", &["iso", "ildq15.txt", "galkin.txt"], 1);
    let out = run(&["bo-quandle", "boloop15.txt", "psi15.txt"]);
    let path = std::env::temp_dir().join(format!("selfdist-bo-{}.txt", std::process::id()));
    fs::write(&path, &out.stdout).unwrap();
    let out = run(&["iso", path.to_str().unwrap(), "ildq15.txt"]);
    fs::remove_file(&path).unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn enumeration() {
    golden("enumerate_lq6", &["enumerate", "latin-quandle", "6"], 0);
    golden("enumerate_q3", &["enumerate", "quandle", "3", "--list"], 0);
    golden("enumerate_bo", &["enumerate", "bo", "5"], 0);
    golden("enumerate_mi", &["--jobs", "2", "enumerate", "medial-idempotent", "16"], 0);
}

#[test]
fn census_file_round_trips() {
    let path = std::env::temp_dir().join(format!("selfdist-census-{}.txt", std::process::id()));
    let out = run(&["enumerate", "latin-quandle", "5", "--census", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(&path).unwrap();
    fs::remove_file(&path).unwrap();
    let census = selfdist::format::parse_census(&text).unwrap();
    assert_eq!(census.family, "latin-quandle");
    assert_eq!(census.tables.len(), 3);
    assert!(census.tables.iter().all(|t| t.is_latin_quandle()));
}
