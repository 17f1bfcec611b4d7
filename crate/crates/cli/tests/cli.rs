use std::path::PathBuf;
use std::process::{Command, Output};

use codeal::render::{from_json, render};
use codeal::{closed_form_gb, parse_code_file, BasisKind, BasisSet, VariableNames};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

fn codeal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_codeal"))
        .args(args)
        .env_remove("CODEAL_CAP")
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write_code(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn weights_of_hamming_code() {
    let out = codeal(&["weights", data("hamming74.code").to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "A: 1 0 0 7 7 0 0 1\n");
}

#[test]
fn lex_gb_prints_the_closed_form() {
    let path = data("ex1.code");
    let out = codeal(&[
        "gb",
        "--order",
        "lex:1,2,3",
        "--check",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let code = parse_code_file(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let gb = closed_form_gb(&code, &[0, 1]).unwrap();
    let expected = render(
        &BasisSet::from_oriented(BasisKind::Reduced, &code, gb.elements().to_vec()),
        false,
        VariableNames::Indexed,
    );
    assert_eq!(stdout(&out), expected);
    assert_eq!(stdout(&out), "x1 - x3^3\nx2 - x3^6\nx3^7 - 1\n");
}

#[test]
fn lex_priorities_and_engine_orders_agree_with_each_other() {
    let path = data("ex1.code");
    let path = path.to_str().unwrap();
    // lex:2,1 names an information set; lex:2,1,3 is the same order in full.
    let a = codeal(&["gb", "--order", "lex:2,1", path, "--aliases"]);
    let b = codeal(&["gb", "--order", "lex:2,1,3", path, "--aliases"]);
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(stdout(&a), "b - c^6\na - c^3\nc^7 - 1\n");
    // A priority with a non-pivot variable in the middle goes to the engine.
    let c = codeal(&["gb", "--order", "lex:1,3,2", path, "--aliases"]);
    assert!(c.status.success());
    assert!(stdout(&c).lines().all(|l| l.contains(" - ")));
    for order in ["grlex", "grevlex"] {
        let out = codeal(&["gb", "--order", order, path]);
        assert!(out.status.success(), "{order}");
    }
}

#[test]
fn ugb_json_reports_147_oriented_elements() {
    let out = codeal(&["ugb", data("hamming74.code").to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["oriented_count"], 147);
    assert_eq!(doc["unordered_count"], 77);
    assert_eq!(doc["kind"], "universal");
    let basis = from_json(text.trim()).unwrap();
    assert_eq!(basis.oriented_count(), 147);
}

#[test]
fn circuits_with_aliases() {
    let out = codeal(&["circuits", data("ex1.code").to_str().unwrap(), "--aliases"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 11);
    assert!(text.lines().any(|l| l == "a^2 - b"));
}

#[test]
fn empty_basis_renders_empty_json_list() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_code(&dir, "full.code", "3 2 2\n1 0\n0 1\n");
    let out = codeal(&["circuits", &path, "--json"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim(),
        r#"{"kind":"circuits","p":3,"n":2,"k":2,"oriented_count":0,"unordered_count":0,"elements":[]}"#
    );
}

#[test]
fn output_is_deterministic() {
    for verb in ["circuits", "graver", "gb", "verify", "info"] {
        let a = codeal(&[verb, data("ex1.code").to_str().unwrap(), "--json"]);
        let b = codeal(&[verb, data("ex1.code").to_str().unwrap(), "--json"]);
        assert!(a.status.success(), "{verb}");
        assert_eq!(a.stdout, b.stdout, "{verb}");
    }
}

#[test]
fn singleton_verdicts() {
    let yes = codeal(&["singleton", data("simplex73.code").to_str().unwrap()]);
    assert_eq!(stdout(&yes), "Singleton code\n");
    let no = codeal(&[
        "singleton",
        data("pairs63.code").to_str().unwrap(),
        "--json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&no)).unwrap();
    assert_eq!(doc["singleton"], false);
    assert_eq!(doc["witness"].as_array().unwrap().len(), 6);
}

#[test]
fn verify_succeeds_on_examples() {
    for file in [
        "ex1.code",
        "hamming74.code",
        "simplex73.code",
        "pairs63.code",
    ] {
        let out = codeal(&["verify", data(file).to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{file}");
        assert!(stdout(&out).ends_with("chain holds\n"));
    }
}

#[test]
fn validation_errors_exit_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_code(&dir, "bad.code", "2 2 3\n1 0 1\n0 1 x\n");
    let out = codeal(&["info", &bad]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    let ex1 = data("ex1.code");
    let ex1 = ex1.to_str().unwrap();
    assert_eq!(codeal(&["ugb", ex1]).status.code(), Some(1));
    assert_eq!(codeal(&["singleton", ex1]).status.code(), Some(1));
    assert_eq!(
        codeal(&["gb", "--order", "lex:1,1,2", ex1]).status.code(),
        Some(1)
    );
    assert_eq!(
        codeal(&["gb", "--order", "lex:0,1", ex1]).status.code(),
        Some(1)
    );
    assert_eq!(
        codeal(&["gb", "--order", "revlex", ex1]).status.code(),
        Some(1)
    );
    // lex:1,2 on columns whose restriction is singular.
    let dep = write_code(&dir, "dep.code", "2 2 3\n1 1 0\n0 0 1\n");
    assert_eq!(
        codeal(&["gb", "--order", "lex:1,2", &dep]).status.code(),
        Some(1)
    );
    // The order option belongs to gb only.
    assert_eq!(
        codeal(&["circuits", "--order", "grlex", ex1]).status.code(),
        Some(1)
    );
    assert_eq!(
        codeal(&["info", "/no/such/file.code"]).status.code(),
        Some(1)
    );
}

#[test]
fn too_large_exits_with_two() {
    let path = data("hamming74.code");
    let path = path.to_str().unwrap();
    assert_eq!(
        codeal(&["circuits", path, "--cap", "10"]).status.code(),
        Some(2)
    );
    let out = Command::new(env!("CARGO_BIN_EXE_codeal"))
        .args(["weights", path])
        .env("CODEAL_CAP", "8")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_codeal"))
        .args(["weights", path])
        .env("CODEAL_CAP", "16")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}
