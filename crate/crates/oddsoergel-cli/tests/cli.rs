//! Exit-code and output contract of the command-line tool.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_oddsoergel"))
}

#[test]
fn verify_passes_with_exit_zero() {
    let out = bin().args(["verify"]).env("ODDSOERGEL_WORKERS", "2").output().unwrap();
    assert!(out.status.success(), "verify failed: {}", String::from_utf8_lossy(&out.stdout));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("0 failed"));
}

#[test]
fn verify_json_is_deterministic() {
    let a = bin().args(["verify", "--json"]).output().unwrap();
    let b = bin().args(["verify", "--json"]).output().unwrap();
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert!(v.as_array().unwrap().iter().all(|r| r["status"] == "pass"));
}

#[test]
fn reduce_prints_the_minimal_two_power() {
    let out = bin().args(["reduce", "--power", "2"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("Bbar{1}") && text.contains("B{-1}") && text.contains("R{-2}"), "{}", text);
}

#[test]
fn hom_prints_dimension_table() {
    let out = bin()
        .args(["hom", "--source", "B", "--target", "R", "--max-degree", "9"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "1@1, 2@5, 3@9");
}

#[test]
fn k0_evaluates_expressions() {
    let out = bin().args(["k0", "--expr", "b*b"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("q^-1") && text.contains("bc"), "{}", text);
}

#[test]
fn usage_errors_exit_with_two() {
    // unknown flag
    let out = bin().args(["verify", "--nonsense"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    // unknown subcommand
    let out = bin().args(["frobnicate"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    // bad word grammar
    let out = bin()
        .args(["hom", "--source", "Q", "--target", "R", "--max-degree", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    // bad expression
    let out = bin().args(["k0", "--expr", "b*"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    // obstruction bound below the constraining threshold
    let out = bin().args(["obstruct", "--max-degree", "6"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
