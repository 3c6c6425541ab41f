use std::path::PathBuf;
use std::process::{Command, Output};

fn posdet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_posdet"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("posdet-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

const TWO_GENERATORS: &str = "ring x,y;\nI = x^2, x*y;\n";

#[test]
fn radical_of_ideal() {
    let f = scratch("radical.txt", "ring a,b,c,d;\nI = a^4*d^4, a^2*b^3, b^3*c^2, b^3*d;\n");
    let out = posdet(&["radical", f.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "sqrt I = b*d, b*c, a*d, a*b");
}

#[test]
fn betti_table_and_totals() {
    let f = scratch("betti.txt", TWO_GENERATORS);
    let out = posdet(&["betti", f.to_str().unwrap()]);
    assert_eq!(stdout(&out), "0  (0,0)  1\n1  (1,1)  1\n1  (2,0)  1\n2  (2,1)  1\n");
    let out = posdet(&["betti", "--total", "--field", "fp:3", f.to_str().unwrap()]);
    assert_eq!(stdout(&out), "0  0  1\n1  2  2\n2  3  1\n");
}

#[test]
fn dimension_depth_and_type() {
    let f = scratch("type.txt", TWO_GENERATORS);
    let path = f.to_str().unwrap();
    assert_eq!(stdout(&posdet(&["dim", path])).trim(), "1");
    assert_eq!(stdout(&posdet(&["depth", path])).trim(), "0");
    let cm = stdout(&posdet(&["cm", path]));
    assert!(cm.contains("\"is_cm\":false") && cm.contains("\"is_seq_cm\":true"), "{cm}");
}

#[test]
fn alexander_dual_and_ext() {
    let f = scratch("dual.txt", "ring x;\nI = x;\n");
    let path = f.to_str().unwrap();
    // A_1(S/(x)) is the residue field placed in degree 1
    assert_eq!(stdout(&posdet(&["adual", path])), "(1)  1\n");
    assert_eq!(stdout(&posdet(&["ext", path, "--p", "1"])), "(0)  1\n");
    assert_eq!(stdout(&posdet(&["ext", path, "--p", "0"])), "");
}

#[test]
fn reference_examples_pass_under_both_names() {
    for name in ["examples", "paper-examples"] {
        let out = posdet(&[name]);
        assert!(out.status.success());
        let text = stdout(&out);
        assert!(text.lines().all(|l| l.starts_with("PASS")), "{text}");
        assert!(text.contains("example2.not_equidimensional"));
    }
}

#[test]
fn verify_passes_and_writes_records() {
    let records = scratch("records.jsonl", "");
    let out = posdet(&[
        "verify",
        "--check",
        "oracle",
        "--check",
        "adual",
        "--count",
        "20",
        "--records",
        records.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stdout(&out));
    let lines = std::fs::read_to_string(&records).unwrap();
    assert_eq!(lines.lines().count(), 40);
    assert!(lines.lines().next().unwrap().contains("\"check\":\"oracle\""));
}

#[test]
fn verify_literal_check_fails_with_reproduction() {
    let dir = std::env::temp_dir().join(format!("posdet-cli-repro-{}", std::process::id()));
    let out = posdet(&[
        "verify",
        "--check",
        "gcm-literal",
        "--repro-dir",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let repro = std::fs::read_dir(&dir).unwrap().next().unwrap().unwrap().path();
    let again = posdet(&["verify", "--replay", repro.to_str().unwrap()]);
    assert_eq!(again.status.code(), Some(1));
    assert!(stdout(&again).contains("generalized CM differs"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn errors_exit_with_two() {
    assert_eq!(posdet(&["verify", "--check", "nope"]).status.code(), Some(2));
    assert_eq!(posdet(&["dim", "/nonexistent/file"]).status.code(), Some(2));
    let bad = scratch("bad.txt", "I = x;\n");
    let out = posdet(&["dim", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("ring"));
}
