//! End-to-end checks of the command-line binary: exit codes, output
//! determinism, and error handling, driven through real process spawns.

use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_blockcenter"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn verify_paper_passes_and_exits_zero() {
    let out = run(&["verify-paper"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("verify-paper — PASS"), "got: {text}");
    for section in blockcenter::verify::SECTIONS {
        assert!(text.contains(&format!("[{section}]")), "section {section} reported");
    }
}

#[test]
fn json_output_is_deterministic() {
    let first = run(&["--json", "verify-paper"]);
    let second = run(&["--json", "verify-paper"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout, "byte-identical across runs");
    let text = stdout(&first);
    assert!(text.starts_with(r#"{"schema":1,"command":"verify-paper","status":"PASS""#));
    assert!(text.ends_with('\n'));
}

#[test]
fn corrupted_block_fails_with_exit_one() {
    let dir = std::env::temp_dir().join("blockcenter-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let good = blockcenter::data::DataSource::default().read("case2.block").unwrap();
    let bad = good.replacen("2 2 1", "2 2 -1", 1);
    assert_ne!(good, bad, "corruption applied");
    let path = dir.join("case2-corrupt.block");
    std::fs::write(&path, bad).unwrap();

    let out = run(&["check-block", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1), "constraint violations are FAIL");
    assert!(stdout(&out).contains("FAIL"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn missing_file_errors_with_exit_two() {
    let out = run(&["snf", "/nonexistent/matrix.mat"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("ERROR"));
}

#[test]
fn unknown_verify_section_errors() {
    let out = run(&["verify-paper", "--only", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn single_section_filter_works() {
    let out = run(&["verify-paper", "--only", "center-lattice"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("[center-lattice]"));
    assert!(!text.contains("[row-enumeration]"), "other sections skipped");
}

#[test]
fn snf_reports_elementary_divisors() {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/q_case1.mat");
    let out = run(&["snf", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("1, 2, 2, 2, 2, 4, 4, 16"), "divisor chain shown: {text}");
}

#[test]
fn resolve_certifies_the_probe_algebra() {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/growth_probe.alg");
    let out = run(&["--steps", "11", "resolve", "--algebra", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("2048"), "trace reaches 2^11: {text}");
    assert!(text.contains("233"), "comparison sequence reaches 233");
}
