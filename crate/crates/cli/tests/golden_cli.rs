//! Golden-file tests: every worked CLI example runs the real binary and
//! must reproduce its frozen output byte for byte.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ecodim"))
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("missing golden {name}: {e}"))
}

fn run(args: &[&str], stdin: Option<&str>) -> (i32, String, String) {
    let mut cmd = bin();
    cmd.args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    cmd.current_dir(&dir);
    let mut child = cmd.spawn().expect("spawn ecodim");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.unwrap_or("").as_bytes())
        .expect("write stdin");
    let out = child.wait_with_output().expect("wait");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
    )
}

fn assert_golden(args: &[&str], stdin: Option<&str>, file: &str) {
    let (code, stdout, stderr) = run(args, stdin);
    assert_eq!(code, 0, "nonzero exit for {args:?}: {stderr}");
    assert_eq!(stdout, golden(file), "stdout mismatch for {args:?}");
}

#[test]
fn ec_square_positroid() {
    assert_golden(&["ec", "square.input"], None, "ec_square.txt");
    assert_golden(&["ec", "square.input", "--json"], None, "ec_square_json.txt");
    assert_golden(&["ec", "square.input", "--family", "cyclic"], None, "ec_square_cyclic.txt");
}

#[test]
fn ec_pappus_flacets() {
    assert_golden(&["ec", "pappus.input", "--family", "flacets"], None, "ec_pappus_flacets.txt");
}

#[test]
fn ec_interval_family() {
    // a Richardson-style matroid: intervals see the whole codimension
    let input = "n=4 k=2\nrank 1,2:1\nrank 3,4:1\n";
    let (code, stdout, _) = run(&["ec", "--family", "intervals"], Some(input));
    assert_eq!(code, 0);
    assert!(stdout.contains("family: intervals (10 sets)"));
    assert!(stdout.ends_with("ec = 2\n"));
}

#[test]
fn ec_generated_two_bases_example() {
    assert_golden(&["ec", "twolines.input"], None, "ec_twolines.txt");
}

#[test]
fn ec_reads_stdin() {
    let input = std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/square.input"),
    )
    .unwrap();
    let (code, stdout, _) = run(&["ec"], Some(&input));
    assert_eq!(code, 0);
    assert_eq!(stdout, golden("ec_square.txt"));
}

#[test]
fn positroid_from_permutation() {
    assert_golden(&["positroid", "triangle.input"], None, "positroid_triangle.txt");
    assert_golden(
        &["positroid", "triangle.input", "--json"],
        None,
        "positroid_triangle_json.txt",
    );
    assert_golden(&["ec", "triangle.input"], None, "ec_triangle_from_perm.txt");
}

#[test]
fn positroid_from_bases() {
    assert_golden(&["positroid", "vmatroid.input"], None, "positroid_v.txt");
}

#[test]
fn positroid_rejects_interleaved_parallel() {
    let (code, stdout, stderr) = run(&["positroid", "interleaved.input"], None);
    assert_eq!(code, 1);
    assert!(stdout.contains("not a positroid"));
    assert!(stderr.contains("not a positroid"));
}

#[test]
fn lr_worked_examples() {
    assert_golden(&["lr", "2", "4", "1", "x", "1"], None, "lr_s1_s1.txt");
    assert_golden(&["lr", "2", "4", "1", "x", "1", "--trace"], None, "lr_s1_s1_trace.txt");
    assert_golden(&["lr", "3", "6", "2,1", "x", "2,1", "--json"], None, "lr_g36_json.txt");
}

#[test]
fn lr_check_agrees() {
    let (code, stdout, _) = run(&["lr", "2", "5", "2,1", "x", "2", "--check"], None);
    assert_eq!(code, 0);
    assert!(stdout.ends_with("check: ok\n"));
}

#[test]
fn lr_empty_product_is_domain_error() {
    let (code, _, stderr) = run(&["lr", "2", "4", "2,2", "x", "2,2"], None);
    assert_eq!(code, 1);
    assert!(stderr.contains("empty product"));
}

#[test]
fn check_subcommand() {
    assert_golden(&["check", "2", "4", "2", "x", "2"], None, "check_s2_s2.txt");
    let (code, stdout, _) = run(&["check", "2", "4", "2,2", "x", "2,2"], None);
    assert_eq!(code, 0, "empty pipeline and empty oracle agree");
    assert!(stdout.contains("check: ok"));
}

#[test]
fn shift_trace_subcommand() {
    let (code, stdout, _) = run(&["shift-trace", "2", "4", "1", "x", "1"], None);
    assert_eq!(code, 0);
    assert_eq!(stdout, golden("lr_s1_s1_trace.txt"));
}

#[test]
fn polynomials() {
    assert_golden(&["spoly", "u12.input"], None, "spoly_u12.txt");
    assert_golden(&["tutte", "u12.input"], None, "tutte_u12.txt");
}

#[test]
fn parse_errors_exit_2() {
    let (code, _, stderr) = run(&["ec"], Some("n=2 k=1\nbases 1;12\n"));
    assert_eq!(code, 2);
    assert!(stderr.contains("out of range"));

    let (code, _, _) = run(&["ec"], Some("nonsense\n"));
    assert_eq!(code, 2);

    let (code, _, stderr) = run(&["lr", "2", "4", "1", "y", "1"], None);
    assert_eq!(code, 2);
    assert!(stderr.contains("expected literal `x`"));

    let (code, _, _) = run(&["lr", "2", "4", "3", "x", "1"], None);
    assert_eq!(code, 2, "out-of-box partition");
}

#[test]
fn domain_errors_exit_1() {
    // mixed basis sizes: parses, fails the matroid axioms
    let (code, _, stderr) = run(&["ec"], Some("n=2 k=1\nbases 1;1,2\n"));
    assert_eq!(code, 1);
    assert!(stderr.contains("not a matroid"));

    // the axiom-3 witness from two crossing parallel conditions
    let (code, _, stderr) = run(&["ec"], Some("n=3 k=2\nrank 1,2:1\nrank 2,3:1\n"));
    assert_eq!(code, 1);
    assert!(stderr.contains("rank axiom fails"));
}

#[test]
fn whitespace_insensitive_input() {
    let (code, stdout, _) = run(
        &["ec"],
        Some("n = 8   k = 3\nrank 1 , 2 , 3 : 2\nrank 3,4,5 : 2\nrank 5,6,7:2\nrank 7 , 8 , 1 : 2\n"),
    );
    assert_eq!(code, 0);
    assert_eq!(stdout, golden("ec_square.txt"));
}

#[test]
fn perm_declared_degree_must_match() {
    let (code, _, stderr) = run(&["positroid"], Some("perm 3,6,5,8,7,10 k=2\n"));
    assert_eq!(code, 1);
    assert!(stderr.contains("degree"));
}
