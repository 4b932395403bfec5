use std::io::Write;
use std::process::{Command, Output, Stdio};

use maya_painleve::maya::{BlockCoordinates, MayaDiagram};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_maya-painleve")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines().find_map(|l| l.strip_prefix(key)).unwrap_or_else(|| panic!("no {key} in {text}")).trim()
}

#[test]
fn show_renders_diagram() {
    let out = stdout(&["show", "--blocks", "2,3,5,7,10"]);
    assert_eq!(out.lines().next(), Some("■|■■□■■□□■■■□"));
    assert_eq!(field(&out, "genus"), "2");
    assert_eq!(field(&out, "blocks"), "2,3,5,7,10");
}

#[test]
fn show_vacuum() {
    let out = stdout(&["show", "--blocks", "0"]);
    assert_eq!(out.lines().next(), Some("■|□"));
    assert_eq!(field(&out, "genus"), "0");
    assert_eq!(field(&out, "index"), "0");
}

#[test]
fn frobenius_and_blocks_agree() {
    let by_frob = stdout(&["show", "--frobenius", "|3,4,5,6,7"]);
    let by_blocks = stdout(&["show", "--blocks", "0,3,8"]);
    assert_eq!(by_frob.lines().take(5).collect::<Vec<_>>(), by_blocks.lines().take(5).collect::<Vec<_>>());
}

#[test]
fn show_needs_exactly_one_form() {
    assert_eq!(code(&["show"]), 2);
    assert_eq!(code(&["show", "--blocks", "0", "--frobenius", "|"]), 2);
}

#[test]
fn classify_lists_signatures() {
    let out = stdout(&["classify", "--p", "4"]);
    assert!(out.lines().any(|l| l.starts_with("p = 4  k = 2")), "{out}");
    assert!(out.lines().any(|l| l.starts_with("p = 4  k = 4")), "{out}");
    assert_eq!(code(&["classify", "--p", "4", "--k", "3"]), 2);
}

/// Counts p = 3, k = 1 diagrams directly: one class, three flips, sites
/// `0 = b_0 < b_1 < b_2 <= max`.
#[test]
fn enumerate_count_matches_brute_force() {
    let max = 4;
    let mut expected = 0;
    for b1 in 1..=max {
        for b2 in b1 + 1..=max {
            let m = MayaDiagram::from_blocks(&BlockCoordinates::new(vec![0, b1, b2]).unwrap());
            let (sig, p) = m.cyclic_signature(1).unwrap();
            assert_eq!((sig, p), (vec![3], 3));
            expected += 1;
        }
    }
    let out = stdout(&["enumerate", "--p", "3", "--k", "1", "--max", "4", "--count"]);
    assert_eq!(out.trim(), format!("{expected} specs"));
}

#[test]
fn enumerate_rejects_parity_mismatch() {
    assert_eq!(code(&["enumerate", "--p", "4", "--k", "3"]), 2);
}

#[test]
fn enumerate_verifies() {
    let out = stdout(&["enumerate", "--p", "4", "--k", "2", "--max", "3", "--verify", "--count", "--jobs", "2"]);
    let last = out.lines().last().unwrap();
    let (passed, total) = last.trim_end_matches(" specs verified").split_once('/').unwrap();
    assert_eq!(passed, total);
    assert!(total.parse::<usize>().unwrap() > 0);
}

#[test]
fn solve_p4_example() {
    let out = stdout(&["solve", "--coords", "0,3,8", "--perm", "2,1,0"]);
    assert_eq!(field(&out, "P_IV    "), "a = 12, b = -50");
    assert_eq!(field(&out, "a       "), "10,6,-18");
    assert!(out.contains("chain           ok"));
}

#[test]
fn solve_p5_example() {
    let out = stdout(&["solve", "--sig", "1,3", "--coords", "0|3,4,6", "--perm", "0,1,3,2"]);
    let p5 = field(&out, "P_V     ");
    assert!(p5.starts_with("a = "), "{p5}");
    assert!(out.contains("P_V             ok"));
}

#[test]
fn solve_a4_example() {
    let out = stdout(&["solve", "--coords", "0,2,5,6,7", "--perm", "3,4,2,1,0"]);
    assert!(out.contains("noumi-yamada    ok"));
    let a: i64 = field(&out, "a       ").split(',').map(|x| x.parse::<i64>().unwrap()).sum();
    assert_eq!(a, -2);
}

#[test]
fn bad_input_exits_2() {
    assert_eq!(code(&["solve", "--coords", "0,3,8", "--perm", "0,0,1"]), 2);
    assert_eq!(code(&["solve", "--sig", "1,1,1", "--coords", "0,3,8"]), 2);
    assert_eq!(code(&["scalar", "--coords", "0,2,5,6,7"]), 2);
    assert_eq!(code(&["show", "--blocks", "x"]), 2);
}

fn verify_stdin(text: &str, args: &[&str]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_maya-painleve"))
        .arg("verify")
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

#[test]
fn json_round_trip() {
    let cert = stdout(&["solve", "--coords", "0|3|2", "--perm", "2,0,1", "--json"]);
    let out = verify_stdin(&cert, &["--json"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let embedded: serde_json::Value = serde_json::from_str(&cert).unwrap();
    assert_eq!(report, embedded["report"]);

    let text = verify_stdin(&cert, &[]);
    let text = String::from_utf8(text.stdout).unwrap();
    assert!(text.contains("embedded report ok") && text.contains("stable json     ok"), "{text}");
}

#[test]
fn tampered_json_exits_3() {
    let cert = stdout(&["solve", "--coords", "0,3,8", "--perm", "2,1,0", "--json"]);
    let mut doc: serde_json::Value = serde_json::from_str(&cert).unwrap();
    doc["p4"]["params"]["a"] = serde_json::json!("13");
    let out = verify_stdin(&doc.to_string(), &[]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(verify_stdin("{", &[]).status.code(), Some(2));
}

#[test]
fn scalar_prints_closed_form() {
    let out = stdout(&["scalar", "--coords", "0,3,8", "--perm", "2,1,0"]);
    assert!(out.contains("closed form"), "{out}");
    assert!(out.contains("residual        ok"));
}

#[test]
fn reproduce_all() {
    let out = stdout(&["reproduce"]);
    assert_eq!(out.lines().last(), Some("10/10 examples pass"));
    assert!(out.contains("erratum:"));
    let p5 = stdout(&["reproduce", "--only", "p5"]);
    assert_eq!(p5.lines().last(), Some("3/3 examples pass"));
}

#[test]
fn injected_fault_is_caught() {
    let out = run(&["reproduce", "--inject-fault", "hermite"]);
    assert_eq!(out.status.code(), Some(3));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains("10/10"));
}
