//! End-to-end tests of the `charbasis` executable.

use std::process::{Command, Output};

fn charbasis(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_charbasis"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = charbasis(args);
    assert!(
        out.status.success(),
        "command {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn coeff_reproduces_the_four_product_values() {
    let cases = [
        ("h[2,1]*st[2,2]", "8"),
        ("ht[2]*ht[1]*st[2,2]", "7"),
        ("st[2]*st[1]*st[2,2]", "5"),
        ("ht[2,1]*st[2,2]", "6"),
    ];
    for (expr, expected) in cases {
        assert_eq!(
            stdout_of(&["coeff", expr, "--of", "st[4]"]).trim(),
            expected,
            "expr {}",
            expr
        );
    }
    assert_eq!(stdout_of(&["coeff", "st[3]", "--of", "st[3]"]).trim(), "1");
}

#[test]
fn expand_small_cases() {
    let out = stdout_of(&["expand", "st[1]", "--basis", "h"]);
    assert_eq!(out, "h[] -1\nh[1] 1\n");

    let out = stdout_of(&["expand", "st[]", "--basis", "st"]);
    assert_eq!(out, "st[] 1\n");

    let out = stdout_of(&["expand", "ht[2,1]*st[2,2]", "--basis", "st"]);
    assert!(out.lines().any(|line| line == "st[4] 6"), "got:\n{}", out);
}

#[test]
fn expand_output_is_deterministic() {
    let args = ["expand", "h[2,1]*st[2,2]", "--basis", "st"];
    let first = stdout_of(&args);
    for _ in 0..3 {
        assert_eq!(stdout_of(&args), first);
    }
}

#[test]
fn json_output_round_trips() {
    let out = stdout_of(&["expand", "st[2,1]", "--basis", "h", "--json"]);
    let parsed = charbasis::symfunc::from_json_str(out.trim()).unwrap();
    assert_eq!(
        parsed,
        charbasis::stable::st_to_h_expansion(&charbasis::Partition::of(&[2, 1]))
    );
    assert_eq!(
        charbasis::symfunc::to_json_string(&parsed),
        out.trim(),
        "serialization is bit-exact"
    );
}

#[test]
fn tableaux_counts_and_rendering() {
    assert_eq!(
        stdout_of(&[
            "tableaux", "--gamma", "[4]", "--lambda", "[2,2]", "--alpha", "[2,1]",
            "--profile", "pair", "--lattice",
        ])
        .trim(),
        "6"
    );
    assert_eq!(
        stdout_of(&[
            "tableaux", "--gamma", "[4]", "--lambda", "[2,2]", "--alpha", "[2,1]",
            "--profile", "multiset", "--lattice",
        ])
        .trim(),
        "8"
    );
    assert_eq!(
        stdout_of(&["tableaux", "--gamma", "[]", "--lambda", "[]", "--alpha", "[]"]).trim(),
        "1"
    );

    let printed = stdout_of(&[
        "tableaux", "--gamma", "[4]", "--lambda", "[2,2]", "--alpha", "[2,1]",
        "--profile", "pair", "--lattice", "--print",
    ]);
    assert!(printed.starts_with("6\n"));
    let blocks: Vec<&str> = printed.trim_end().split("\n\n").collect();
    // the count line plus one rendering per tableau
    assert_eq!(blocks.len(), 7, "got:\n{}", printed);
    // the r = 4 tableau with no first-row cells comes first
    assert!(
        printed.contains("[1~] [1~1] [2~1] [2~2]\n[.] [.] [.] [.]"),
        "got:\n{}",
        printed
    );
}

#[test]
fn gbar_expansion_and_coefficient() {
    let out = stdout_of(&["gbar", "--lambda", "[1]", "--mu", "[1]"]);
    assert_eq!(out, "st[] 1\nst[1] 1\nst[1,1] 1\nst[2] 1\n");
    assert_eq!(
        stdout_of(&[
            "gbar", "--lambda", "[2,1]", "--mu", "[3,1,1]", "--nu", "[4,2,1,1]",
        ])
        .trim(),
        "2"
    );
}

#[test]
fn dims_listing_and_single_value() {
    let out = stdout_of(&["dims", "--r", "2"]);
    assert_eq!(out, "[] 2\n[1] 3\n[1,1] 1\n[2] 1\n");
    assert_eq!(stdout_of(&["dims", "--r", "2", "--lambda", "[1]"]).trim(), "3");
    assert_eq!(
        stdout_of(&["dims", "--r", "2", "--quasi", "--lambda", "[2]"]).trim(),
        "1"
    );
}

#[test]
fn selftest_passes_and_respects_quiet() {
    let out = stdout_of(&["selftest", "--max-degree", "2"]);
    assert!(out.contains("PASS"));
    assert!(out.contains("all "));
    let quiet = stdout_of(&["--quiet", "selftest", "--max-degree", "1"]);
    assert_eq!(quiet.trim(), "");
}

#[test]
fn kronecker_degree_mismatch_is_an_error() {
    let out = charbasis(&["expand", "h[2]@h[1]", "--basis", "s"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("degree"));

    // inhomogeneous operand
    let out = charbasis(&["expand", "st[1]@st[1]", "--basis", "s"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn parse_errors_exit_1_and_usage_errors_exit_2() {
    let out = charbasis(&["expand", "h[1,2]", "--basis", "s"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));

    let out = charbasis(&["coeff", "h[1]", "--of", "h[1]*h[1]"]);
    assert_eq!(out.status.code(), Some(1));

    let out = charbasis(&["not-a-command"]);
    assert_eq!(out.status.code(), Some(2));

    let out = charbasis(&["expand", "h[1]", "--basis", "q"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn kronecker_square_example() {
    let out = stdout_of(&["expand", "h[1,1]@h[1,1]", "--basis", "s"]);
    assert_eq!(out, "s[1,1] 2\ns[2] 2\n");
}
