//! End-to-end runs of the installed binary: output formats, exit codes, and
//! the determinism guarantee (criterion 9).

use std::process::Command;
use std::time::Instant;

/// Runs the binary from the crate root with a hermetic environment.
fn run(args: &[&str]) -> (i32, String, String) {
    run_env(args, &[])
}

fn run_env(args: &[&str], env: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_permbound"));
    cmd.current_dir(env!("CARGO_MANIFEST_DIR"));
    cmd.env_remove("PERMBOUND_LIMIT");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.args(args).output().expect("binary must run");
    (
        out.status.code().expect("no signal"),
        String::from_utf8(out.stdout).expect("stdout is utf-8"),
        String::from_utf8(out.stderr).expect("stderr is utf-8"),
    )
}

#[test]
fn validate_accepts_text_and_json_alike() {
    let (code, text_out, _) = run(&["validate", "tests/data/example1.txt"]);
    assert_eq!(code, 0);
    assert_eq!(text_out, "acyclic; n=4; 4 edges\n");
    let (code, json_out, _) = run(&["validate", "tests/data/example1.json"]);
    assert_eq!(code, 0);
    assert_eq!(json_out, text_out);
}

#[test]
fn validate_reports_cycle_and_exits_two() {
    let (code, out, _) = run(&["validate", "tests/data/cycle3.txt"]);
    assert_eq!(code, 2);
    assert_eq!(out, "cyclic; witness: 1\u{2192}2\u{2192}3\u{2192}1\n");
}

#[test]
fn malformed_input_exits_one() {
    let (code, _, err) = run(&["validate", "tests/data/vertex0.txt"]);
    assert_eq!(code, 1);
    assert!(err.contains("out of range"), "stderr: {err}");
    let (code, _, _) = run(&["validate", "tests/data/no_such_file.txt"]);
    assert_eq!(code, 1);
}

#[test]
fn usage_errors_exit_one_and_help_exits_zero() {
    let (code, _, err) = run(&[]);
    assert_eq!(code, 1);
    assert!(!err.is_empty());
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("diameter"));
}

#[test]
fn enumerate_lists_the_family_in_lexicographic_order() {
    let (code, out, err) = run(&["enumerate", "tests/data/example1.txt"]);
    assert_eq!(code, 0);
    assert_eq!(out, "1 4 2 3\n2 4 1 3\n3 4 1 2\ncount=3\n");
    assert!(err.is_empty());
}

#[test]
fn enumerate_on_a_cycle_warns_and_reports_empty() {
    let (code, out, err) = run(&["enumerate", "tests/data/cycle3.txt"]);
    assert_eq!(code, 0, "an empty family is an answer, not an error");
    assert_eq!(out, "count=0\n");
    assert!(err.contains("cyclic"));
}

#[test]
fn enumeration_limit_flag_and_env_exit_three() {
    let (code, _, err) = run(&["enumerate", "--limit", "3", "tests/data/example1.txt"]);
    assert_eq!(code, 3);
    assert!(err.contains("limit"));
    let (code, _, _) = run_env(
        &["enumerate", "tests/data/example1.txt"],
        &[("PERMBOUND_LIMIT", "3")],
    );
    assert_eq!(code, 3);
    // the flag wins over the environment
    let (code, out, _) = run_env(
        &["enumerate", "--limit", "4", "tests/data/example1.txt"],
        &[("PERMBOUND_LIMIT", "3")],
    );
    assert_eq!(code, 0);
    assert!(out.ends_with("count=3\n"));
}

#[test]
fn diameter_text_report_carries_witness_on_request() {
    let (code, out, _) = run(&[
        "diameter",
        "--metric",
        "linf",
        "--witness",
        "tests/data/example1.txt",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("metric:   linf"));
    assert!(out.contains("bound:    2"));
    assert!(out.contains("attained: yes"));
    assert!(out.contains("method:   formula"));
    assert!(out.contains("witness:  1 4 2 3 | 3 4 1 2"));
}

#[test]
fn diameter_json_is_machine_readable() {
    let (code, out, _) = run(&[
        "diameter",
        "--metric",
        "kendall",
        "--json",
        "tests/data/example1.txt",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).expect("valid JSON");
    assert_eq!(v["metric"], "kendall");
    assert_eq!(v["bound"], 2);
    assert_eq!(v["attained"], true);
    assert_eq!(v["method"], "realizer");
    assert_eq!(v["witness"].as_array().expect("pair").len(), 2);
}

#[test]
fn diameter_falls_back_to_the_oracle_when_no_realizer_exists() {
    let (code, out, _) = run(&[
        "diameter",
        "--metric",
        "kendall",
        "--json",
        "tests/data/standard6.txt",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).expect("valid JSON");
    assert_eq!(
        v["bound"], 8,
        "exact diameter, strictly under the 9 incomparable pairs"
    );
    assert_eq!(v["attained"], true);
    assert_eq!(v["method"], "oracle");
}

#[test]
fn dimension_prints_realizer_or_refusal() {
    let (code, out, _) = run(&["dimension", "tests/data/example1.txt"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "dim<=2: yes\next1: 2 1 4 3\next2: 2 4 3 1\nsigma1: 3 4 1 2\nsigma2: 1 4 2 3\n"
    );
    let (code, out, _) = run(&["dimension", "tests/data/standard6.txt"]);
    assert_eq!(code, 0);
    assert_eq!(out, "dim<=2: no\n");
}

#[test]
fn descent_compares_closed_form_with_generic_route() {
    let (code, out, _) = run(&[
        "descent",
        "--n",
        "5",
        "--descents",
        "2",
        "--metric",
        "kendall",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("closed-form: 5"));
    assert!(out.contains("agree:       yes"));
    let (code, out, _) = run(&["descent", "--n", "4", "--metric", "linf", "--all"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 8, "one line per descent set");
    assert!(out.lines().all(|l| l.ends_with("agree=yes")));
}

#[test]
fn hessenberg_inspects_a_permutation_or_measures_a_family() {
    let (code, out, _) = run(&["hessenberg", "--h", "2,3,4,4", "--sigma", "2 4 1 3"]);
    assert_eq!(code, 0);
    assert!(out.contains("Inv_h = {(2,3)}"));
    let (code, out, _) = run(&["hessenberg", "--h", "2,3,3", "--set", "tests/data/hset.txt"]);
    assert_eq!(code, 0);
    assert!(out.contains("family size: 2"));
    assert!(out.contains("agree: yes"));
}

/// Criterion 9: every subcommand, run twice on identical input, produces
/// byte-identical output on both streams and the same exit code.
#[test]
fn criterion_9_cli_determinism() {
    let started = Instant::now();
    let commands: Vec<Vec<&str>> = vec![
        vec!["validate", "tests/data/example1.txt"],
        vec!["validate", "tests/data/example1.json"],
        vec!["validate", "tests/data/cycle3.txt"],
        vec!["enumerate", "tests/data/example1.txt"],
        vec!["enumerate", "tests/data/standard6.txt"],
        vec![
            "diameter",
            "--metric",
            "linf",
            "--witness",
            "tests/data/example1.txt",
        ],
        vec![
            "diameter",
            "--metric",
            "kendall",
            "--witness",
            "tests/data/example1.txt",
        ],
        vec![
            "diameter",
            "--metric",
            "kendall",
            "--json",
            "tests/data/standard6.txt",
        ],
        vec!["dimension", "tests/data/example1.txt"],
        vec!["dimension", "tests/data/standard6.txt"],
        vec![
            "descent",
            "--n",
            "6",
            "--descents",
            "2,4",
            "--metric",
            "kendall",
        ],
        vec!["descent", "--n", "5", "--metric", "linf", "--all"],
        vec!["hessenberg", "--h", "2,3,4,4", "--sigma", "2 4 1 3"],
        vec!["hessenberg", "--h", "2,3,3", "--set", "tests/data/hset.txt"],
    ];
    for args in &commands {
        let first = run(args);
        let second = run(args);
        assert_eq!(first, second, "repeat run diverged for {args:?}");
    }
    println!(
        "PASS criterion 9: {} commands byte-identical across repeat runs ({:.2}s)",
        commands.len(),
        started.elapsed().as_secs_f64()
    );
}
