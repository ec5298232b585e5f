//! End-to-end tests of the `fano` binary: output formats, exit codes
//! and determinism.

use std::process::{Command, Output};

fn fano(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fano"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn lines_all_methods_agree() {
    let out = fano(&["lines", "--n", "4", "--method", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for method in [
        "zagier-product",
        "zagier-stirling",
        "libgober",
        "dominici",
        "harris",
        "schubert",
        "recursion",
        "bombieri",
        "oracle",
    ] {
        assert!(text.contains(method), "missing {method}:\n{text}");
    }
    assert_eq!(text.matches("2875").count(), 9);
    assert!(text.ends_with("verdict AGREE\n"));
}

#[test]
fn lines_single_method_prints_bare_value() {
    let out = fano(&["lines", "--n", "13", "--method", "schubert"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "11643962664020516264785825991165\n");
}

#[test]
fn lines_rejects_method_below_range() {
    let out = fano(&["lines", "--n", "2", "--method", "libgober"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("at least 3"));
}

#[test]
fn lines_rejects_oracle_beyond_capacity() {
    let out = fano(&["lines", "--n", "6", "--method", "oracle"]);
    assert_eq!(out.status.code(), Some(1));
    let out = fano(&["lines", "--n", "15", "--method", "bombieri"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("guard 14"));
}

#[test]
fn lines_json_is_stable() {
    let out = fano(&["lines", "--n", "3", "--method", "schubert", "--json"]);
    assert_eq!(stdout(&out), "{\"method\":\"schubert\",\"n\":3,\"value\":\"27\"}\n");
    let out = fano(&["lines", "--n", "2", "--method", "all", "--json"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "{\"method\":\"zagier-product\",\"n\":2,\"value\":\"1\"}"
    );
    assert_eq!(text.lines().last().unwrap(), "{\"n\":2,\"verdict\":\"AGREE\"}");
    for line in text.lines() {
        let value: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(value.is_object());
    }
}

#[test]
fn seq_prints_one_value_per_n() {
    let out = fano(&["seq", "--max", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1\n27\n2875\n698005\n");
    let out = fano(&["seq", "--max", "2"]);
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn seq_reaches_the_tail_of_the_table() {
    let out = fano(&["seq", "--max", "20"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 19);
    assert_eq!(
        text.lines().last().unwrap(),
        "4798492409653834563672780605191070760393640761817269985515"
    );
}

#[test]
fn seq_usage_errors() {
    assert_eq!(fano(&["seq", "--max", "1"]).status.code(), Some(1));
    let out = fano(&["seq", "--max", "20", "--method", "bombieri"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("caps at n=14"));
}

#[test]
fn recursion_row_format() {
    let out = fano(&["recursion", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "B[3]=3125/9 B[2]=-12500 F=6000\n");
    let out = fano(&["recursion", "--n", "3"]);
    assert_eq!(stdout(&out), "B[2]=81 F=-54\n");
    assert_eq!(fano(&["recursion", "--n", "2"]).status.code(), Some(1));
}

#[test]
fn genfun_prints_theta_rows_and_series() {
    let out = fano(&["genfun", "--terms", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "theta[0] 1\ntheta[1] -9/2 1/18\ntheta[2] 125/6 -125/216 1/600\nu 1 -3 10\n"
    );
}

#[test]
fn ci_evaluates_degree_tuples() {
    let out = fano(&["ci", "--degrees", "3,5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "136125\n");
    // Order of degrees does not matter.
    let out = fano(&["ci", "--degrees", "5,3", "--json"]);
    assert_eq!(stdout(&out), "{\"degrees\":[3,5],\"value\":\"136125\"}\n");
    // Parity violation is a usage error.
    let out = fano(&["ci", "--degrees", "2,3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("odd"));
}

#[test]
fn ci_table_grid_and_json() {
    let out = fano(&["ci-table", "--codim", "2", "--max-degree", "9"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("420472391422517289"));
    assert!(text.contains("136125"));
    assert_eq!(text.lines().count(), 10); // header plus nine rows

    let out = fano(&["ci-table", "--codim", "2", "--max-degree", "2", "--json"]);
    assert_eq!(
        stdout(&out),
        "{\"degrees\":[1,1],\"value\":\"1\"}\n{\"degrees\":[2,2],\"value\":\"16\"}\n"
    );

    let out = fano(&["ci-table", "--codim", "1", "--max-degree", "5"]);
    assert_eq!(stdout(&out), "1 1\n3 27\n5 2875\n");
}

#[test]
fn verify_passes_and_honors_thread_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_fano"))
        .args(["verify", "--max", "8"])
        .env("FANO_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("ok cross-method agreement (n=2..8)"));
    assert!(text.contains("ok parity"));
    assert!(text.contains("ok asymptotic bound"));
    assert!(text.contains("ok weighted length sums"));
    assert!(text.contains("ok composition weight sum"));
    assert!(text.contains("ok series inversion"));
    assert!(text.ends_with("all suites passed\n"));
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        vec!["ci-table", "--codim", "2", "--max-degree", "7"],
        vec!["lines", "--n", "5", "--method", "all"],
        vec!["genfun", "--terms", "5"],
    ] {
        let a = fano(&args);
        let b = fano(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(fano(&["lines"]).status.code(), Some(1));
    assert_eq!(fano(&["lines", "--n", "abc"]).status.code(), Some(1));
    assert_eq!(fano(&["nonsense"]).status.code(), Some(1));
    assert_eq!(fano(&["--help"]).status.code(), Some(0));
}
