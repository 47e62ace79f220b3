//! End-to-end tests of the `signed-wiener` binary: reference values, exit
//! codes, output formats, determinism across thread counts, and the
//! edge-list round trip.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_signed-wiener"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

#[test]
fn wiener_family_nice_signing() {
    let out = run(&["wiener", "family", "--spec", "3,4,4,4,4,4", "--signing", "nice"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("n = 30"), "{text}");
    assert!(text.contains("W_sigma = 222"), "{text}");
}

#[test]
fn wiener_alternating_path() {
    let out = run(&["wiener", "path", "--n", "30", "--signing", "alternating"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("W_sigma = 225"));
}

#[test]
fn wiener_positive_path_matches_classic() {
    let out = run(&["wiener", "path", "--n", "4", "--signing", "positive"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("W_sigma = 10"), "{text}");
    assert!(text.contains("W_classic = 10"), "{text}");
}

#[test]
fn wiener_positive_path_beyond_bitmask_width() {
    // paths longer than 64 edges must still work for every signing choice
    let out = run(&["wiener", "path", "--n", "100", "--signing", "positive"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("W_sigma = 166650")); // 100 * 9999 / 6
}

#[test]
fn wiener_json_format_and_histogram() {
    let out = run(&[
        "wiener",
        "family",
        "--spec",
        "3,4,4,4,4,4",
        "--format",
        "json",
        "--histogram",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["W_sigma"], 222);
    assert_eq!(value["n"], 30);
    let hist: Vec<u64> = value["histogram"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect();
    assert_eq!(hist.iter().sum::<u64>(), 30 * 29 / 2);
    // distances on this tree are 0, 1 or 2
    assert_eq!(hist.len(), 3);
}

#[test]
fn verify_sweep_passes_and_exits_zero() {
    let out = run(&["verify", "--from", "30", "--to", "100"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("71 rows: 71 PASS, 0 TIE, 0 FAIL"), "{text}");
}

#[test]
fn verify_margin_at_31() {
    let out = run(&["verify", "--from", "31", "--to", "31", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("n,W_family,W_path,margin,verdict\n"), "{text}");
    assert!(text.contains("31,238,240,2,PASS"), "{text}");
}

#[test]
fn verify_fails_below_30_with_exit_one() {
    let out = run(&["verify", "--from", "29", "--to", "29"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn verify_rejects_bad_range() {
    let out = run(&["verify", "--from", "10", "--to", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn search_global_small_order() {
    let out = run(&["search", "global", "--n", "4"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["n"], 4);
    assert_eq!(value["min_W"], 4);
    assert_eq!(value["baseline_W_alpha"], 4);
    assert_eq!(value["conjecture_status"], "HOLDS_UNIQUE");
    assert_eq!(value["witnesses"].as_array().unwrap().len(), 1);
}

#[test]
fn search_wstar_on_path() {
    let out = run(&["search", "wstar", "--path", "10"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["min_W"], 25);
}

#[test]
fn search_wstar_cap_exceeded_exits_three() {
    let out = run(&["search", "wstar", "--path", "30"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("instance too large"));
}

#[test]
fn search_wstar_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p4.txt");
    std::fs::write(&path, "0 1 +\n1 2 +\n2 3 +\n").unwrap();
    let out = run(&["search", "wstar", "--file", path.to_str().unwrap()]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["min_W"], 4);
    assert_eq!(value["optimal_count"], 2);
    assert_eq!(value["witness"], serde_json::json!([1, -1, 1]));
}

#[test]
fn search_wstar_requires_exactly_one_host() {
    let out = run(&["search", "wstar"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["search", "wstar", "--path", "4", "--spec", "1,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn search_output_is_identical_across_thread_counts() {
    let one = run(&["search", "global", "--n", "8", "--threads", "1"]);
    let four = run(&["search", "global", "--n", "8", "--threads", "4"]);
    assert!(one.status.success() && four.status.success());
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn asymptotics_smallest_family() {
    let out = run(&["asymptotics", "--kmax", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,W,ratio,lower_bound");
    assert_eq!(lines.len(), 3, "{text}");
    assert!(lines[1].starts_with("2,1,"), "{text}");
    assert!(lines[2].starts_with("4,5,"), "{text}");
}

#[test]
fn asymptotics_csv_file_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ratios.csv");
    let out = run(&["asymptotics", "--kmax", "40", "--csv", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("n,W,ratio,lower_bound\n"));
    assert_eq!(text.lines().count(), 81); // header + 2 rows per k
}

#[test]
fn dump_edges_round_trips_through_file_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tree.txt");
    let first = run(&[
        "wiener",
        "family",
        "--spec",
        "3,4,4,4,4,4",
        "--signing",
        "nice",
        "--dump-edges",
        path.to_str().unwrap(),
    ]);
    assert!(first.status.success());
    let second = run(&["wiener", "file", path.to_str().unwrap()]);
    assert!(second.status.success());
    assert_eq!(stdout(&first), stdout(&second));
}

#[test]
fn malformed_file_reports_line_and_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "0 1 +\n1 2 oops\n").unwrap();
    let out = run(&["wiener", "file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 2"), "{}", stderr(&out));
}

#[test]
fn missing_file_exits_two() {
    let out = run(&["wiener", "file", "/nonexistent/tree.txt"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn signing_choice_is_validated_per_source() {
    let out = run(&["wiener", "path", "--n", "4", "--signing", "nice"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["wiener", "family", "--spec", "1,1", "--signing", "alternating"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn seeded_random_signing_is_reproducible() {
    let args = [
        "wiener",
        "family",
        "--spec",
        "4,4,4,4",
        "--signing",
        "nice-random",
        "--seed",
        "17",
        "--format",
        "json",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    // any balanced signing of the same tree has the same index
    let value: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    let canonical = run(&["wiener", "family", "--spec", "4,4,4,4", "--format", "json"]);
    let canon_value: serde_json::Value =
        serde_json::from_str(&stdout(&canonical)).unwrap();
    assert_eq!(value["W_sigma"], canon_value["W_sigma"]);
}

#[test]
fn out_flag_writes_file_instead_of_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.txt");
    let out = run(&[
        "verify",
        "--from",
        "30",
        "--to",
        "32",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("3 rows: 3 PASS"));
}

#[test]
fn unknown_subcommand_exits_two() {
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}
