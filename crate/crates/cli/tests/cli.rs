//! End-to-end tests of the binary: exit codes, output shapes, determinism,
//! and the environment-variable size cap.

use std::process::{Command, Output};

fn andre(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_andre"))
        .args(args)
        .env_remove("ANDRE_SIZE_BOUND")
        .output()
        .expect("binary runs")
}

fn andre_with_bound(bound: &str, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_andre"))
        .args(args)
        .env("ANDRE_SIZE_BOUND", bound)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 output")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn trees_lists_all_five_images_of_size_four() {
    let output = andre(&["trees", "--n", "4"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout(&output);
    for image in ["(2 3 1 4)", "(1 2 3 4)", "(2 1 3 4)", "(1 3 2 4)", "(2 4 1 3)"] {
        assert!(text.contains(&format!("phi={image}")), "missing {image}:\n{text}");
    }
    assert!(text.trim_end().ends_with("count: 5"));
}

#[test]
fn trees_respects_the_environment_bound() {
    let output = andre_with_bound("5", &["trees", "--n", "6"]);
    assert_eq!(exit_code(&output), 2);
    assert!(stderr(&output).contains("ANDRE_SIZE_BOUND"));
    let output = andre_with_bound("5", &["trees", "--n", "5"]);
    assert_eq!(exit_code(&output), 0);
    let output = andre_with_bound("zebra", &["trees", "--n", "3"]);
    assert_eq!(exit_code(&output), 2);
}

#[test]
fn trees_rejects_size_zero() {
    assert_eq!(exit_code(&andre(&["trees", "--n", "0"])), 2);
}

#[test]
fn table_pretty_prints_the_triangle_and_agreement() {
    let output = andre(&["table", "--stat", "lr", "--n-max", "6"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout(&output);
    assert!(text.contains("n/m"));
    assert!(text.contains("25"), "row six should contain 25:\n{text}");
    assert!(text.contains("engine eco: agrees with brute"));
    assert!(text.contains("engine series: agrees with brute"));
}

#[test]
fn table_rl_runs_all_four_engines() {
    let output = andre(&["table", "--stat", "rl", "--n-max", "6"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout(&output);
    assert!(text.contains("38"));
    assert!(text.contains("engine recursion: agrees with brute"));
    assert!(text.contains("engine series: agrees with brute"));
}

#[test]
fn table_csv_carries_one_row_per_engine_and_cell() {
    let output = andre(&[
        "table", "--stat", "lr", "--n-max", "4", "--engine", "brute,eco", "--format", "csv",
    ]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout(&output);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,stat,count,engine");
    // 4 x 4 grid per engine, two engines
    assert_eq!(lines.len(), 1 + 16 * 2);
    assert!(lines.contains(&"4,3,3,brute"));
    assert!(lines.contains(&"4,3,3,eco"));
}

#[test]
fn table_json_is_parseable_with_string_counts() {
    let output = andre(&[
        "table", "--stat", "rl", "--n-max", "5", "--engine", "recursion", "--format", "json",
    ]);
    assert_eq!(exit_code(&output), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).expect("valid json");
    let tables = value.as_array().expect("array of tables");
    assert_eq!(tables.len(), 1);
    assert_eq!(tables[0]["engine"], "recursion");
    let entries = tables[0]["entries"].as_array().expect("entries");
    assert!(entries
        .iter()
        .any(|e| e["n"] == 5 && e["stat"] == 2 && e["count"] == "10"));
}

#[test]
fn table_output_is_deterministic() {
    let args = ["table", "--stat", "lr", "--n-max", "7", "--format", "csv"];
    let first = andre(&args);
    let second = andre(&args);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn table_rejects_the_recursion_engine_for_lr() {
    let output = andre(&["table", "--stat", "lr", "--n-max", "4", "--engine", "recursion"]);
    assert_eq!(exit_code(&output), 2);
}

#[test]
fn table_rejects_unknown_engines() {
    let output = andre(&["table", "--stat", "lr", "--n-max", "4", "--engine", "quantum"]);
    assert_eq!(exit_code(&output), 2);
}

#[test]
fn verify_passes_and_prints_per_property_lines() {
    let output = andre(&["verify", "--n-max", "5"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout(&output);
    assert!(text.contains("PASS tree-counts"));
    assert!(text.contains("PASS cross-engine-agreement"));
    assert!(!text.contains("FAIL"));
    assert!(text.contains("passed 25/25"));
}

#[test]
fn verify_locates_an_injected_fault() {
    let output = andre(&["verify", "--n-max", "5", "--inject-fault", "eco-lr-overcount"]);
    assert_eq!(exit_code(&output), 1);
    let text = stdout(&output);
    assert!(text.contains("FAIL cross-engine-agreement"));
    assert!(text.contains("(2, 1)"), "discrepancy must be located:\n{text}");
}

#[test]
fn verify_rejects_overdeep_sweeps() {
    assert_eq!(exit_code(&andre(&["verify", "--n-max", "40"])), 2);
}

#[test]
fn series_euler_dump_has_the_expected_prefix() {
    let output = andre(&["series", "--name", "euler", "--order", "9"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout(&output);
    for line in [
        "0! * coeff = 1",
        "3! * coeff = 2",
        "8! * coeff = 1385",
        "9! * coeff = 7936",
    ] {
        assert!(text.contains(line), "missing {line:?}:\n{text}");
    }
}

#[test]
fn series_cycle_dump_reaches_the_published_tail() {
    let output = andre(&["series", "--name", "cycle", "--order", "12"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout(&output);
    assert!(text.contains("11! * coeff = 10809786"));
    assert!(text.contains("12! * coeff = 92892928"));
}

#[test]
fn series_order_zero_prints_only_the_constant_term() {
    let output = andre(&["series", "--name", "euler", "--order", "0"]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(stdout(&output), "0 1/1\n0! * coeff = 1\n");
}

#[test]
fn series_ftilde_csv_contains_table_entries() {
    let output = andre(&["series", "--name", "ftilde", "--order", "4", "--format", "csv"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout(&output);
    assert!(text.starts_with("k,j,numerator,denominator,egf"));
    // (n-1)! [y^(m-1) z^(n-1)] at n = 5, m = 3 is the entry 7
    assert!(text.lines().any(|l| l.starts_with("4,2,") && l.ends_with(",7")));
}

#[test]
fn series_rejects_orders_beyond_the_cap() {
    assert_eq!(exit_code(&andre(&["series", "--name", "euler", "--order", "17"])), 2);
}

#[test]
fn series_rejects_unknown_names() {
    assert_eq!(exit_code(&andre(&["series", "--name", "zeta", "--order", "4"])), 2);
}

#[test]
fn f2_json_exposes_exact_rationals() {
    let output = andre(&["series", "--name", "f2", "--order", "7", "--format", "json"]);
    assert_eq!(exit_code(&output), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).expect("valid json");
    assert_eq!(value["name"], "f2");
    let coefficients = value["coefficients"].as_array().expect("array");
    // 7! [z^7] f2 = 165
    assert!(coefficients
        .iter()
        .any(|c| c["k"] == 7 && c["egf"] == "165"));
}
