//! End-to-end tests of the `domord` binary: output bytes and the exit-code
//! contract (0 success/true, 1 false verdict, 2 error).

use std::process::{Command, Output};

fn domord(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_domord"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("exit code")
}

#[test]
fn transform_prints_the_sorted_offsets() {
    let out = domord(&["transform", "4,2,1,0", "--k", "3"]);
    assert_eq!(stdout(&out), "3,2,1,1\n");
    assert_eq!(exit_code(&out), 0);

    let out = domord(&["transform", "4,1,1,1", "--k", "4"]);
    assert_eq!(stdout(&out), "3,3,3,0\n");

    let out = domord(&["transform", "5", "--k", "0"]);
    assert_eq!(stdout(&out), "5\n");
}

#[test]
fn transform_accepts_negative_k_and_len_padding() {
    let out = domord(&["transform", "3,1", "--k", "-2"]);
    assert_eq!(stdout(&out), "5,3\n");

    // padding first changes the output length: the extra zero becomes a 1
    let out = domord(&["transform", "4,2,1", "--len", "4", "--k", "1"]);
    assert_eq!(stdout(&out), "3,1,1,0\n");

    let out = domord(&["transform", "0", "--k", "2"]);
    assert_eq!(stdout(&out), "2\n");
}

#[test]
fn transform_json_lists_the_values() {
    let out = domord(&["transform", "4,2,1,0", "--k", "2", "--format", "json"]);
    assert_eq!(stdout(&out), "{\"sequence\":[2,2,1,0]}\n");
}

#[test]
fn dominates_exit_codes_follow_the_verdict() {
    let out = domord(&["dominates", "4,2,1,0", "4,1,1,1"]);
    assert_eq!(stdout(&out), "true\n");
    assert_eq!(exit_code(&out), 0);

    let out = domord(&["dominates", "1", "1"]);
    assert_eq!(stdout(&out), "true\n");
    assert_eq!(exit_code(&out), 0);

    let out = domord(&["dominates", "2,2,2", "3,1,1,1"]);
    assert_eq!(stdout(&out), "false\n");
    assert_eq!(exit_code(&out), 1);
}

#[test]
fn parse_failures_exit_two_and_name_the_token() {
    let out = domord(&["dominates", "4,x,1", "1"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("'x'"), "stderr: {}", stderr(&out));

    let out = domord(&["dominates", "4,-2", "1"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("'-2'"));

    let out = domord(&["dominates", "", "1"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("empty"));

    let out = domord(&["transform", "4,,1", "--k", "1"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn unsorted_input_is_rejected_unless_requested() {
    let out = domord(&["dominates", "1,3", "2,2"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("--unsorted"));

    let out = domord(&["--unsorted", "dominates", "1,3", "2,2"]);
    assert_eq!(stdout(&out), "true\n");
    assert_eq!(exit_code(&out), 0);
}

#[test]
fn covers_reports_the_move_in_json() {
    let out = domord(&["covers", "4,2,1,0", "4,1,1,1", "--format", "json"]);
    assert_eq!(
        stdout(&out),
        "{\"covers\":true,\"move\":{\"i\":2,\"j\":4,\"adjacent\":false,\"equal_parts\":true}}\n"
    );
    assert_eq!(exit_code(&out), 0);

    let out = domord(&["covers", "4", "2,2", "--format", "json"]);
    assert_eq!(stdout(&out), "{\"covers\":false,\"move\":null}\n");
    assert_eq!(exit_code(&out), 1);

    let out = domord(&["covers", "2,2", "2,1,1"]);
    assert_eq!(stdout(&out), "true\n");
}

#[test]
fn chain_prints_one_partition_per_line() {
    let out = domord(&["chain", "4", "1,1,1,1"]);
    assert_eq!(stdout(&out), "4\n3,1\n2,2\n2,1,1\n1,1,1,1\n");
    assert_eq!(exit_code(&out), 0);

    let out = domord(&["chain", "3,1", "3,1"]);
    assert_eq!(stdout(&out), "3,1\n");

    let out = domord(&["chain", "2", "1"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("weights differ"));

    let out = domord(&["chain", "2,2", "3,1"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("does not dominate"));

    let out = domord(&["chain", "4", "1,1,1,1", "--format", "json"]);
    assert_eq!(
        stdout(&out),
        "{\"chain\":[\"4\",\"3,1\",\"2,2\",\"2,1,1\",\"1,1,1,1\"]}\n"
    );
}

#[test]
fn verify_plain_report_and_exit() {
    let out = domord(&["verify", "3"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("n: 3"));
    assert!(text.contains("counterexamples: 0"));
    assert!(text.contains("result: ok"));

    let out = domord(&["verify", "0"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("pairs_checked: 1"));
}

#[test]
fn verify_honors_the_bound_and_the_override() {
    let out = domord(&["verify", "50"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("safety bound"));
    assert!(stderr(&out).contains("--max-n"));

    // The override can also lower the bound.
    let out = domord(&["verify", "7", "--max-n", "6"]);
    assert_eq!(exit_code(&out), 2);

    let out = domord(&["verify", "7", "--max-n", "7"]);
    assert_eq!(exit_code(&out), 0);
}

#[test]
fn verify_json_matches_the_schema() {
    let out = domord(&["verify", "4", "--json"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    let doc: serde_json::Value = serde_json::from_str(text.trim()).expect("valid json");
    assert_eq!(doc["n"], 4);
    assert_eq!(doc["k_max"], 5);
    assert_eq!(doc["counterexamples"].as_array().unwrap().len(), 0);
    assert_eq!(doc["elapsed_ms"], 0);
    let histogram = doc["case_histogram"].as_object().unwrap();
    for key in [
        "k_below",
        "k_equals_lower_only",
        "k_equals_both",
        "k_between",
        "k_above",
    ] {
        assert!(histogram.contains_key(key), "missing {key}");
    }
    // --format json spells the same thing
    let out2 = domord(&["verify", "4", "--format", "json"]);
    assert_eq!(stdout(&out2), text);
}

#[test]
fn verify_k_max_overrides_the_range() {
    let out = domord(&["verify", "5", "--k-max", "3"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("k_max: 3"));
}

#[test]
fn verify_twelve_is_clean_in_json() {
    let out = domord(&["verify", "12", "--json"]);
    assert_eq!(exit_code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(doc["n"], 12);
    assert_eq!(doc["k_max"], 13);
    assert_eq!(doc["counterexamples"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_accepts_thread_counts() {
    let out = domord(&["verify", "6", "--threads", "4"]);
    assert_eq!(exit_code(&out), 0);

    let out = domord(&["verify", "6", "--threads", "0"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn hasse_formats() {
    let out = domord(&["hasse", "3", "--format", "dot"]);
    assert_eq!(
        stdout(&out),
        "digraph hasse_3 {\n  rankdir=TB;\n  \"3\";\n  \"2,1\";\n  \"1,1,1\";\n  \"3\" -> \"2,1\";\n  \"2,1\" -> \"1,1,1\";\n}\n"
    );

    let out = domord(&["hasse", "0", "--format", "dot"]);
    assert_eq!(
        stdout(&out),
        "digraph hasse_0 {\n  rankdir=TB;\n  \"0\";\n}\n"
    );

    let out = domord(&["hasse", "4"]);
    assert_eq!(
        stdout(&out),
        "4 -> 3,1\n3,1 -> 2,2\n2,2 -> 2,1,1\n2,1,1 -> 1,1,1,1\n"
    );

    let out = domord(&["hasse", "3", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(doc["nodes"].as_array().unwrap().len(), 3);
    assert_eq!(doc["edges"].as_array().unwrap().len(), 2);
    assert_eq!(doc["edges"][0]["upper"], "3");
    assert_eq!(doc["edges"][0]["lower"], "2,1");
}

#[test]
fn dot_is_rejected_outside_hasse() {
    for args in [
        vec!["transform", "3,1", "--k", "1", "--format", "dot"],
        vec!["dominates", "2", "2", "--format", "dot"],
        vec!["covers", "2", "2", "--format", "dot"],
        vec!["chain", "2", "2", "--format", "dot"],
        vec!["verify", "2", "--format", "dot"],
    ] {
        let out = domord(&args);
        assert_eq!(exit_code(&out), 2, "args: {args:?}");
        assert!(stderr(&out).contains("hasse"));
    }
}

#[test]
fn printed_partitions_reparse_to_equal_values() {
    // chain output lines are valid partition texts
    let out = domord(&["chain", "5,3", "4,4"]);
    for line in stdout(&out).lines() {
        let reparse = domord(&["dominates", line, line]);
        assert_eq!(exit_code(&reparse), 0, "line: {line}");
    }
}

#[test]
fn closing_stdout_early_does_not_panic() {
    use std::io::Read;
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_domord"))
        .args(["verify", "12"])
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut out = child.stdout.take().unwrap();
    let mut buffer = [0u8; 8];
    let _ = out.read(&mut buffer).unwrap();
    drop(out); // close the pipe while the report is still printing
    child.wait().unwrap();
    let mut err_text = String::new();
    child
        .stderr
        .take()
        .unwrap()
        .read_to_string(&mut err_text)
        .unwrap();
    assert!(!err_text.contains("panicked"), "stderr: {err_text}");
}

#[test]
fn unknown_arguments_exit_two() {
    let out = domord(&["transform", "3,1"]);
    assert_eq!(exit_code(&out), 2); // missing --k

    let out = domord(&["frobnicate"]);
    assert_eq!(exit_code(&out), 2);

    let out = domord(&["transform", "3,1", "--k", "1.5"]);
    assert_eq!(exit_code(&out), 2); // non-integer k rejected at parse time
}
