use std::io::Write;
use std::process::{Command, Output, Stdio};

fn wilf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wilf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn wilf_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_wilf"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn count_prints_bfile_rows() {
    let o = wilf(&["count", "--n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "6 7\n");

    let o = wilf(&["count", "--upto", "6", "--algorithm", "brute"]);
    assert_eq!(stdout(&o), "0 1\n1 1\n2 2\n3 2\n4 4\n5 5\n6 7\n");

    let o = wilf(&["count", "--n", "6", "--by-r"]);
    assert_eq!(stdout(&o), "6 7\n# r=1 4\n# r=2 3\n");
}

#[test]
fn every_algorithm_agrees_from_the_command_line() {
    let outputs: Vec<String> = ["dp", "memo", "dual", "brute"]
        .iter()
        .map(|a| stdout(&wilf(&["count", "--upto", "30", "--algorithm", a])))
        .collect();
    assert!(outputs.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn enumerate_and_fixed_points_emit_json_lines() {
    let o = wilf(&["enumerate", "--n", "6"]);
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 7);
    assert!(lines.contains(&r#"{"n":6,"terms":[[1,2],[4,1]]}"#.to_string()));

    let o = wilf(&["fixed-points", "--n", "10"]);
    assert!(stdout(&o).lines().any(|l| l == r#"{"n":10,"terms":[[1,3],[2,2],[3,1]]}"#));
}

#[test]
fn involution_reads_stdin() {
    let o = wilf_stdin(
        &["involution"],
        "{\"n\":83,\"terms\":[[1,7],[4,4],[5,12]]}\n\n{\"n\":5,\"terms\":[[5,1]]}\n",
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "{\"n\":83,\"terms\":[[4,4],[7,1],[12,5]]}\n{\"n\":5,\"terms\":[[1,5]]}\n"
    );

    let o = wilf_stdin(&["involution"], "{\"n\":3,\"terms\":[[1,1],[2,1]]}\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("multiplicity 1"));
}

#[test]
fn ratio_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ratio.csv");
    let o = wilf(&["ratio", "--from", "31", "--to", "60", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,f_digits,ratio");
    assert_eq!(lines.len(), 31);
    assert!(lines[1].starts_with("31,4,0."));

    let again = stdout(&wilf(&["ratio", "--from", "31", "--to", "60"]));
    assert_eq!(again, text);
}

#[test]
fn monotone_and_bounds_report() {
    let o = wilf(&["monotone", "--upto", "120"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0 violations for n <= 120\n");

    let o = wilf(&["bounds", "--n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("r_max 2\n"));
    assert!(text.contains("n_min(2) = 4 <= 6 < n_min(3) = 10\n"));
    assert!(text.ends_with("7 <= 52\n"));
}

#[test]
fn lower_bound_prints_a_json_report() {
    let o = wilf(&[
        "lower-bound", "--n", "10000", "--k", "2", "--epsilon", "0.25", "--samples", "100", "--seed", "5",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["params"]["b"], 15);
    assert_eq!(v["valid"], 100);
    assert_eq!(v["all_distinct"], true);
    assert_eq!(v["lower_bound_digits"], 25);

    let o = wilf(&["lower-bound", "--n", "7", "--k", "1", "--epsilon", "0.01"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_against_bundled_and_corrupted_files() {
    let o = wilf(&["verify", "--upto", "80"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["checked"], 81);
    assert!(v["mismatch"].is_null());

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b.txt");
    std::fs::write(&path, "0 1\n1 1\n2 2\n3 2\n4 4\n5 6\n6 7\n").unwrap();
    let o = wilf(&["verify", "--bfile", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["mismatch"]["n"], 5);

    let o = wilf(&["verify", "--bfile", path.to_str().unwrap(), "--upto", "7"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn resource_caps_exit_with_three() {
    assert_eq!(wilf(&["count", "--n", "80", "--algorithm", "memo", "--memo-cap", "10"]).status.code(), Some(3));
    assert_eq!(wilf(&["count", "--n", "80", "--memo-cap", "10"]).status.code(), Some(3));
    assert_eq!(wilf(&["count", "--n", "30", "--algorithm", "dual", "--dual-limit", "20"]).status.code(), Some(3));
    assert_eq!(wilf(&["count", "--n", "30", "--algorithm", "brute", "--brute-cap", "100"]).status.code(), Some(3));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(wilf(&["count"]).status.code(), Some(2));
    assert_eq!(wilf(&["count", "--n", "5", "--algorithm", "fast"]).status.code(), Some(2));
    assert_eq!(wilf(&["enumerate", "--n", "0"]).status.code(), Some(2));
    assert_eq!(wilf(&["frobnicate"]).status.code(), Some(2));
}
