//! End-to-end tests of the `ore-lab` binary: exit codes, output shapes, and
//! golden lines for the worked examples.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use ore_lab::canon::are_isomorphic;
use ore_lab::census::enumerate_graphs;
use ore_lab::graph6::to_graph6;
use ore_lab::ore::h7;
use ore_lab::Graph;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ore-lab")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("ore-lab-test-{}-{name}", std::process::id()));
    fs::write(&path, contents).expect("temp file writes");
    path
}

#[test]
fn check_reports_the_k4_facts() {
    let out = run(&["check", "C~"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("4-critical: true"));
    assert!(text.contains("ore-degree: 6"));
    assert!(text.contains("p(V) = 1.8 (scaled 9)"));
    assert!(text.contains(r#"{"leaf":"K4"}"#));
    for line in text.lines() {
        assert!(line.starts_with("C~ "), "every report line names its graph: {line}");
    }
}

#[test]
fn check_rejects_malformed_graph6() {
    let out = run(&["check", "???notgraph6"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("error"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&run(&["census", "--bogus-flag"])), 2);
    assert_eq!(code(&run(&["no-such-subcommand"])), 2);
    assert_eq!(code(&run(&["census"])), 2, "census needs --n or --input");
}

#[test]
fn potential_subset_out_of_range_exits_2() {
    let out = run(&["potential", "C~", "--subset", "9"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn potential_reports_min_and_witness() {
    let out = run(&["potential", "C~", "--min"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("\"p_scaled\":9"));
    assert!(text.contains("\"p\":\"1.8\""));
    assert!(text.contains("\"min_scaled\":9"));
    assert!(text.contains("\"min_witness\":[0,1,2,3]"));
}

#[test]
fn census_n7_passes() {
    let out = run(&["census", "--n", "7", "--jobs", "2"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("\"schema\":\"ore-lab/1\""));
    assert!(text.contains("\"pass\":true"));
    assert!(stderr(&out).contains("main-theorem: PASS"));
}

#[test]
fn census_ingests_files() {
    let k4 = to_graph6(&Graph::complete(4)).unwrap();
    let w5 = to_graph6(&Graph::wheel(5)).unwrap();
    let path = temp_file("mixed.g6", &format!("{k4}\n{w5}\n"));
    let out = run(&["census", "--input", path.to_str().unwrap(), "--checks", "main,bounds,structure"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("\"critical\":2"));

    let bad = temp_file("bad.g6", &format!("{k4}\n???bad???\n"));
    let out = run(&["census", "--input", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("line 2"));
}

#[test]
fn census_catches_a_corrupted_stream() {
    // Drop the 7-vertex 4-Ore graph from an otherwise complete stream: the
    // main-theorem section must fail, naming the missing graph, exit code 1.
    let mut lines = String::new();
    for g in enumerate_graphs(7).unwrap() {
        if !are_isomorphic(&g, &h7()) {
            lines.push_str(&to_graph6(&g).unwrap());
            lines.push('\n');
        }
    }
    let path = temp_file("dropped.g6", &lines);
    let out = run(&["census", "--input", path.to_str().unwrap(), "--checks", "main"]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("\"pass\":false"));
    assert!(text.contains("missing from the 4-critical stream"));
}

#[test]
fn gen_ore_random_is_seed_deterministic() {
    let args = ["gen-ore", "--max-n", "13", "--random", "--count", "3", "--seed", "11"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(stdout(&a), stdout(&b));
    let text = stdout(&a);
    assert!(text.lines().next().unwrap().contains("\"seed\":11"));
    assert_eq!(text.lines().count(), 4); // envelope + 3 graphs

    // 9 ≢ 1 (mod 3): no 4-Ore graph has nine vertices.
    assert_eq!(code(&run(&["gen-ore", "--max-n", "9", "--random"])), 2);
}

#[test]
fn gen_ore_exhaustive_lists_k4() {
    let out = run(&["gen-ore", "--max-n", "4"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].contains("\"mode\":\"exhaustive\""));
    assert!(lines[1].contains("\"graph6\":\"C~\""));
    assert!(lines[1].contains(r#""certificate":{"leaf":"K4"}"#));
}

#[test]
fn extend_streams_records() {
    let g6 = to_graph6(&h7()).unwrap();
    let out = run(&["extend", &g6, "--subset", "0,1,2,3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 1);
    assert!(text.contains("\"complete\":true"));
    assert!(text.contains("\"extender_g6\":\"C~\""));
    assert!(text.contains(&format!("\"graph6\":\"{g6}\"")));
}

#[test]
fn collapse_reports_the_complement() {
    let g6 = to_graph6(&h7()).unwrap();
    let out = run(&["collapse", &g6, "--subset", "0,1,2,3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("\"collapsible\":true"));
    assert!(text.contains("\"tight\":true"));
    assert!(text.contains("\"critical_complement_g6\":\"C~\""));

    // Non-4-critical hosts are an input error.
    let c5 = to_graph6(&Graph::cycle(5)).unwrap();
    assert_eq!(code(&run(&["collapse", &c5, "--subset", "0,1"])), 2);
}

#[test]
fn discharge_prints_transcript_and_totals() {
    let w5 = to_graph6(&Graph::wheel(5)).unwrap();
    let out = run(&["discharge", &w5]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 21); // 20 transfers + summary
    assert!(lines[0].contains("\"rule\":\"0\""));
    let last = lines.last().unwrap();
    assert!(last.contains("\"total_scaled\":4"));
    assert!(last.contains("\"final_scaled\":[3,3,3,3,3,-11]"));
}

#[test]
fn reduce_emits_the_record() {
    let w5 = to_graph6(&Graph::wheel(5)).unwrap();
    let out = run(&["reduce", &w5, "--v", "0", "--u1", "1", "--u2", "4"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("\"k_g6\":\"C~\""));
    assert!(text.contains("\"expansion\":[0,1,2,3,4,5]"));

    // Adjacent identification targets are an input error.
    assert_eq!(code(&run(&["reduce", &w5, "--v", "0", "--u1", "1", "--u2", "5"])), 2);
}

#[test]
fn at_file_graph_input() {
    let k4 = to_graph6(&Graph::complete(4)).unwrap();
    let path = temp_file("k4.g6", &format!("{k4}\n"));
    let arg = format!("@{}", path.to_str().unwrap());
    let out = run(&["check", &arg]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("4-critical: true"));

    let empty = temp_file("none.g6", "");
    let arg = format!("@{}", empty.to_str().unwrap());
    assert_eq!(code(&run(&["check", &arg])), 2);
}
