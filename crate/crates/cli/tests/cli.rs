use std::io::Write;
use std::process::{Command, Output};

use sigma_core::{from_graph6, sigma1};

fn sigma(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sigma"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn star_sigma1() {
    let o = sigma(&["sigma", "--k", "1", "--family", "star", "--n", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "7\n");
}

#[test]
fn families_by_both_methods() {
    for (args, want) in [
        (vec!["--family", "complete", "--n", "4"], "6\n"),
        (vec!["--family", "k4-e"], "5\n"),
        (vec!["--family", "bipartite", "--r", "2", "--s", "2"], "4\n"),
        (vec!["--family", "cycle", "--n", "3"], "3\n"),
    ] {
        for method in ["brute", "recursive", "auto"] {
            let mut full = vec!["sigma", "--k", "1", "--method", method];
            full.extend(&args);
            let o = sigma(&full);
            assert_eq!(stdout(&o), want, "{full:?}");
        }
    }
}

#[test]
fn verify_main_small() {
    let o = sigma(&["verify", "--statement", "main", "--max-n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("PASS"), "{out}");
    // K3, K2,2, K2,3, K2,4
    assert!(out.contains("witnesses: Bw C] DFw E?~o"), "{out}");
}

#[test]
fn missing_file_is_usage_error() {
    let o = sigma(&["sigma", "--edges", "/definitely/not/here.txt"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not/here.txt"));
}

#[test]
fn malformed_graph6_names_line() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "Bw\nDQc\n!!").unwrap();
    let o = sigma(&["sigma", "--graph6", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains(":3:"), "{}", stderr(&o));
}

#[test]
fn edge_list_input() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "# P4\n4\n0 1\n1 2\n2 3").unwrap();
    let o = sigma(&["sigma", "--k", "1", "--edges", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "5\n");

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    writeln!(bad, "3\n0 1\n0 7").unwrap();
    let o = sigma(&["sigma", "--edges", bad.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
}

#[test]
fn recursion_refuses_k_two() {
    let o = sigma(&["sigma", "--k", "2", "--method", "recursive", "--family", "cycle", "--n", "6"]);
    assert_eq!(o.status.code(), Some(2));
    let o = sigma(&["sigma", "--k", "2", "--family", "cycle", "--n", "6"]);
    assert_eq!(stdout(&o), "15\n");
}

#[test]
fn records_independent_of_workers() {
    let base = ["verify", "--statement", "all", "--max-n", "7", "--format", "records"];
    let runs: Vec<String> = ["1", "2", "4"]
        .iter()
        .map(|w| {
            let mut args = base.to_vec();
            args.extend(["--workers", w]);
            let o = sigma(&args);
            assert_eq!(o.status.code(), Some(0));
            stdout(&o)
        })
        .collect();
    assert_eq!(runs[0], runs[1]);
    assert_eq!(runs[0], runs[2]);
    assert_eq!(runs[0].lines().count(), 6);
}

#[test]
fn records_parse_back() {
    let o = sigma(&["verify", "--max-n", "6", "--format", "records"]);
    for line in stdout(&o).lines() {
        let r = sigma_core::verify::VerificationReport::parse_record(line).unwrap();
        assert_eq!(r.to_record(), line);
    }
}

#[test]
fn generated_graph6_feeds_back() {
    let gen = sigma(&["gen", "--connected", "5"]);
    assert_eq!(gen.status.code(), Some(0));
    let text = stdout(&gen);
    assert_eq!(text.lines().count(), 21);
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    let o = sigma(&["sigma", "--k", "1", "--graph6", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let values: Vec<u64> = stdout(&o).lines().map(|l| l.parse().unwrap()).collect();
    let expected: Vec<u64> = text
        .lines()
        .map(|l| sigma1(&from_graph6(l).unwrap()).unwrap())
        .collect();
    assert_eq!(values, expected);
}

#[test]
fn external_corpus_for_verify() {
    let text = stdout(&sigma(&["gen", "--connected", "6"]));
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    let path = f.path().to_str().unwrap();
    let o = sigma(&["verify", "--statement", "main", "--max-n", "6", "--graph6", path, "--format", "records"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("graphs_checked=112"), "{}", stdout(&o));
}

#[test]
fn verify_beyond_builtin_needs_file() {
    let o = sigma(&["verify", "--max-n", "9"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn counterexample_exits_one() {
    // K1 is connected, has no edge, so it is not good while σ1 = m = 0
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "@").unwrap();
    let path = f.path().to_str().unwrap();
    let o = sigma(&["verify", "--statement", "sigma1-ge-m", "--min-n", "1", "--max-n", "1", "--graph6", path]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn good_report() {
    let o = sigma(&["good", "--family", "path", "--n", "4", "--format", "records"]);
    assert_eq!(stdout(&o), "graph6=Ch\tgood=false\tedges=3\tbad_edges=0-1:3,2-3:0\n");
}

#[test]
fn help_and_bad_flags() {
    assert_eq!(sigma(&["--help"]).status.code(), Some(0));
    assert_eq!(sigma(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(sigma(&["sigma"]).status.code(), Some(2));
}
