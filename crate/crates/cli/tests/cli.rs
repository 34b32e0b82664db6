use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn treelike(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_treelike")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = treelike(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn analyze_reports_the_cycle_values() {
    let v = json(&["analyze", "cycle:8"]);
    assert_eq!(v["slimness"], 2);
    assert_eq!(v["hyperbolicity_x2"], 4);
    assert_eq!(v["diameter"], 4);
    assert_eq!(v["cluster_diameter_max"]["value"], 4);
    assert_eq!(v["tree_length_bounds"]["lower"], 2);
    assert_eq!(v["tree_length_bounds"]["upper"], 5);
}

#[test]
fn analyze_exact_and_half_grid() {
    let v = json(&["analyze", "cycle:6", "--exact"]);
    assert_eq!(v["tree_length"], 2);
    assert_eq!(v["tree_breadth"], 2);
    let h = json(&["analyze", "halfgrid:4"]);
    assert_eq!(h["slimness"], 4);
    assert_eq!(h["cluster_diameter_max"]["value"], 8);
    assert_eq!(h["diameter"], 8);
}

#[test]
fn analyze_reads_edge_list_and_dimacs_files() {
    let dir = tempfile::tempdir().unwrap();
    let edges = dir.path().join("c5.txt");
    fs::write(&edges, "a b\nb c\nc d\nd e\ne a\n").unwrap();
    let dimacs = dir.path().join("c5.col");
    fs::write(&dimacs, "c five-cycle\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n").unwrap();
    let a = json(&["analyze", edges.to_str().unwrap()]);
    let b = json(&["analyze", dimacs.to_str().unwrap(), "--format", "dimacs"]);
    for v in [&a, &b] {
        assert_eq!(v["n"], 5);
        assert_eq!(v["slimness"], 1);
    }
}

#[test]
fn layering_writes_tree_and_dot() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("tree.dot");
    let out = treelike(&["layering", "cycle:8", "--tsv", "--dot", dot.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("cluster_diameter\t4"));
    assert_eq!(text.lines().filter(|l| l.starts_with("cluster\t")).count(), 5);
    let dot = fs::read_to_string(&dot).unwrap();
    assert!(dot.trim_start().starts_with("graph") || dot.trim_start().starts_with("digraph"));
    assert_eq!(dot.matches("--").count() + dot.matches("->").count(), 4);
}

#[test]
fn classify_reports_witness_and_bounds() {
    let v = json(&["classify", "cycle:6"]);
    assert_eq!(v["at_free"], false);
    assert_eq!(v["at_witness"], serde_json::json!(["0", "2", "4"]));
    let house = json(&["classify", "house"]);
    assert_eq!(house["chordality"], 4);
    assert_eq!(house["hhd_free"], false);
    assert_eq!(house["chordal"], false);
}

#[test]
fn generate_round_trips_through_analyze() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b.txt");
    let out = treelike(&["generate", "building:2", "-o", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "n\t7\nm\t9\n");
    let v = json(&["analyze", path.to_str().unwrap()]);
    assert_eq!((v["n"].as_u64(), v["m"].as_u64()), (Some(7), Some(9)));
}

#[test]
fn verify_reports_no_violations() {
    let v = json(&["verify", "--family", "block:10,4", "--trials", "5", "--seed", "1"]);
    assert_eq!(v["aggregates"]["graphs"], 5);
    assert_eq!(v["aggregates"]["violations"], 0);
    let out = treelike(&["verify", "--family", "cycle:6", "--tsv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("graph\tinequality\tlhs_x2\trhs_x2\tholds\tapplicable\ttight"));
}

#[test]
fn verify_over_a_directory() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("p.txt"), "0 1\n1 2\n").unwrap();
    fs::write(dir.path().join("k.txt"), "0 1\n1 2\n2 0\n").unwrap();
    let v = json(&["verify", "--input", dir.path().to_str().unwrap()]);
    assert_eq!(v["aggregates"]["graphs"], 2);
    assert_eq!(v["aggregates"]["violations"], 0);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| treelike(args).status.code();
    assert_eq!(code(&["--help"]), Some(0));
    assert_eq!(code(&["analyze"]), Some(2));
    assert_eq!(code(&["analyze", "nosuchfamily:3"]), Some(2));
    assert_eq!(code(&["verify", "--input", "/nonexistent/dir"]), Some(2));
    assert_eq!(code(&["layering", "cycle:5", "--source", "zz"]), Some(2));
    assert_eq!(code(&["analyze", "cycle:500"]), Some(3));
    assert_eq!(code(&["analyze", "cycle:12", "--exact"]), Some(3));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "0 1\n2\n").unwrap();
    assert_eq!(code(&["analyze", bad.to_str().unwrap()]), Some(2));
    let disconnected = dir.path().join("two.txt");
    fs::write(&disconnected, "0 1\n2 3\n").unwrap();
    assert_eq!(code(&["analyze", disconnected.to_str().unwrap()]), Some(2));
}
