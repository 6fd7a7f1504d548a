use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn latmax(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_latmax")).args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("JSON output")
}

fn gen(dir: &Path, shape: &str, n: usize, seed: u64) -> String {
    let path = dir.join(format!("{shape}-{n}-{seed}.json"));
    let p = path.to_str().unwrap();
    let out = latmax(&["gen", "random", "--shape", shape, "--n", &n.to_string(), "--seed", &seed.to_string(), "--out", p]);
    assert!(out.status.success());
    p.to_string()
}

#[test]
fn generation_is_deterministic() {
    let a = json_of(&latmax(&["gen", "random", "--shape", "path", "--n", "5", "--seed", "1"]));
    let b = json_of(&latmax(&["gen", "random", "--shape", "path", "--n", "5", "--seed", "1"]));
    assert_eq!(a, b);
    assert_eq!(a["meta"]["seed"], 1);
    let single = json_of(&latmax(&["gen", "random", "--shape", "tree", "--n", "1"]));
    assert_eq!(single["arcs"].as_array().unwrap().len(), 0);
    let tri = json_of(&latmax(&["gen", "random", "--shape", "cycle", "--n", "3"]));
    assert_eq!(tri["arcs"].as_array().unwrap().len(), 6);
}

#[test]
fn solve_then_simulate_reproduces_the_count() {
    let dir = tempfile::tempdir().unwrap();
    for (shape, seed) in [("path", 1), ("tree", 2), ("cycle", 3), ("complete", 4)] {
        let inst = gen(dir.path(), shape, 8, seed);
        let sol = json_of(&latmax(&["solve", &inst]));
        let seeds: Vec<String> =
            sol["target_set"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap().to_string()).collect();
        let trace = json_of(&latmax(&["simulate", &inst, "--seeds", &seeds.join(",")]));
        assert_eq!(trace["influenced_count"], sol["influenced_count"], "{shape}");
        let brute = json_of(&latmax(&["solve", &inst, "--topology", "brute"]));
        assert_eq!(brute["influenced_count"], sol["influenced_count"], "{shape}");
    }
}

#[test]
fn routing_reported_on_stderr() {
    let dir = tempfile::tempdir().unwrap();
    let inst = gen(dir.path(), "path", 6, 9);
    let out = latmax(&["solve", &inst]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("solver: path"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{ not json").unwrap();
    assert_eq!(latmax(&["solve", bad.to_str().unwrap()]).status.code(), Some(2));

    let path = gen(dir.path(), "path", 5, 1);
    assert_eq!(latmax(&["solve", &path, "--topology", "cycle"]).status.code(), Some(3));
    assert_eq!(latmax(&["simulate", &path, "--seeds", "99"]).status.code(), Some(3));

    let graph = dir.path().join("k.json");
    fs::write(&graph, r#"{"n": 4, "edges": [[0, 1], [1, 2]], "thresholds": [1, 1, 1, 1]}"#).unwrap();
    let k = dir.path().join("k-inst.json");
    let out = latmax(&["gen", "clique-embed", "--graph", graph.to_str().unwrap(), "--out", k.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(latmax(&["solve", k.to_str().unwrap()]).status.code(), Some(4));
    let brute = json_of(&latmax(&["solve", k.to_str().unwrap(), "--topology", "brute"]));
    assert_eq!(brute["influenced_count"], 3);
    assert_eq!(latmax(&["solve", "/nonexistent/file.json"]).status.code(), Some(1));
}

#[test]
fn knapsack_star_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("star.json");
    let p = p.to_str().unwrap();
    assert!(latmax(&["gen", "knapsack-star", "--items", "3:2,4:3", "--capacity", "3", "--bound", "4", "--out", p])
        .status
        .success());
    let sol = json_of(&latmax(&["solve", p]));
    assert_eq!(sol["influenced_count"], 3);
    assert_eq!(sol["cost"], 3);
}

#[test]
fn dump_tables_and_min_cost_query() {
    let dir = tempfile::tempdir().unwrap();
    let tree = gen(dir.path(), "tree", 6, 5);
    let dump = dir.path().join("mis.json");
    json_of(&latmax(&["solve", &tree, "--topology", "tree", "--dump-tables", dump.to_str().unwrap()]));
    let tables: Value = serde_json::from_str(&fs::read_to_string(&dump).unwrap()).unwrap();
    assert_eq!(tables["nodes"].as_array().unwrap().len(), 6);

    let path = gen(dir.path(), "path", 6, 5);
    let q = json_of(&latmax(&["query-min-cost", &path, "--alpha", "0"]));
    assert_eq!(q["min_cost"], 0);
    let q = json_of(&latmax(&["query-min-cost", &path, "--alpha", "7"]));
    assert_eq!(q["min_cost"], "inf");
}

#[test]
fn serial_and_parallel_cycles_agree() {
    let dir = tempfile::tempdir().unwrap();
    let inst = gen(dir.path(), "cycle", 10, 11);
    let run = |threads: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_latmax"))
            .env("LATMAX_THREADS", threads)
            .args(["solve", &inst])
            .output()
            .unwrap();
        json_of(&out)
    };
    assert_eq!(run("0"), run("4"));
}

#[test]
fn bench_reports_an_exponent() {
    let v = json_of(&latmax(&["bench", "--grid", "path-n", "--sizes", "64,128", "--reps", "1"]));
    assert!(v["exponent"].is_number());
    assert_eq!(latmax(&["bench", "--grid", "path-n", "--sizes", "64"]).status.code(), Some(2));
}
