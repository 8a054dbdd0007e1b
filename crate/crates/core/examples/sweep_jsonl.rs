//! A resumable JSONL sweep over every 5-vertex graph.

use std::fs;

use perfect_coalition::graph::encode_graph6;
use perfect_coalition::harness::fixtures::graphs_upto7;
use perfect_coalition::harness::{cmd_sweep, SweepOptions};

fn main() {
    let dir = std::env::temp_dir().join(format!("prc-sweep-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let (input, output) = (dir.join("n5.g6"), dir.join("n5.jsonl"));
    let body: String = graphs_upto7()
        .iter()
        .filter(|g| g.n() == 5)
        .map(|g| encode_graph6(g).unwrap() + "\n")
        .collect();
    fs::write(&input, body + "not-a-graph\n").unwrap();

    let opts = SweepOptions { with_c: true, ..Default::default() };
    let first = cmd_sweep(&input, &output, false, &opts).unwrap();
    println!("fresh: {first:?}");
    let again = cmd_sweep(&input, &output, true, &opts).unwrap();
    println!("resume: {again:?}");
    for line in fs::read_to_string(&output).unwrap().lines().take(3) {
        println!("{line}");
    }
    println!("{}", fs::read_to_string(&output).unwrap().lines().last().unwrap());
    fs::remove_dir_all(&dir).unwrap();
}
