//! Runs the named verification suites (all of them by default).
//!
//! cargo run --release --example theorem_suites -- trees pds

use perfect_coalition::harness::{cmd_verify, SUITES};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let names: Vec<&str> = if args.is_empty() { SUITES.to_vec() } else { args.iter().map(String::as_str).collect() };
    for name in names {
        let report = cmd_verify(name).unwrap();
        println!("{}", report.summary());
        for f in &report.failures {
            println!("  {}: expected {}, got {}", f.graph6, f.expected, f.got);
        }
        for note in &report.notes {
            println!("  note: {note}");
        }
    }
}
