//! Branch and bound against the exhaustive partition oracle on seeded
//! random graphs.

use std::time::Instant;

use perfect_coalition::harness::{oracle_random_graphs, ORACLE_SEED};
use perfect_coalition::{prc_bruteforce, prc_solve};

fn main() {
    let graphs = oracle_random_graphs();
    println!("{} graphs from seed {ORACLE_SEED:#x}", graphs.len());
    let (mut fast_ms, mut slow_ms) = (0u128, 0u128);
    for g in graphs.iter().step_by(50) {
        let t = Instant::now();
        let fast = prc_solve(g).unwrap();
        fast_ms += t.elapsed().as_micros();
        let t = Instant::now();
        let slow = prc_bruteforce(g).unwrap();
        slow_ms += t.elapsed().as_micros();
        assert_eq!(fast.certificate, slow.certificate);
        println!(
            "n = {} m = {:>2} PRC = {}  nodes {:>6} vs partitions {:>6}",
            g.n(),
            g.edge_count(),
            fast.prc,
            fast.stats.nodes,
            slow.stats.partitions_tested
        );
    }
    println!("branch and bound {fast_ms} us, oracle {slow_ms} us");
}
