//! PRC of a graph given as graph6 (default: the Petersen graph).
//!
//! cargo run --example compute_prc -- 'IheA@GUAo'

use perfect_coalition::graph::parse_graph6;
use perfect_coalition::prc_solve;

fn main() {
    let g6 = std::env::args().nth(1).unwrap_or_else(|| "IheA@GUAo".to_string());
    let g = parse_graph6(&g6).expect("valid graph6");
    let result = prc_solve(&g).expect("n <= 20");
    println!("n = {}, m = {}, PRC = {}", g.n(), g.edge_count(), result.prc);
    if let Some(cert) = &result.certificate {
        for (block, role) in cert.partition.blocks().iter().zip(&cert.roles) {
            println!("  {block}  {role:?}");
        }
    }
    println!("search nodes: {}", result.stats.nodes);
}
