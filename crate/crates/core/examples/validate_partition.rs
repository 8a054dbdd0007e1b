//! Checking hand-written partitions and reading off partner counts.

use perfect_coalition::coalition::{partners, validate_prc_partition};
use perfect_coalition::families::{generate, FamilySpec};
use perfect_coalition::Partition;

fn main() {
    let p6 = generate(&FamilySpec::Path(6)).unwrap();
    let candidates = [
        Partition::from_vertex_lists([vec![0, 3], vec![1, 2], vec![4], vec![5]]),
        Partition::from_vertex_lists([vec![0, 1, 2], vec![3, 4, 5]]),
        Partition::singletons(6),
    ];
    for p in &candidates {
        match validate_prc_partition(&p6, p) {
            Ok(cert) => {
                println!("{p}: prc-partition of order {}", cert.order());
                for i in 0..p.len() {
                    println!("  block {i} partners {:?}", partners(&p6, p, i).unwrap());
                }
            }
            Err(v) => println!("{p}: rejected, {v}"),
        }
    }
}
