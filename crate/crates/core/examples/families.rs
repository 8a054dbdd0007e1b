//! Named families and the recognizers for graphs with PRC(G) = n.

use perfect_coalition::families::{family_membership, generate, FamilySpec};
use perfect_coalition::prc_solve;

fn main() {
    for text in ["t1:3", "t2:2,3,1", "b:2,2", "kmk2:3", "gdelta:4", "tree-r", "cycle:6", "kbip:2,4"] {
        let spec: FamilySpec = text.parse().unwrap();
        let g = generate(&spec).unwrap();
        let m = family_membership(&g);
        println!(
            "{spec:<10} n = {:>2}  PRC = {:>2}  family B: {:<5}  T1/T2: {:?}",
            g.n(),
            prc_solve(&g).unwrap().prc,
            m.in_b(),
            m.t_class
        );
    }
}
