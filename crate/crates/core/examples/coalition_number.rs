//! PRC(G) beside the coalition number C(G).

use perfect_coalition::families::{generate, FamilySpec};
use perfect_coalition::prc_solve;
use perfect_coalition::solver::coalition_number_bruteforce;

fn main() {
    for text in ["path:6", "cycle:6", "complete:5", "star:4", "t1:3", "gdelta:3", "kbip:2,3"] {
        let spec: FamilySpec = text.parse().unwrap();
        let g = generate(&spec).unwrap();
        let prc = prc_solve(&g).unwrap().prc;
        let c = coalition_number_bruteforce(&g).unwrap();
        println!("{spec:<10} PRC = {prc}  C = {c}");
    }
}
