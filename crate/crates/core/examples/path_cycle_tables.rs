//! Closed forms for paths and cycles next to the solver, plus the explicit
//! constructions for larger orders.

use perfect_coalition::coalition::validate_prc_partition;
use perfect_coalition::families::{construct_known_prc_partition, formula_prc_cycle, formula_prc_path, generate, FamilySpec, Line};
use perfect_coalition::prc_solve;

fn main() {
    println!(" n  P_n formula/solver  C_n formula/solver");
    for n in 1..=12 {
        let path = prc_solve(&generate(&FamilySpec::Path(n)).unwrap()).unwrap().prc;
        let cycle = (n >= 3).then(|| prc_solve(&generate(&FamilySpec::Cycle(n)).unwrap()).unwrap().prc);
        println!(
            "{n:>2}  {:>3?} / {path:<3}         {:>3?} / {:?}",
            formula_prc_path(n),
            formula_prc_cycle(n),
            cycle
        );
    }
    for (line, spec) in [(Line::Path, FamilySpec::Path(30)), (Line::Cycle, FamilySpec::Cycle(30))] {
        let g = generate(&spec).unwrap();
        let p = construct_known_prc_partition(line, 30).unwrap();
        let order = validate_prc_partition(&g, &p).unwrap().order();
        println!("{spec}: construction validates with {order} blocks");
    }
}
