//! Perfect dominating sets of paths, grouped by size.

use perfect_coalition::domination::{domination_numbers, enumerate_perfect_dominating_sets};
use perfect_coalition::families::{generate, FamilySpec};

fn main() {
    for n in [8, 13] {
        let g = generate(&FamilySpec::Path(n)).unwrap();
        let d = domination_numbers(&g);
        println!("P_{n}: gamma = {}, gamma_p = {}", d.gamma, d.gamma_p);
        for k in d.gamma_p..=d.gamma_p + 1 {
            let sets = enumerate_perfect_dominating_sets(&g, k);
            println!("  size {k}: {} sets", sets.len());
            for s in sets.iter().take(4) {
                println!("    {s}");
            }
        }
    }
}
