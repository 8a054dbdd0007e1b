#![allow(dead_code)]

use perfect_coalition::families::{generate, FamilySpec};
use perfect_coalition::harness::fixtures::graphs_upto7;
use perfect_coalition::Graph;

pub fn family(spec: &str) -> Graph {
    generate(&spec.parse::<FamilySpec>().unwrap()).unwrap()
}

/// The labeled graph whose edge set is the bits of `mask` over the pairs
/// `(0,1), (0,2), ..., (n-2,n-1)`.
pub fn labeled(n: usize, mask: u64) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::new(n, pairs.enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| e)).unwrap()
}

pub fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
    (0..1u64 << (n * n.saturating_sub(1) / 2)).map(move |m| labeled(n, m))
}

/// `g` with vertices renamed by `perm` (`v` becomes `perm[v]`).
pub fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    Graph::new(g.n(), g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}

/// `g` plus a new last vertex joined to the vertices in `mask`.
pub fn extend(g: &Graph, mask: u64) -> Graph {
    let n = g.n();
    let new_edges = (0..n).filter(|&v| mask >> v & 1 == 1).map(|v| (v, n));
    Graph::new(n + 1, g.edges().chain(new_edges)).unwrap()
}

/// One representative of every 8-vertex isomorphism class (with repeats):
/// each 7-vertex graph extended by a vertex in every possible way.
pub fn graphs8_with_repeats() -> impl Iterator<Item = Graph> {
    graphs_upto7()
        .into_iter()
        .filter(|g| g.n() == 7)
        .flat_map(|g| (0..1u64 << 7).map(move |m| extend(&g, m)))
}
