//! Domination and perfect domination.
//!
//! `S` dominates when `N[S] = V`. `S` is perfect dominating when every
//! vertex outside `S` has exactly one neighbor in `S`. For a nonempty graph
//! the empty set is neither; `V` itself is always perfect dominating.

use serde::Serialize;

use crate::graph::{Graph, VertexSet};

pub fn is_dominating(g: &Graph, s: VertexSet) -> bool {
    g.vertex_set().is_subset(g.closed_neighborhood(s))
}

pub fn is_perfect_dominating(g: &Graph, s: VertexSet) -> bool {
    let outside = g.vertex_set() - s;
    let cov = g.coverage(s);
    outside.is_subset(cov.once) && outside.is_disjoint(cov.twice)
}

/// `γ(G)` and `γ_p(G)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominationNumbers {
    pub gamma: usize,
    pub gamma_p: usize,
}

/// Exact domination numbers by increasing-size exhaustive search. Both are
/// 0 for the empty graph.
pub fn domination_numbers(g: &Graph) -> DominationNumbers {
    DominationNumbers {
        gamma: min_size(g, is_dominating),
        gamma_p: min_size(g, is_perfect_dominating),
    }
}

fn min_size(g: &Graph, pred: fn(&Graph, VertexSet) -> bool) -> usize {
    (0..=g.n())
        .find(|&k| KSubsets::new(g.n(), k).any(|s| pred(g, s)))
        .expect("V itself satisfies both predicates")
}

/// All perfect dominating sets of size `k`, ascending by mask value.
pub fn enumerate_perfect_dominating_sets(g: &Graph, k: usize) -> Vec<VertexSet> {
    KSubsets::new(g.n(), k)
        .filter(|&s| is_perfect_dominating(g, s))
        .collect()
}

/// The `k`-element subsets of `{0..n}` in ascending mask order (Gosper's hack).
#[derive(Clone, Debug)]
pub struct KSubsets {
    next: Option<u128>,
    limit: u128,
}

impl KSubsets {
    pub fn new(n: usize, k: usize) -> Self {
        assert!(n <= 64, "KSubsets supports universes of at most 64 elements");
        let next = (k <= n).then(|| (1u128 << k) - 1);
        KSubsets { next, limit: 1u128 << n }
    }
}

impl Iterator for KSubsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            let low = cur & cur.wrapping_neg();
            let ripple = cur + low;
            let succ = (((ripple ^ cur) >> 2) / low) | ripple;
            (succ < self.limit).then_some(succ)
        };
        Some(VertexSet::from_bits(cur as u64))
    }
}
