//! Graph lists compiled into the binary so the suites need no external
//! generator. Both files hold one graph6 record per line, one graph per
//! isomorphism class, ordered by vertex count.

use crate::graph::{parse_graph6, Graph};

const GRAPHS_UPTO7: &str = include_str!("../../fixtures/graphs_upto7.g6");
const TREES_UPTO9: &str = include_str!("../../fixtures/trees_upto9.g6");

/// Unlabeled graph counts for `n = 1..=7`.
pub const GRAPH_COUNTS: [usize; 7] = [1, 2, 4, 11, 34, 156, 1044];
/// Free tree counts for `n = 1..=9`.
pub const TREE_COUNTS: [usize; 9] = [1, 1, 1, 2, 3, 6, 11, 23, 47];

fn parse_all(text: &str) -> Vec<Graph> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| parse_graph6(l.trim()).expect("fixture records are valid graph6"))
        .collect()
}

/// Every graph with 1 to 7 vertices, up to isomorphism.
pub fn graphs_upto7() -> Vec<Graph> {
    parse_all(GRAPHS_UPTO7)
}

/// Every free tree with 1 to 9 vertices, up to isomorphism.
pub fn trees_upto9() -> Vec<Graph> {
    parse_all(TREES_UPTO9)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(graphs: &[Graph], max: usize) -> Vec<usize> {
        (1..=max).map(|n| graphs.iter().filter(|g| g.n() == n).count()).collect()
    }

    #[test]
    fn fixture_counts() {
        assert_eq!(counts(&graphs_upto7(), 7), GRAPH_COUNTS);
        let trees = trees_upto9();
        assert_eq!(counts(&trees, 9), TREE_COUNTS);
        assert!(trees.iter().all(|t| t.is_connected() && t.edge_count() + 1 == t.n()));
    }
}
