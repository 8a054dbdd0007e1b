//! Immutable simple undirected graphs over at most 64 vertices.
//!
//! Vertices are the contiguous indices `0..n`. Every adjacency row is a
//! [`VertexSet`], so neighborhood unions, domination tests and the
//! "how many neighbors inside S" counts used throughout the crate are a
//! handful of word operations.

mod edge_list;
mod graph6;
mod iso;
mod vertex_set;

use std::collections::VecDeque;

use thiserror::Error;

pub use edge_list::{format_edge_list, parse_edge_list};
pub use graph6::{encode_graph6, parse_graph6, GRAPH6_MAX_VERTICES};
pub use iso::is_isomorphic;
pub use vertex_set::{Iter as VertexIter, VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    IndexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("malformed record: {0}")]
    MalformedRecord(String),
    #[error("graphs on {0} vertices are not supported (limit {limit})", limit = MAX_VERTICES)]
    UnsupportedSize(usize),
}

/// Vertices with at least one / at least two neighbors inside some set.
///
/// This is the primitive behind every domination-style predicate: a set
/// `S` is perfect dominating iff `V \ S ⊆ once` and `(V \ S) ∩ twice = ∅`.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct Coverage {
    pub once: VertexSet,
    pub twice: VertexSet,
}

impl Coverage {
    /// Coverage of the disjoint union of the two underlying sets.
    #[inline]
    pub fn merge(self, other: Coverage) -> Coverage {
        Coverage {
            once: self.once | other.once,
            twice: self.twice | other.twice | (self.once & other.once),
        }
    }

    /// Coverage after adding one more vertex with neighborhood `nbrs`.
    #[inline]
    pub fn push(self, nbrs: VertexSet) -> Coverage {
        Coverage {
            once: self.once | nbrs,
            twice: self.twice | (self.once & nbrs),
        }
    }
}

/// A simple undirected graph with bit-mask adjacency rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are errors.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(GraphError::UnsupportedSize(n));
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::IndexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph::from_rows(adj))
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        Graph::new(n, std::iter::empty())
    }

    /// Rows must already be symmetric and loop-free.
    pub(crate) fn from_rows(adj: Vec<VertexSet>) -> Graph {
        let degree_sum: usize = adj.iter().map(|r| r.len()).sum();
        debug_assert!(adj.iter().enumerate().all(|(v, r)| !r.contains(v)));
        Graph {
            n: adj.len(),
            adj,
            edge_count: degree_sum / 2,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// `V` as a set.
    #[inline]
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Open neighborhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighborhood `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (self.adj[u] - VertexSet::full(u + 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// `N[S]`: the set together with every vertex adjacent to it.
    pub fn closed_neighborhood(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(s, |acc, v| acc | self.adj[v])
    }

    /// Which vertices have at least one and at least two neighbors in `s`.
    #[inline]
    pub fn coverage(&self, s: VertexSet) -> Coverage {
        s.iter()
            .fold(Coverage::default(), |c, v| c.push(self.adj[v]))
    }

    /// Vertices reachable from `start`.
    pub fn component_of(&self, start: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = frontier
                .iter()
                .fold(VertexSet::EMPTY, |acc, v| acc | self.adj[v]);
            frontier = next - seen;
            seen |= frontier;
        }
        seen
    }

    /// Connected components, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut rest = self.vertex_set();
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.component_of(v);
            rest = rest - c;
            out.push(c);
        }
        out
    }

    /// The empty graph and `K_1` count as connected.
    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_of(0) == self.vertex_set()
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges()
            .all(|(u, v)| (self.adj[u] & self.adj[v]).is_empty())
    }

    /// Length of a shortest cycle, or `None` for a forest.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                if best.is_some_and(|b| 2 * dist[u] >= b) {
                    break;
                }
                for w in self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Degree-one vertices.
    pub fn leaves(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Vertices adjacent to at least one leaf.
    pub fn support_vertices(&self) -> VertexSet {
        self.leaves()
            .iter()
            .fold(VertexSet::EMPTY, |acc, x| acc | self.adj[x])
    }

    /// The subgraph induced by `keep`, relabelled to `0..keep.len()` in
    /// ascending order of the original indices.
    pub fn induced_subgraph(&self, keep: VertexSet) -> Graph {
        let order = keep.to_vec();
        let mut rows = vec![VertexSet::EMPTY; order.len()];
        for (i, &u) in order.iter().enumerate() {
            for (j, &v) in order.iter().enumerate() {
                if self.adj[u].contains(v) {
                    rows[i].insert(j);
                }
            }
        }
        Graph::from_rows(rows)
    }

    pub fn structure_report(&self) -> StructureReport {
        let girth = self.girth();
        StructureReport {
            min_degree: self.min_degree(),
            max_degree: self.max_degree(),
            connected: self.is_connected(),
            triangle_free: girth.is_none_or(|g| g > 3),
            girth,
            leaves: self.leaves(),
            support_vertices: self.support_vertices(),
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Degree extremes, connectivity, girth and leaf structure of a graph.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct StructureReport {
    pub min_degree: usize,
    pub max_degree: usize,
    pub connected: bool,
    pub triangle_free: bool,
    /// `None` when the graph is acyclic.
    pub girth: Option<usize>,
    pub leaves: VertexSet,
    pub support_vertices: VertexSet,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn build_path_four() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let degrees: Vec<_> = (0..4).map(|v| g.degree(v)).collect();
        assert_eq!(degrees, vec![1, 2, 2, 1]);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn build_single_vertex() {
        let g = Graph::new(1, []).unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(3, [(0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        let g2 = Graph::new(3, [(1, 0), (0, 1), (2, 1)]).unwrap();
        assert_eq!(g, g2);
    }

    #[test]
    fn bad_edges_are_rejected() {
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(GraphError::IndexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::new(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(Graph::empty(65), Err(GraphError::UnsupportedSize(65)));
    }

    #[test]
    fn report_for_path() {
        let r = path(4).structure_report();
        assert_eq!((r.min_degree, r.max_degree), (1, 2));
        assert!(r.connected && r.triangle_free);
        assert_eq!(r.girth, None);
        assert_eq!(r.leaves.to_vec(), vec![0, 3]);
        assert_eq!(r.support_vertices.to_vec(), vec![1, 2]);
    }

    #[test]
    fn report_for_cycle_and_clique() {
        let r = cycle(5).structure_report();
        assert_eq!((r.min_degree, r.max_degree, r.girth), (2, 2, Some(5)));
        assert!(r.triangle_free);
        let r = complete(4).structure_report();
        assert_eq!((r.min_degree, r.max_degree, r.girth), (3, 3, Some(3)));
        assert!(!r.triangle_free);
    }

    #[test]
    fn girth_of_paths_and_cycles() {
        for n in 3..=12 {
            assert_eq!(cycle(n).girth(), Some(n), "C_{n}");
        }
        for n in 1..=12 {
            assert_eq!(path(n).girth(), None, "P_{n}");
        }
    }

    #[test]
    fn girth_of_petersen_like_mix() {
        // C_4 glued to a triangle through a shared vertex
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(g.girth(), Some(3));
        // K_{3,3}
        let k33 = Graph::new(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v)))).unwrap();
        assert_eq!(k33.girth(), Some(4));
    }

    #[test]
    fn neighborhoods_are_consistent() {
        let g = complete(5);
        for v in 0..5 {
            assert_eq!(g.closed_neighbors(v).len(), g.degree(v) + 1);
            assert_eq!(g.neighbors(v), g.closed_neighbors(v) - VertexSet::singleton(v));
        }
    }

    #[test]
    fn components_and_induced_subgraph() {
        let g = Graph::new(5, [(0, 1), (2, 3), (3, 4)]).unwrap();
        let comps: Vec<_> = g.components().into_iter().map(|c| c.to_vec()).collect();
        assert_eq!(comps, vec![vec![0, 1], vec![2, 3, 4]]);
        assert!(!g.is_connected());
        let h = g.induced_subgraph([2, 3, 4].into_iter().collect());
        assert_eq!(h, path(3));
    }

    #[test]
    fn coverage_counts_neighbors() {
        let g = path(5);
        let c = g.coverage([0, 2].into_iter().collect());
        assert_eq!(c.once.to_vec(), vec![1, 3]);
        assert_eq!(c.twice.to_vec(), vec![1]);
        let merged = g
            .coverage(VertexSet::singleton(0))
            .merge(g.coverage(VertexSet::singleton(2)));
        assert_eq!(merged, c);
    }
}
