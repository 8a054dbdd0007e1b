//! Named graph constructions and recognizers for the families with
//! PRC(G) = n.
//!
//! Generators use fixed labelings, documented per variant of
//! [`FamilySpec`]. Recognizers work on labeled graphs directly and do not
//! canonicalize.

mod lines;
mod recognize;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::coalition::Partition;
use crate::graph::{Graph, MAX_VERTICES};

pub use lines::{construct_known_prc_partition, formula_prc_cycle, formula_prc_path, Line};
pub use recognize::{
    classify_t1_t2, family_membership, is_in_family_b, is_path, is_tree_r, FamilyBWitness,
    FamilyMembership, TClass,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("{0} has no prc-partition")]
    NoPartition(String),
    #[error("cannot parse family spec `{0}`")]
    Unparsable(String),
}

/// A named construction and its parameters.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `P_n`: edges `i ~ i+1`.
    Path(usize),
    /// `C_n`: `P_n` plus `n-1 ~ 0`.
    Cycle(usize),
    /// `K_n`.
    Complete(usize),
    /// `K_{1,s}`: center 0, leaves `1..=s`.
    Star(usize),
    /// `K_{r,s}`: sides `0..r` and `r..r+s`.
    CompleteBipartite(usize, usize),
    /// `G_Δ`: `w = 0`, `v = 1`, `u_i = i + 1`; a clique on the `u_i` plus
    /// `w v` and `v u_1`.
    GDelta(usize),
    /// `K_m ∪ K_2`: the clique on `0..m`, the edge `m ~ m+1`.
    KmUnionK2(usize),
    /// `K_{r,r}` minus the perfect matching `i ~ r+i`.
    T1(usize),
    /// `K_{r,s}` minus the matching `i ~ r+i` for `i < m`.
    T2 { r: usize, s: usize, m: usize },
    /// The spider with legs of length 1, 2, 2: center 0, leaf 1, then
    /// paths `0-2-4` and `0-3-5`.
    TreeR,
    /// A member of family B: leaf `x = 0`, support `y = 1`, an independent
    /// set `A` of size `a` on `2..2+a` adjacent to `y`, and a clique `B` of
    /// size `b` after it, with every `A`-`B` edge present.
    FamilyB { a: usize, b: usize },
}

impl FamilySpec {
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Path(n) | FamilySpec::Cycle(n) | FamilySpec::Complete(n) => n,
            FamilySpec::Star(s) => s + 1,
            FamilySpec::CompleteBipartite(r, s) => r + s,
            FamilySpec::GDelta(d) => d + 2,
            FamilySpec::KmUnionK2(m) => m + 2,
            FamilySpec::T1(r) => 2 * r,
            FamilySpec::T2 { r, s, .. } => r + s,
            FamilySpec::TreeR => 6,
            FamilySpec::FamilyB { a, b } => a + b + 2,
        }
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        let bad = |msg: String| Err(FamilyError::BadParams(msg));
        match *self {
            FamilySpec::Path(n) | FamilySpec::Complete(n) if n < 1 => return bad(format!("{self}: need n >= 1")),
            FamilySpec::Cycle(n) if n < 3 => return bad(format!("{self}: need n >= 3")),
            FamilySpec::Star(s) if s < 1 => return bad(format!("{self}: need at least one leaf")),
            FamilySpec::CompleteBipartite(r, s) if r < 1 || s < 1 => {
                return bad(format!("{self}: need r, s >= 1"))
            }
            FamilySpec::GDelta(d) if d < 2 => return bad(format!("{self}: need delta >= 2")),
            FamilySpec::KmUnionK2(m) if m < 2 => return bad(format!("{self}: need m >= 2")),
            FamilySpec::T1(r) if r < 2 => return bad(format!("{self}: need r >= 2")),
            FamilySpec::T2 { r, s, m } if r < 2 || s < 2 || m >= r.min(s) => {
                return bad(format!("{self}: need r, s >= 2 and matching size < min(r, s)"))
            }
            FamilySpec::FamilyB { a, b } if a < 1 || b < 1 => {
                return bad(format!("{self}: need nonempty independent set and clique"))
            }
            _ => {}
        }
        if self.order() > MAX_VERTICES {
            return bad(format!("{self}: {} vertices exceeds {MAX_VERTICES}", self.order()));
        }
        Ok(())
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Star(s) => write!(f, "star:{s}"),
            FamilySpec::CompleteBipartite(r, s) => write!(f, "kbip:{r},{s}"),
            FamilySpec::GDelta(d) => write!(f, "gdelta:{d}"),
            FamilySpec::KmUnionK2(m) => write!(f, "kmk2:{m}"),
            FamilySpec::T1(r) => write!(f, "t1:{r}"),
            FamilySpec::T2 { r, s, m } => write!(f, "t2:{r},{s},{m}"),
            FamilySpec::TreeR => f.write_str("tree-r"),
            FamilySpec::FamilyB { a, b } => write!(f, "b:{a},{b}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    /// Parses the text form, e.g. `path:9`, `t2:3,4,1`, `tree-r`.
    fn from_str(text: &str) -> Result<Self, FamilyError> {
        let unparsable = || FamilyError::Unparsable(text.to_string());
        let (name, args) = match text.trim().split_once(':') {
            Some((name, args)) => (name, args),
            None => (text.trim(), ""),
        };
        let nums: Vec<usize> = if args.is_empty() {
            Vec::new()
        } else {
            args.split(',')
                .map(|a| a.trim().parse().map_err(|_| unparsable()))
                .collect::<Result<_, _>>()?
        };
        let spec = match (name.to_ascii_lowercase().as_str(), nums.as_slice()) {
            ("path", &[n]) => FamilySpec::Path(n),
            ("cycle", &[n]) => FamilySpec::Cycle(n),
            ("complete", &[n]) => FamilySpec::Complete(n),
            ("star", &[s]) => FamilySpec::Star(s),
            ("kbip" | "complete-bipartite", &[r, s]) => FamilySpec::CompleteBipartite(r, s),
            ("gdelta", &[d]) => FamilySpec::GDelta(d),
            ("kmk2", &[m]) => FamilySpec::KmUnionK2(m),
            ("t1", &[r]) => FamilySpec::T1(r),
            ("t2", &[r, s, m]) => FamilySpec::T2 { r, s, m },
            ("t2", &[r, s]) => FamilySpec::T2 { r, s, m: 0 },
            ("tree-r" | "r", &[]) => FamilySpec::TreeR,
            ("b", &[a, b]) => FamilySpec::FamilyB { a, b },
            _ => return Err(unparsable()),
        };
        Ok(spec)
    }
}

/// Builds the labeled graph for `spec`.
pub fn generate(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    spec.validate()?;
    let n = spec.order();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let clique = |lo: usize, hi: usize, edges: &mut Vec<(usize, usize)>| {
        for u in lo..hi {
            for v in u + 1..hi {
                edges.push((u, v));
            }
        }
    };
    let bipartite_minus = |r: usize, s: usize, m: usize, edges: &mut Vec<(usize, usize)>| {
        for i in 0..r {
            for j in 0..s {
                if !(i == j && i < m) {
                    edges.push((i, r + j));
                }
            }
        }
    };
    match *spec {
        FamilySpec::Path(n) => edges.extend((1..n).map(|i| (i - 1, i))),
        FamilySpec::Cycle(n) => edges.extend((0..n).map(|i| (i, (i + 1) % n))),
        FamilySpec::Complete(n) => clique(0, n, &mut edges),
        FamilySpec::Star(s) => edges.extend((1..=s).map(|l| (0, l))),
        FamilySpec::CompleteBipartite(r, s) => bipartite_minus(r, s, 0, &mut edges),
        FamilySpec::GDelta(d) => {
            clique(2, d + 2, &mut edges);
            edges.extend([(0, 1), (1, 2)]);
        }
        FamilySpec::KmUnionK2(m) => {
            clique(0, m, &mut edges);
            edges.push((m, m + 1));
        }
        FamilySpec::T1(r) => bipartite_minus(r, r, r, &mut edges),
        FamilySpec::T2 { r, s, m } => bipartite_minus(r, s, m, &mut edges),
        FamilySpec::TreeR => edges.extend([(0, 1), (0, 2), (0, 3), (2, 4), (3, 5)]),
        FamilySpec::FamilyB { a, b } => {
            edges.push((0, 1));
            let a_side = 2..2 + a;
            let b_side = 2 + a..2 + a + b;
            edges.extend(a_side.clone().map(|v| (1, v)));
            for u in a_side {
                edges.extend(b_side.clone().map(|w| (u, w)));
            }
            clique(b_side.start, b_side.end, &mut edges);
        }
    }
    Ok(Graph::new(n, edges).expect("generators emit in-range simple edges"))
}

/// The partition printed alongside `G_Δ`:
/// `{w}, {u_1, v}, {u_2}, ..., {u_Δ}`.
///
/// It is not a prc-partition: `{u_1, v}` dominates `G_Δ`. On `G_Δ` the
/// block `{w}` reaches at most `Δ - 1` partners.
pub fn gdelta_printed_partition(delta: usize) -> Result<Partition, FamilyError> {
    FamilySpec::GDelta(delta).validate()?;
    let mut blocks = vec![vec![0], vec![1, 2]];
    blocks.extend((3..delta + 2).map(|u| vec![u]));
    Ok(Partition::from_vertex_lists(blocks))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gdelta_four() {
        let g = generate(&FamilySpec::GDelta(4)).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 6 + 2);
        assert_eq!(g.max_degree(), 4);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2));
        for u in 2..6 {
            for w in u + 1..6 {
                assert!(g.has_edge(u, w));
            }
        }
    }

    #[test]
    fn t1_four_is_cubic_bipartite() {
        let g = generate(&FamilySpec::T1(4)).unwrap();
        assert_eq!(g.n(), 8);
        assert!((0..8).all(|v| g.degree(v) == 3));
        assert!(g.is_triangle_free());
        assert!((0..4).all(|i| !g.has_edge(i, 4 + i)));
    }

    #[test]
    fn tree_r_shape() {
        let g = generate(&FamilySpec::TreeR).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (0, 3), (2, 4), (3, 5)]);
        assert!(g.is_connected());
    }

    #[test]
    fn tree_r_printed_partition_is_rejected() {
        use crate::coalition::validate_prc_partition;
        let g = generate(&FamilySpec::TreeR).unwrap();
        let printed = Partition::from_vertex_lists([vec![0], vec![1], vec![2, 3], vec![4, 5]]);
        assert!(validate_prc_partition(&g, &printed).is_err());
        let found = Partition::from_vertex_lists([vec![0, 2], vec![1, 4], vec![3], vec![5]]);
        assert_eq!(validate_prc_partition(&g, &found).unwrap().order(), 4);
    }

    #[test]
    fn family_b_member_shape() {
        let g = generate(&FamilySpec::FamilyB { a: 2, b: 3 }).unwrap();
        assert_eq!(g.n(), 7);
        assert_eq!(g.degree(0), 1);
        assert_eq!(g.neighbors(1).to_vec(), vec![0, 2, 3]);
        assert_eq!(g.edge_count(), 1 + 2 + 6 + 3);
    }

    #[test]
    fn parameter_ranges() {
        for bad in [
            FamilySpec::Cycle(2),
            FamilySpec::GDelta(1),
            FamilySpec::T1(1),
            FamilySpec::T2 { r: 2, s: 3, m: 2 },
            FamilySpec::KmUnionK2(1),
            FamilySpec::Path(0),
            FamilySpec::Complete(65),
        ] {
            assert!(matches!(generate(&bad), Err(FamilyError::BadParams(_))), "{bad}");
        }
    }

    #[test]
    fn text_form_round_trips() {
        for text in ["path:9", "cycle:12", "gdelta:4", "t2:3,4,1", "tree-r", "b:2,3", "kbip:2,5", "kmk2:3", "t1:3", "star:3", "complete:5"] {
            let spec: FamilySpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
        assert_eq!("t2:3,3".parse::<FamilySpec>().unwrap(), FamilySpec::T2 { r: 3, s: 3, m: 0 });
        assert!("path".parse::<FamilySpec>().is_err());
        assert!("hexagon:6".parse::<FamilySpec>().is_err());
        assert!("path:x".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn gdelta_printed_partition_is_rejected() {
        use crate::coalition::{partner_count, validate_prc_partition, ViolationKind};
        for delta in 2..=6 {
            let g = generate(&FamilySpec::GDelta(delta)).unwrap();
            let p = gdelta_printed_partition(delta).unwrap();
            let err = validate_prc_partition(&g, &p).unwrap_err();
            assert_eq!((err.kind, err.block_index), (ViolationKind::NonSingletonDominatingBlock, Some(1)));
            // the singleton partition gives {w} the partners {u_2}..{u_Δ}
            let singles = Partition::singletons(delta + 2);
            validate_prc_partition(&g, &singles).unwrap();
            assert_eq!(partner_count(&g, &singles, 0).unwrap(), delta - 1);
        }
        assert_eq!(gdelta_printed_partition(3).unwrap().to_string(), "{[0], [1,2], [3], [4]}");
    }
}
