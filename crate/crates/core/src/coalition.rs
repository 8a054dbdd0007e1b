//! Perfect coalitions and prc-partitions.
//!
//! Two disjoint sets `A`, `B` form a perfect coalition when neither
//! dominates, every vertex outside `A` has at most one neighbor in `A` (and
//! likewise for `B`), and `A ∪ B` is perfect dominating. The "at most one
//! neighbor" condition is checked over *all* vertices outside the set,
//! including those of the partner.
//!
//! A prc-partition is a vertex partition in which every block is either a
//! singleton dominating set or has a perfect-coalition partner among the
//! other blocks.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::domination::is_dominating;
use crate::graph::{Coverage, Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoalitionError {
    #[error("sets overlap")]
    OverlappingSets,
    #[error("empty set")]
    EmptySet,
    #[error("block index {index} out of range for a partition with {len} blocks")]
    IndexOutOfRange { index: usize, len: usize },
}

/// An ordered list of vertex blocks. Well-formedness (disjoint, nonempty,
/// covering) is checked by [`validate_prc_partition`], not on construction,
/// so malformed candidates can be represented and diagnosed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    blocks: Vec<VertexSet>,
}

impl Partition {
    pub fn new(blocks: Vec<VertexSet>) -> Self {
        Partition { blocks }
    }

    /// Builds blocks from vertex lists.
    pub fn from_vertex_lists<I, B>(lists: I) -> Self
    where
        I: IntoIterator<Item = B>,
        B: IntoIterator<Item = usize>,
    {
        Partition::new(lists.into_iter().map(|b| b.into_iter().collect()).collect())
    }

    /// `{{0}, {1}, ..., {n-1}}`.
    pub fn singletons(n: usize) -> Self {
        Partition::new((0..n).map(VertexSet::singleton).collect())
    }

    /// Decodes a restricted growth string: vertex `v` goes to block `labels[v]`.
    pub fn from_labels(labels: &[usize]) -> Self {
        let k = labels.iter().map(|&l| l + 1).max().unwrap_or(0);
        let mut blocks = vec![VertexSet::EMPTY; k];
        for (v, &l) in labels.iter().enumerate() {
            blocks[l].insert(v);
        }
        Partition::new(blocks)
    }

    /// Restricted growth string of this partition, with blocks renumbered
    /// by first appearance. `None` unless the blocks partition `0..n`.
    pub fn to_labels(&self, n: usize) -> Option<Vec<usize>> {
        let mut labels = vec![usize::MAX; n];
        for (i, b) in self.blocks.iter().enumerate() {
            for v in *b {
                if v >= n || labels[v] != usize::MAX {
                    return None;
                }
                labels[v] = i;
            }
        }
        if labels.contains(&usize::MAX) {
            return None;
        }
        let mut renumber = vec![usize::MAX; self.blocks.len()];
        let mut next = 0;
        for l in labels.iter_mut() {
            if renumber[*l] == usize::MAX {
                renumber[*l] = next;
                next += 1;
            }
            *l = renumber[*l];
        }
        Some(labels)
    }

    #[inline]
    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_of(&self, v: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(v))
    }

    pub fn into_blocks(self) -> Vec<VertexSet> {
        self.blocks
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str("}")
    }
}

/// Why a block belongs in a prc-partition.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "role", rename_all = "snake_case")]
pub enum Role {
    SingletonDominating,
    Partner { partner: usize },
}

/// A partition with one role per block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrcCertificate {
    pub partition: Partition,
    pub roles: Vec<Role>,
}

impl PrcCertificate {
    pub fn order(&self) -> usize {
        self.partition.len()
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    NotAPartition,
    EmptyBlock,
    NonSingletonDominatingBlock,
    NoPartnerForBlock,
}

/// The first reason a candidate is not a prc-partition.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub block_index: Option<usize>,
}

impl Violation {
    fn at(kind: ViolationKind, i: usize) -> Self {
        Violation { kind, block_index: Some(i) }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            ViolationKind::NotAPartition => "not a partition of the vertex set",
            ViolationKind::EmptyBlock => "empty block",
            ViolationKind::NonSingletonDominatingBlock => "dominating block with more than one vertex",
            ViolationKind::NoPartnerForBlock => "block has no perfect-coalition partner",
        };
        match self.block_index {
            Some(i) => write!(f, "{what} (block {i})"),
            None => f.write_str(what),
        }
    }
}

impl std::error::Error for Violation {}

/// Every vertex outside `s` has at most one neighbor in `s`.
pub fn satisfies_sparse_neighbor_condition(g: &Graph, s: VertexSet) -> bool {
    g.coverage(s).twice.is_subset(s)
}

pub fn is_perfect_coalition(g: &Graph, a: VertexSet, b: VertexSet) -> Result<bool, CoalitionError> {
    if a.is_empty() || b.is_empty() {
        return Err(CoalitionError::EmptySet);
    }
    if !a.is_disjoint(b) {
        return Err(CoalitionError::OverlappingSets);
    }
    let pa = BlockProfile::new(g, a);
    let pb = BlockProfile::new(g, b);
    Ok(pa.coalesces_with(&pb, g.vertex_set()))
}

/// Ordinary coalition: neither set dominates, the union does.
pub fn is_coalition(g: &Graph, a: VertexSet, b: VertexSet) -> Result<bool, CoalitionError> {
    if a.is_empty() || b.is_empty() {
        return Err(CoalitionError::EmptySet);
    }
    if !a.is_disjoint(b) {
        return Err(CoalitionError::OverlappingSets);
    }
    Ok(!is_dominating(g, a) && !is_dominating(g, b) && is_dominating(g, a | b))
}

/// Per-block facts that decide every pairwise coalition test.
#[derive(Copy, Clone, Debug)]
pub(crate) struct BlockProfile {
    pub set: VertexSet,
    pub cov: Coverage,
    pub dominating: bool,
    pub sparse: bool,
}

impl BlockProfile {
    #[inline]
    pub fn new(g: &Graph, set: VertexSet) -> Self {
        let cov = g.coverage(set);
        BlockProfile::from_coverage(set, cov, g.vertex_set())
    }

    #[inline]
    pub fn from_coverage(set: VertexSet, cov: Coverage, all: VertexSet) -> Self {
        BlockProfile {
            set,
            cov,
            dominating: all.is_subset(cov.once | set),
            sparse: cov.twice.is_subset(set),
        }
    }

    /// Perfect-coalition test for two disjoint blocks.
    #[inline]
    pub fn coalesces_with(&self, other: &BlockProfile, all: VertexSet) -> bool {
        if self.dominating || other.dominating || !self.sparse || !other.sparse {
            return false;
        }
        let union = self.set | other.set;
        let cov = self.cov.merge(other.cov);
        let outside = all - union;
        outside.is_subset(cov.once) && outside.is_disjoint(cov.twice)
    }
}

/// Checks partition well-formedness: first empty, out-of-range or
/// overlapping block in order, then coverage of `V`.
pub fn check_partition(g: &Graph, p: &Partition) -> Result<(), Violation> {
    let all = g.vertex_set();
    let mut seen = VertexSet::EMPTY;
    for (i, &b) in p.blocks().iter().enumerate() {
        if b.is_empty() {
            return Err(Violation::at(ViolationKind::EmptyBlock, i));
        }
        if !b.is_subset(all) || !b.is_disjoint(seen) {
            return Err(Violation::at(ViolationKind::NotAPartition, i));
        }
        seen |= b;
    }
    if seen != all {
        return Err(Violation { kind: ViolationKind::NotAPartition, block_index: None });
    }
    Ok(())
}

/// Validates a candidate prc-partition. On success every block gets a
/// role; partner witnesses are the lowest-index partner.
pub fn validate_prc_partition(g: &Graph, p: &Partition) -> Result<PrcCertificate, Violation> {
    check_partition(g, p)?;
    let all = g.vertex_set();
    let profiles: Vec<BlockProfile> = p.blocks().iter().map(|&b| BlockProfile::new(g, b)).collect();
    let mut roles = Vec::with_capacity(profiles.len());
    for (i, pi) in profiles.iter().enumerate() {
        if pi.dominating {
            if pi.set.len() == 1 {
                roles.push(Role::SingletonDominating);
                continue;
            }
            return Err(Violation::at(ViolationKind::NonSingletonDominatingBlock, i));
        }
        let partner = profiles
            .iter()
            .enumerate()
            .position(|(j, pj)| j != i && pi.coalesces_with(pj, all))
            .ok_or(Violation::at(ViolationKind::NoPartnerForBlock, i))?;
        roles.push(Role::Partner { partner });
    }
    Ok(PrcCertificate { partition: p.clone(), roles })
}

/// Indices of the blocks that form a perfect coalition with block `i`.
pub fn partners(g: &Graph, p: &Partition, i: usize) -> Result<Vec<usize>, CoalitionError> {
    let blocks = p.blocks();
    if i >= blocks.len() {
        return Err(CoalitionError::IndexOutOfRange { index: i, len: blocks.len() });
    }
    let all = g.vertex_set();
    let pi = BlockProfile::new(g, blocks[i]);
    Ok((0..blocks.len())
        .filter(|&j| j != i && pi.coalesces_with(&BlockProfile::new(g, blocks[j]), all))
        .collect())
}

/// Number of perfect-coalition partners of block `i`.
pub fn partner_count(g: &Graph, p: &Partition, i: usize) -> Result<usize, CoalitionError> {
    partners(g, p, i).map(|v| v.len())
}

/// Ordinary coalition partition test: every block is a singleton
/// dominating set or a non-dominating set with a coalition partner.
pub fn is_c_partition(g: &Graph, p: &Partition) -> bool {
    if check_partition(g, p).is_err() {
        return false;
    }
    let all = g.vertex_set();
    let closed: Vec<VertexSet> = p.blocks().iter().map(|&b| g.closed_neighborhood(b)).collect();
    let dominating: Vec<bool> = closed.iter().map(|&c| c == all).collect();
    (0..closed.len()).all(|i| {
        if dominating[i] {
            return p.blocks()[i].len() == 1;
        }
        (0..closed.len()).any(|j| j != i && !dominating[j] && closed[i] | closed[j] == all)
    })
}
