//! Branch and bound over restricted growth strings.
//!
//! Vertices are assigned in index order; vertex `v` joins one of the open
//! blocks (ascending) or opens a new one. Leaves are therefore visited in
//! lexicographic order, which makes the first maximum-order leaf canonical.
//!
//! Pruning:
//! * order bound: a branch with `k` blocks and `r` unassigned vertices ends
//!   with at most `k + r` blocks;
//! * dead block: an assigned vertex outside block `B` with two neighbors in
//!   `B` breaks the sparse-neighbor condition for good, and a dominating
//!   block with two or more vertices stays dominating as it grows. Either
//!   way `B` can never earn a role.
//!
//! Partner existence is only checked at leaves.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use super::{SolveError, SolveOptions, SolveResult, SolveStats, SOLVE_MAX_N};
use crate::coalition::{validate_prc_partition, BlockProfile, Partition};
use crate::graph::{Coverage, Graph, VertexSet};

/// Order and restricted growth labels of the best partition found.
type Best = (usize, Vec<usize>);

pub fn prc_solve(g: &Graph) -> Result<SolveResult, SolveError> {
    prc_solve_with(g, &SolveOptions::default())
}

pub fn prc_solve_with(g: &Graph, opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    let n = g.n();
    if n > SOLVE_MAX_N {
        return Err(SolveError::TooLarge { n, limit: SOLVE_MAX_N });
    }
    let start = Instant::now();
    let global = AtomicUsize::new(0);

    let (found, mut stats) = if opts.threads <= 1 || n < 8 {
        let mut s = Search::new(g, &global, false);
        s.descend(0);
        (s.best.map(|(_, labels)| labels), s.stats)
    } else {
        let prefixes = prefixes(g, n.min(opts.split_depth.max(1)));
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .map_err(|e| SolveError::ThreadPool(e.to_string()))?;
        let results: Vec<(Option<Best>, SolveStats)> = pool.install(|| {
            prefixes
                .par_iter()
                .map(|prefix| {
                    let mut s = Search::new(g, &global, true);
                    if s.replay(prefix) {
                        s.descend(prefix.len());
                    }
                    (s.best, s.stats)
                })
                .collect()
        });
        let mut stats = SolveStats::default();
        let mut best: Option<Best> = None;
        // Prefixes are in lexicographic order: the first task holding the
        // maximum order holds the lexicographically smallest certificate.
        for (local, st) in results {
            stats.nodes += st.nodes;
            stats.partitions_tested += st.partitions_tested;
            if let Some((k, labels)) = local {
                if best.as_ref().is_none_or(|(b, _)| k > *b) {
                    best = Some((k, labels));
                }
            }
        }
        (best.map(|(_, labels)| labels), stats)
    };

    let certificate = found.map(|labels| {
        validate_prc_partition(g, &Partition::from_labels(&labels))
            .expect("search only records partitions that pass the leaf check")
    });
    stats.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(SolveResult {
        prc: certificate.as_ref().map_or(0, |c| c.order()),
        certificate,
        stats,
    })
}

/// All surviving restricted-growth prefixes of the given length, in
/// lexicographic order.
fn prefixes(g: &Graph, depth: usize) -> Vec<Vec<usize>> {
    let global = AtomicUsize::new(0);
    let mut s = Search::new(g, &global, false);
    let mut out = Vec::new();
    s.collect_prefixes(0, depth, &mut out);
    out
}

#[derive(Copy, Clone, PartialEq, Eq)]
enum Forced {
    Free,
    Into(usize),
    Dead,
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    all: VertexSet,
    labels: Vec<usize>,
    blocks: Vec<VertexSet>,
    covs: Vec<Coverage>,
    assigned: VertexSet,
    /// Order and labels of the first best leaf seen by this search.
    best: Option<Best>,
    best_order: usize,
    global: &'a AtomicUsize,
    /// With a shared bound, ties with it must survive so that the
    /// lexicographically first certificate is not lost to another task.
    shared: bool,
    stats: SolveStats,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, global: &'a AtomicUsize, shared: bool) -> Self {
        let n = g.n();
        Search {
            g,
            n,
            all: g.vertex_set(),
            labels: vec![0; n],
            blocks: Vec::with_capacity(n),
            covs: Vec::with_capacity(n),
            assigned: VertexSet::EMPTY,
            best: None,
            best_order: 0,
            global,
            shared,
            stats: SolveStats::default(),
        }
    }

    #[inline]
    fn hopeless(&self, reachable: usize) -> bool {
        reachable <= self.best_order || (self.shared && reachable < self.global.load(Ordering::Relaxed))
    }

    /// Blocks in which `v` already has two neighbors. `v` must join the
    /// only such block, if there is one; with two or more every choice
    /// leaves `v` outside a block it breaks.
    fn forced_block(&self, v: usize) -> Forced {
        let mut forced = Forced::Free;
        for (i, c) in self.covs.iter().enumerate() {
            if c.twice.contains(v) {
                if forced != Forced::Free {
                    return Forced::Dead;
                }
                forced = Forced::Into(i);
            }
        }
        forced
    }

    #[inline]
    fn allowed(&self, v: usize, b: usize) -> bool {
        match self.forced_block(v) {
            Forced::Free => true,
            Forced::Into(i) => i == b,
            Forced::Dead => false,
        }
    }

    /// Puts `v` into block `b` (opening it if `b == blocks.len()`). Returns
    /// `false`, with nothing changed, if that kills a block. The caller has
    /// already checked [`Self::forced_block`].
    fn assign(&mut self, v: usize, b: usize) -> bool {
        let nbrs = self.g.neighbors(v);
        let (set, cov) = if b == self.blocks.len() {
            (VertexSet::singleton(v), Coverage::default().push(nbrs))
        } else {
            (self.blocks[b].with(v), self.covs[b].push(nbrs))
        };
        let assigned = self.assigned.with(v);
        if !(cov.twice & assigned).is_subset(set) {
            return false;
        }
        if set.len() >= 2 && self.all.is_subset(cov.once | set) {
            return false;
        }
        if b == self.blocks.len() {
            self.blocks.push(set);
            self.covs.push(cov);
        } else {
            self.blocks[b] = set;
            self.covs[b] = cov;
        }
        self.assigned = assigned;
        self.labels[v] = b;
        true
    }

    fn unassign(&mut self, v: usize, b: usize, prev: (VertexSet, Coverage)) {
        if prev.0.is_empty() {
            self.blocks.pop();
            self.covs.pop();
        } else {
            self.blocks[b] = prev.0;
            self.covs[b] = prev.1;
        }
        self.assigned.remove(v);
    }

    fn snapshot(&self, b: usize) -> (VertexSet, Coverage) {
        if b == self.blocks.len() {
            (VertexSet::EMPTY, Coverage::default())
        } else {
            (self.blocks[b], self.covs[b])
        }
    }

    fn descend(&mut self, v: usize) {
        self.stats.nodes += 1;
        if v == self.n {
            self.leaf();
            return;
        }
        let remaining = self.n - v - 1;
        let k = self.blocks.len();
        let forced = self.forced_block(v);
        if forced == Forced::Dead {
            return;
        }
        for b in 0..=k {
            if let Forced::Into(i) = forced {
                if i != b {
                    continue;
                }
            }
            let order_after = k.max(b + 1);
            if self.hopeless(order_after + remaining) {
                continue;
            }
            let prev = self.snapshot(b);
            if self.assign(v, b) {
                self.descend(v + 1);
                self.unassign(v, b, prev);
            }
        }
    }

    fn leaf(&mut self) {
        self.stats.partitions_tested += 1;
        let k = self.blocks.len();
        if k == 0 || k <= self.best_order {
            return;
        }
        let profiles: Vec<BlockProfile> = self
            .blocks
            .iter()
            .zip(&self.covs)
            .map(|(&s, &c)| BlockProfile::from_coverage(s, c, self.all))
            .collect();
        let valid = profiles.iter().enumerate().all(|(i, p)| {
            if p.dominating {
                return p.set.len() == 1;
            }
            profiles
                .iter()
                .enumerate()
                .any(|(j, q)| j != i && p.coalesces_with(q, self.all))
        });
        if valid {
            self.best_order = k;
            self.best = Some((k, self.labels.clone()));
            self.global.fetch_max(k, Ordering::Relaxed);
        }
    }

    /// Re-applies a prefix produced by `collect_prefixes`.
    fn replay(&mut self, prefix: &[usize]) -> bool {
        prefix.iter().enumerate().all(|(v, &b)| {
            self.stats.nodes += 1;
            self.allowed(v, b) && self.assign(v, b)
        })
    }

    fn collect_prefixes(&mut self, v: usize, depth: usize, out: &mut Vec<Vec<usize>>) {
        if v == depth {
            out.push(self.labels[..depth].to_vec());
            return;
        }
        let k = self.blocks.len();
        for b in 0..=k {
            let prev = self.snapshot(b);
            if self.allowed(v, b) && self.assign(v, b) {
                self.collect_prefixes(v + 1, depth, out);
                self.unassign(v, b, prev);
            }
        }
    }
}
