//! Exact PRC(G): a brute-force oracle over all set partitions, a
//! branch-and-bound solver that must agree with it, brute-force C(G) for
//! cross-checks, and an independent certificate checker.

mod bruteforce;
mod partitions;
mod search;

use serde::Serialize;
use thiserror::Error;

pub use bruteforce::{coalition_number_bruteforce, prc_bruteforce};
pub use partitions::{bell_number, RestrictedGrowth};
pub use search::{prc_solve, prc_solve_with};

use crate::coalition::{check_partition, is_perfect_coalition, PrcCertificate, Role};
use crate::domination::is_dominating;
use crate::graph::Graph;

/// Largest order accepted by [`prc_bruteforce`] (`B(11) = 678570`).
pub const BRUTEFORCE_MAX_N: usize = 11;
/// Largest order accepted by [`prc_solve`].
pub const SOLVE_MAX_N: usize = 20;
/// Largest order accepted by [`coalition_number_bruteforce`].
pub const COALITION_NUMBER_MAX_N: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("graph has {n} vertices; this solver accepts at most {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("could not start worker pool: {0}")]
    ThreadPool(String),
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    /// Search nodes visited (for the oracle, equal to partitions tested).
    pub nodes: u64,
    /// Complete partitions examined.
    pub partitions_tested: u64,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub prc: usize,
    /// Present iff `prc > 0`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<PrcCertificate>,
    pub stats: SolveStats,
}

/// Knobs for [`prc_solve_with`]. The result does not depend on them.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Worker threads; 0 or 1 runs the search on the calling thread.
    pub threads: usize,
    /// Number of leading vertices fixed per parallel task.
    pub split_depth: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { threads: 1, split_depth: 6 }
    }
}

/// Re-derives every role claim of `cert` from the coalition predicates.
/// Malformed certificates are rejected rather than reported as errors.
pub fn verify_certificate(g: &Graph, cert: &PrcCertificate) -> bool {
    let blocks = cert.partition.blocks();
    if check_partition(g, &cert.partition).is_err() || cert.roles.len() != blocks.len() {
        return false;
    }
    cert.roles.iter().enumerate().all(|(i, role)| match *role {
        Role::SingletonDominating => blocks[i].len() == 1 && is_dominating(g, blocks[i]),
        Role::Partner { partner } => {
            partner < blocks.len()
                && partner != i
                && is_perfect_coalition(g, blocks[i], blocks[partner]) == Ok(true)
        }
    })
}
