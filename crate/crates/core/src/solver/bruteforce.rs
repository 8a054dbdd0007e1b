use std::time::Instant;

use super::partitions::RestrictedGrowth;
use super::{SolveError, SolveResult, SolveStats, BRUTEFORCE_MAX_N, COALITION_NUMBER_MAX_N};
use crate::coalition::{is_c_partition, validate_prc_partition, Partition};
use crate::graph::Graph;

/// PRC(G) by validating every set partition of `V`.
///
/// Partitions are visited in lexicographic restricted-growth order and the
/// first one of maximum order is returned as the certificate.
pub fn prc_bruteforce(g: &Graph) -> Result<SolveResult, SolveError> {
    let n = g.n();
    if n > BRUTEFORCE_MAX_N {
        return Err(SolveError::TooLarge { n, limit: BRUTEFORCE_MAX_N });
    }
    let start = Instant::now();
    let mut stats = SolveStats::default();
    let mut best = None;
    let mut best_order = 0;
    let mut rgs = RestrictedGrowth::new(n);
    while rgs.advance() {
        stats.partitions_tested += 1;
        let k = rgs.block_count();
        if k <= best_order {
            continue;
        }
        if let Ok(cert) = validate_prc_partition(g, &Partition::from_labels(rgs.labels())) {
            best_order = k;
            best = Some(cert);
        }
    }
    stats.nodes = stats.partitions_tested;
    stats.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(SolveResult { prc: best_order, certificate: best, stats })
}

/// C(G), the coalition number, by exhaustive partition enumeration.
pub fn coalition_number_bruteforce(g: &Graph) -> Result<usize, SolveError> {
    let n = g.n();
    if n > COALITION_NUMBER_MAX_N {
        return Err(SolveError::TooLarge { n, limit: COALITION_NUMBER_MAX_N });
    }
    let mut best = 0;
    let mut rgs = RestrictedGrowth::new(n);
    while rgs.advance() {
        let k = rgs.block_count();
        if k > best && is_c_partition(g, &Partition::from_labels(rgs.labels())) {
            best = k;
        }
    }
    Ok(best)
}
