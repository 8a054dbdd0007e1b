//! Entry points behind the `prc` subcommands. Each returns data rather
//! than printing, so the binary stays a thin argument parser and the
//! examples and tests can drive the same code.

pub mod fixtures;
mod sweep;
mod verify;

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coalition::PrcCertificate;
use crate::domination::enumerate_perfect_dominating_sets;
use crate::families::{generate, FamilyError, FamilySpec};
use crate::graph::{encode_graph6, format_edge_list, parse_edge_list, parse_graph6, Graph, GraphError};
use crate::solver::{prc_solve_with, SolveError, SolveOptions, SolveStats, SOLVE_MAX_N};

pub use sweep::{cmd_sweep, sweep_line, SweepError, SweepLine, SweepOptions, SweepRecord, SweepSummary};
pub use verify::{cmd_verify, oracle_random_graphs, Failure, TheoremReport, ORACLE_SEED, SUITES};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("graph has {n} vertices; the solver accepts at most {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("unknown suite `{0}` (known: {})", SUITES.join(", "))]
    UnknownSuite(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Solve(SolveError),
}

impl HarnessError {
    /// Process exit status: 2 for bad input, 3 for the size guard, 1 for
    /// everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            HarnessError::Parse(_)
            | HarnessError::UnknownSuite(_)
            | HarnessError::Family(_)
            | HarnessError::InvalidArgument(_) => 2,
            HarnessError::TooLarge { .. } => 3,
            HarnessError::Io { .. } | HarnessError::Solve(_) => 1,
        }
    }

    pub(crate) fn io(path: &Path, source: std::io::Error) -> Self {
        HarnessError::Io { path: path.to_path_buf(), source }
    }
}

impl From<GraphError> for HarnessError {
    fn from(e: GraphError) -> Self {
        HarnessError::Parse(e.to_string())
    }
}

impl From<SolveError> for HarnessError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::TooLarge { n, limit } => HarnessError::TooLarge { n, limit },
            other => HarnessError::Solve(other),
        }
    }
}

/// Where a single graph comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphInput {
    Graph6(String),
    EdgeListFile(PathBuf),
}

impl GraphInput {
    pub fn load(&self) -> Result<Graph, HarnessError> {
        match self {
            GraphInput::Graph6(text) => Ok(parse_graph6(text.trim())?),
            GraphInput::EdgeListFile(path) => {
                let text = fs::read_to_string(path).map_err(|e| HarnessError::io(path, e))?;
                Ok(parse_edge_list(&text)?)
            }
        }
    }
}

/// The `compute` document. `certificate` is absent when `prc == 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComputeReport {
    pub graph6: String,
    pub n: usize,
    pub prc: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<PrcCertificate>,
    pub stats: ComputeStats,
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComputeStats {
    pub nodes: u64,
    pub partitions_tested: u64,
    pub elapsed_ms: u64,
}

impl From<SolveStats> for ComputeStats {
    fn from(s: SolveStats) -> Self {
        ComputeStats { nodes: s.nodes, partitions_tested: s.partitions_tested, elapsed_ms: s.elapsed_ms }
    }
}

impl ComputeReport {
    /// Plain-text rendering for terminals.
    pub fn to_text(&self) -> String {
        let mut out = format!("graph6: {}\nn: {}\nPRC: {}\n", self.graph6, self.n, self.prc);
        if let Some(cert) = &self.certificate {
            out += &format!("partition: {}\n", cert.partition);
            for (i, (block, role)) in cert.partition.blocks().iter().zip(&cert.roles).enumerate() {
                let role = match role {
                    crate::coalition::Role::SingletonDominating => "singleton dominating".to_string(),
                    crate::coalition::Role::Partner { partner } => format!("partner of block {partner}"),
                };
                out += &format!("  block {i} {block}: {role}\n");
            }
        }
        out += &format!(
            "nodes: {}, partitions tested: {}, {} ms\n",
            self.stats.nodes, self.stats.partitions_tested, self.stats.elapsed_ms
        );
        out
    }
}

pub fn cmd_compute(g: &Graph, opts: &SolveOptions) -> Result<ComputeReport, HarnessError> {
    if g.n() > SOLVE_MAX_N {
        return Err(HarnessError::TooLarge { n: g.n(), limit: SOLVE_MAX_N });
    }
    let result = prc_solve_with(g, opts)?;
    Ok(ComputeReport {
        graph6: encode_graph6(g)?,
        n: g.n(),
        prc: result.prc,
        certificate: result.certificate,
        stats: result.stats.into(),
    })
}

/// Perfect dominating sets of size `k`, one sorted vertex array per line,
/// ascending by bit mask.
pub fn cmd_enumerate(g: &Graph, k: usize) -> Result<Vec<String>, HarnessError> {
    if k > g.n() {
        return Err(HarnessError::InvalidArgument(format!("k = {k} exceeds n = {}", g.n())));
    }
    Ok(enumerate_perfect_dominating_sets(g, k).into_iter().map(|s| s.to_string()).collect())
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Emit {
    Graph6,
    Edges,
}

pub fn cmd_family(spec: &str, emit: Emit) -> Result<String, HarnessError> {
    let spec: FamilySpec = spec.parse()?;
    let g = generate(&spec)?;
    Ok(match emit {
        Emit::Graph6 => encode_graph6(&g)? + "\n",
        Emit::Edges => format_edge_list(&g),
    })
}
