//! Exact perfect coalition partitions of small graphs.
//!
//! A perfect coalition is a pair of disjoint, non-dominating vertex sets,
//! each seen by every outside vertex at most once, whose union is a
//! perfect dominating set. A prc-partition gives every block either the
//! role of a singleton dominating set or a perfect-coalition partner, and
//! PRC(G) is the largest order of such a partition (0 if none exists).
//!
//! Modules, bottom up:
//! * [`graph`]: bit-mask graphs, graph6 and edge-list interchange;
//! * [`domination`]: dominating and perfect dominating sets;
//! * [`coalition`]: the coalition predicates, partitions and certificates;
//! * [`solver`]: exact PRC(G) and C(G);
//! * [`families`]: named graph constructions and family recognizers;
//! * [`harness`]: compute / sweep / enumerate / verify entry points shared
//!   by the `prc` binary and the examples.
//!
//! Vertex indices are 0-based throughout; a textbook label `v_i` is index
//! `i - 1`.

pub mod coalition;
pub mod domination;
pub mod families;
pub mod harness;
pub mod graph;
pub mod solver;

pub use coalition::{Partition, PrcCertificate, Role, Violation, ViolationKind};
pub use graph::{Graph, GraphError, VertexSet};
pub use solver::{prc_bruteforce, prc_solve, verify_certificate, SolveResult};
