//! 1-extendable partitions of conflict graphs.
//!
//! A graph is *1-extendable* when every vertex lies in some maximum
//! independent set. Under saturated CSMA/CA, a station outside every maximum
//! independent set of its channel's conflict graph starves. This crate decides
//! and constructs partitions of a conflict graph into the fewest induced
//! 1-extendable subgraphs (one per channel), using modular decomposition and
//! feasible-tuple dynamic programming, and computes the per-station access
//! proportions that motivate the problem.

mod bits;
pub mod error;
pub mod extend;
pub mod generators;
pub mod genset;
pub mod graph;
pub mod isets;
pub mod metrics;
pub mod moddecomp;
pub mod partition;

pub use error::{Error, Limits, Result};
pub use graph::{Graph, InducedSubgraph, VertexSet};
pub use moddecomp::{decompose, MDTree, NodeKind, WeightedGraph};
pub use partition::Partition;
