//! List-variant disjoint subgraph packing.
//!
//! Given a host graph and an explicit list of pattern subgraphs, select as
//! many pairwise vertex- or edge-disjoint list entries as possible. The
//! crate bundles four solving strategies plus instance machinery:
//!
//! - [`conflict`]: intersection-graph pipeline with degree thresholds, claw
//!   detection, and exact branch-and-bound maximum independent set;
//! - [`tw`]: dynamic programming over tree decompositions for vertex-disjoint
//!   packing of connected patterns;
//! - [`sp`]: the series-parallel decomposition-tree algorithm for
//!   edge-disjoint packing of cycles of length at most 4;
//! - [`oracle`]: exact reference solver and solution verification;
//! - [`reductions`]: generators for hardness-reduction gadget instances;
//! - [`graph`], [`enumerate`], [`instances`]: host graphs, instance I/O,
//!   pattern enumeration, and random instance generation.

pub mod conflict;
pub mod enumerate;
pub mod graph;
pub mod instances;
pub mod matching;
pub mod oracle;
pub mod reductions;
pub mod sp;
pub mod tw;

pub use graph::{
    parse_instance, parse_solution, serialize_instance, Graph, InstanceError, Mode,
    PackingSolution, PatternKind, PatternSubgraph,
};
