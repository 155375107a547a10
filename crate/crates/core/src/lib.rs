//! Exact 2-transitivity of graphs.
//!
//! A 2-transitive partition orders the vertices into parts `V_1..V_k` so
//! that every vertex of `V_j` has at least two neighbours in each earlier
//! part; `Tr_2(G)` is the largest such `k`. This crate computes it in linear
//! time on trees, split graphs and bipartite chain graphs, by exhaustive
//! search on small general graphs, and builds the gadget graphs of the
//! hardness reductions together with their certificates.

pub mod bounds;
pub mod chain;
pub mod classes;
pub mod error;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod partition;
pub mod reduction;
pub mod solve;
pub mod split;
pub mod tree;

pub use classes::{ChainOrdering, GraphClass, RootedTree, SplitDecomposition};
pub use error::{Error, Result};
pub use graph::{parse_edge_list, Graph};
pub use graph6::{emit_graph6, parse_graph6};
pub use partition::{parse_partition, verify_2transitive, verify_transitive, VertexPartition};
