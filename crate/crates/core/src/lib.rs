//! Saturation and associated primes of powers of edge ideals, decided
//! through matchings of vertex-weighted graphs.

pub mod associated_primes;
pub mod canon;
pub mod classification;
pub mod edge_ideal;
mod matching;
pub mod partition;
pub mod vertex_set;
pub mod weighted_graph;

pub use vertex_set::VertexSet;
pub use weighted_graph::{find_augmenting_cycle, DeletionReading, GraphError, Matching, Polarization, WeightedGraph};
