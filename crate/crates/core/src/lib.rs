//! Tree-likeness metrics of finite connected graphs.

pub mod classes;
pub mod distance;
pub mod error;
pub mod generators;
pub mod graph;
pub mod layering;
pub mod metrics;
pub mod verify;

pub use distance::{bfs_distances, is_isometric_subset, DistanceMatrix};
pub use error::{Error, Result};
pub use graph::{parse_dimacs, parse_edge_list, Graph, GraphBuilder, GraphFormat, Path, VertexId, VertexSubset};
