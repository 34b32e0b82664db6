//! Slimness, hyperbolicity, and tree-decomposition parameters.

mod bounds;
mod decomposition;
mod hyperbolicity;
mod oracle;
mod slimness;

pub use bounds::{slimness_bound_report, BoundInputs, SlimnessBound};
pub use decomposition::{
    exact_tree_breadth, exact_tree_length, optimal_breadth_decomposition, optimal_length_decomposition,
    tree_length_bounds, TreeDecomposition, TreeLengthBounds, DEFAULT_EXACT_MAX_N,
};
pub use hyperbolicity::{hyperbolicity, HalfInteger};
pub use oracle::{shortest_paths, slim_value_of_triangle, slimness_oracle, slimness_oracle_with, DEFAULT_ORACLE_PATH_LIMIT};
pub use slimness::{
    avoidance_table, max_avoiding_distance, slimness, slimness_with, Slimness, TriangleWitness, TripleMode,
};

/// Names of the bounds reported by [`slimness_bound_report`].
pub mod bound_names {
    pub use super::bounds::{
        CHORDAL, CHORDALITY_QUARTER, FOUR_CHORDAL, HALF_MAX_CLUSTER_DIAMETER, THREE_HALVES_CLUSTER_DIAMETER,
        THREE_HALVES_TREE_LENGTH, THREE_HYPERBOLICITY, THREE_TREE_BREADTH,
    };
}
