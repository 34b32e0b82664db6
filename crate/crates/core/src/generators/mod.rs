//! Deterministic graph families and seeded random corpora.

mod families;
mod random;
mod rng;
mod spec;

pub use families::{
    building, clique, connected_labeled_graphs, cycle, diamond, domino, glue, grid, half_grid, hole, house, path, star,
    MAX_ENUMERATION_N,
};
pub use random::{random_block, random_chordal, random_connected, random_interval, INTERVAL_RETRIES};
pub use rng::{mix_seed, SplitMix64};
pub use spec::FamilySpec;
