//! Recognition of chordal, AT-free, block, and HHD-free graphs, plus the
//! Cycle Lemma checker, the constructive building search, and the
//! hereditary slimness oracle.

mod asteroidal;
mod blocks;
mod chordal;
mod induced;
mod lemmas;

use serde::Serialize;

pub use asteroidal::is_at_free;
pub use blocks::{blocks, is_block_graph};
pub use chordal::{chordality, is_chordal, lex_bfs, Chordality, DEFAULT_CHORDALITY_MAX_N};
pub use induced::{contains_induced, MAX_PATTERN_N};
pub use lemmas::{
    find_isometric_building, hereditary_max_slimness, hereditary_slimness_at_most, verify_cycle_lemma,
    BuildingEmbedding, DEFAULT_HEREDITARY_MAX_N,
};

use crate::error::{Error, Result};
use crate::generators::{domino, house};
use crate::graph::{Graph, VertexId};

/// No induced house, domino, or cycle of length at least 5. The hole search
/// is limited to graphs with at most `max_n` vertices.
pub fn is_hhd_free(g: &Graph, max_n: usize) -> Result<bool> {
    if g.n() > max_n {
        return Err(Error::SizeLimit {
            what: "vertex count for hole search",
            actual: g.n(),
            limit: max_n,
        });
    }
    if chordality(g, max_n, Some(5))?.value >= 5 {
        return Ok(false);
    }
    Ok(!contains_induced(g, &house())?.0 && !contains_induced(g, &domino())?.0)
}

/// Class membership summary for one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassRecord {
    pub chordality: u32,
    pub is_chordal: bool,
    pub is_at_free: bool,
    pub is_block: bool,
    pub is_hhd_free: bool,
    pub at_witness: Option<[VertexId; 3]>,
}

impl ClassRecord {
    /// Slimness upper bounds implied by class membership, as `(name, bound)`.
    pub fn implied_slimness_bounds(&self) -> Vec<(&'static str, u32)> {
        let mut out = Vec::new();
        if self.is_block {
            out.push(("block graph ⇒ sl = 0", 0));
        }
        if self.is_chordal {
            out.push(("chordal ⇒ sl ≤ 1", 1));
        }
        if self.is_at_free {
            out.push(("AT-free ⇒ sl ≤ 1", 1));
        }
        if self.is_hhd_free {
            out.push(("HHD-free ⇒ sl ≤ 1", 1));
        }
        if self.chordality <= 4 {
            out.push(("4-chordal ⇒ sl ≤ 2", 2));
        }
        out.push(("k-chordal ⇒ sl ≤ floor(k/4) + 1", self.chordality / 4 + 1));
        out
    }
}

/// Runs every recognizer. The induced-cycle searches are limited to graphs
/// with at most `max_chordality_n` vertices.
pub fn classify(g: &Graph, max_chordality_n: usize) -> Result<ClassRecord> {
    let chordality = chordality(g, max_chordality_n, None)?.value;
    let (is_at_free, at_witness) = is_at_free(g);
    Ok(ClassRecord {
        chordality,
        is_chordal: is_chordal(g),
        is_at_free,
        is_block: is_block_graph(g),
        is_hhd_free: is_hhd_free(g, max_chordality_n)?,
        at_witness,
    })
}
