use serde::Serialize;

use crate::distance::DistanceMatrix;
use crate::error::Result;
use crate::graph::Graph;
use crate::layering::{cluster_diameters, extreme};

use super::hyperbolicity::HalfInteger;

/// An upper bound on slimness implied by some other parameter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SlimnessBound {
    pub name: &'static str,
    pub value: u32,
}

/// Optional expensive inputs; bounds depending on a missing input are omitted.
#[derive(Clone, Copy, Debug, Default)]
pub struct BoundInputs {
    pub hyperbolicity: Option<HalfInteger>,
    pub tree_length: Option<u32>,
    pub tree_breadth: Option<u32>,
    pub chordality: Option<u32>,
}

pub const HALF_MAX_CLUSTER_DIAMETER: &str = "half-max-cluster-diameter";
pub const THREE_HALVES_CLUSTER_DIAMETER: &str = "three-halves-cluster-diameter";
pub const THREE_HYPERBOLICITY: &str = "three-hyperbolicity-plus-half";
pub const THREE_HALVES_TREE_LENGTH: &str = "three-halves-tree-length";
pub const THREE_TREE_BREADTH: &str = "three-tree-breadth";
pub const CHORDALITY_QUARTER: &str = "chordality-quarter-plus-one";
pub const CHORDAL: &str = "chordal ⇒ sl ≤ 1";
pub const FOUR_CHORDAL: &str = "4-chordal ⇒ sl ≤ 2";

/// Every applicable upper bound on `sl(G)`.
pub fn slimness_bound_report(g: &Graph, dm: &DistanceMatrix, inputs: &BoundInputs) -> Result<Vec<SlimnessBound>> {
    let all = cluster_diameters(g, dm)?;
    let max = extreme(&all, |a, b| a > b).value;
    let min = extreme(&all, |a, b| a < b).value;
    let mut out = vec![
        SlimnessBound {
            name: HALF_MAX_CLUSTER_DIAMETER,
            value: max / 2,
        },
        SlimnessBound {
            name: THREE_HALVES_CLUSTER_DIAMETER,
            value: 3 * min / 2,
        },
    ];
    if let Some(hb) = inputs.hyperbolicity {
        out.push(SlimnessBound {
            name: THREE_HYPERBOLICITY,
            value: (3 * hb.times2()).div_ceil(2) as u32,
        });
    }
    if let Some(tl) = inputs.tree_length {
        out.push(SlimnessBound {
            name: THREE_HALVES_TREE_LENGTH,
            value: 3 * tl / 2,
        });
    }
    if let Some(tb) = inputs.tree_breadth {
        out.push(SlimnessBound {
            name: THREE_TREE_BREADTH,
            value: 3 * tb,
        });
    }
    if let Some(k) = inputs.chordality {
        out.push(SlimnessBound {
            name: CHORDALITY_QUARTER,
            value: k / 4 + 1,
        });
        if k <= 3 {
            out.push(SlimnessBound { name: CHORDAL, value: 1 });
        }
        if k <= 4 {
            out.push(SlimnessBound {
                name: FOUR_CHORDAL,
                value: 2,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> (Graph, DistanceMatrix) {
        let g = Graph::from_edges(n, edges).unwrap();
        let dm = DistanceMatrix::new(&g).unwrap();
        (g, dm)
    }

    fn value(report: &[SlimnessBound], name: &str) -> Option<u32> {
        report.iter().find(|b| b.name == name).map(|b| b.value)
    }

    #[test]
    fn cycle_of_eight() {
        let (g, dm) = graph(8, &(0..8).map(|i| (i, (i + 1) % 8)).collect::<Vec<_>>());
        let r = slimness_bound_report(&g, &dm, &BoundInputs::default()).unwrap();
        assert_eq!(value(&r, HALF_MAX_CLUSTER_DIAMETER), Some(2));
        assert_eq!(value(&r, THREE_HALVES_CLUSTER_DIAMETER), Some(6));
        assert_eq!(value(&r, CHORDAL), None);
    }

    #[test]
    fn tree_bounds_are_non_negative() {
        let (g, dm) = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        let inputs = BoundInputs {
            hyperbolicity: Some(HalfInteger::ZERO),
            tree_length: Some(1),
            tree_breadth: Some(1),
            chordality: Some(2),
        };
        let r = slimness_bound_report(&g, &dm, &inputs).unwrap();
        assert_eq!(r.len(), 8);
        assert_eq!(value(&r, HALF_MAX_CLUSTER_DIAMETER), Some(0));
        assert_eq!(value(&r, THREE_HYPERBOLICITY), Some(0));
    }

    #[test]
    fn clique_is_chordal() {
        let (g, dm) = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let inputs = BoundInputs {
            chordality: Some(3),
            ..BoundInputs::default()
        };
        let r = slimness_bound_report(&g, &dm, &inputs).unwrap();
        assert_eq!(value(&r, CHORDAL), Some(1));
        assert_eq!(value(&r, CHORDALITY_QUARTER), Some(1));
    }
}
