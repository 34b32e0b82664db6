//! The inequality harness: evaluates every known bound relating slimness,
//! hyperbolicity, cluster-diameter, tree-length, tree-breadth, and graph
//! classes on one graph or a whole corpus.
//!
//! All values are carried doubled (`*_x2`) so half-integers stay exact.

mod batch;
pub mod names;

use serde::Serialize;

pub use batch::{batch_verify, Aggregates, BatchSource, GraphReport, GraphSize, VerifyReport};

use crate::classes::{self, chordality, is_at_free, is_block_graph, is_chordal};
use crate::distance::DistanceMatrix;
use crate::error::Result;
use crate::graph::Graph;
use crate::layering::cluster_diameters;
use crate::metrics::{exact_tree_breadth, exact_tree_length, hyperbolicity, slimness, slimness_with, TripleMode};

/// Size caps for the expensive parts of [`check_inequalities`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyOptions {
    pub max_exact_n: usize,
    pub max_chordality_n: usize,
    pub max_hereditary_n: usize,
    pub max_slimness_n: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_exact_n: crate::metrics::DEFAULT_EXACT_MAX_N,
            max_chordality_n: classes::DEFAULT_CHORDALITY_MAX_N,
            max_hereditary_n: classes::DEFAULT_HEREDITARY_MAX_N,
            max_slimness_n: 400,
        }
    }
}

/// One evaluated inequality `lhs ≤ rhs`, both sides doubled.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InequalityResult {
    pub name: &'static str,
    pub lhs_x2: u64,
    pub rhs_x2: u64,
    pub holds: bool,
    pub applicable: bool,
    pub tight: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl InequalityResult {
    fn check(name: &'static str, lhs_x2: u64, rhs_x2: u64) -> Self {
        InequalityResult {
            name,
            lhs_x2,
            rhs_x2,
            holds: lhs_x2 <= rhs_x2,
            applicable: true,
            tight: lhs_x2 == rhs_x2,
            reason: None,
        }
    }

    fn skipped(name: &'static str, reason: impl Into<String>) -> Self {
        InequalityResult {
            name,
            lhs_x2: 0,
            rhs_x2: 0,
            holds: true,
            applicable: false,
            tight: false,
            reason: Some(reason.into()),
        }
    }

    pub fn is_violation(&self) -> bool {
        self.applicable && !self.holds
    }
}

/// Parameters computed for one graph. Missing values were over budget.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GraphMetrics {
    pub slimness: Option<u32>,
    pub slimness_distinct: Option<u32>,
    pub hyperbolicity_x2: u64,
    pub diameter: u32,
    pub cluster_diameter_min: u32,
    pub cluster_diameter_max: u32,
    pub tree_length: Option<u32>,
    pub tree_breadth: Option<u32>,
    pub chordality: Option<u32>,
    pub is_chordal: bool,
    pub is_at_free: bool,
    pub is_block: bool,
    pub is_hhd_free: Option<bool>,
}

/// Computes [`GraphMetrics`] and evaluates every inequality.
pub fn check_inequalities(g: &Graph, options: &VerifyOptions) -> Result<(GraphMetrics, Vec<InequalityResult>)> {
    let dm = DistanceMatrix::new(g)?;
    let deltas = cluster_diameters(g, &dm)?;
    let delta_min = deltas.iter().copied().min().unwrap_or(0);
    let delta_max = deltas.iter().copied().max().unwrap_or(0);
    let within = |limit: usize| g.n() <= limit;

    let (sl, sl_distinct) = if within(options.max_slimness_n) {
        (
            Some(slimness(g, &dm).value),
            Some(slimness_with(g, &dm, TripleMode::Distinct).value),
        )
    } else {
        (None, None)
    };
    let exact = |f: fn(&Graph, &DistanceMatrix, usize) -> Result<u32>| {
        if within(options.max_exact_n) {
            f(g, &dm, options.max_exact_n).ok()
        } else {
            None
        }
    };
    let tl = exact(exact_tree_length);
    let tb = exact(exact_tree_breadth);
    let k = chordality(g, options.max_chordality_n, None).ok().map(|c| c.value);
    let hhd = classes::is_hhd_free(g, options.max_chordality_n).ok();
    let metrics = GraphMetrics {
        slimness: sl,
        slimness_distinct: sl_distinct,
        hyperbolicity_x2: hyperbolicity(&dm).times2(),
        diameter: dm.diameter(),
        cluster_diameter_min: delta_min,
        cluster_diameter_max: delta_max,
        tree_length: tl,
        tree_breadth: tb,
        chordality: k,
        is_chordal: is_chordal(g),
        is_at_free: is_at_free(g).0,
        is_block: is_block_graph(g),
        is_hhd_free: hhd,
    };
    let results = evaluate(g, &metrics, &deltas, options);
    Ok((metrics, results))
}

fn evaluate(g: &Graph, m: &GraphMetrics, deltas: &[u32], options: &VerifyOptions) -> Vec<InequalityResult> {
    use names::*;
    type R = InequalityResult;
    let x2 = |v: u32| 2 * u64::from(v);
    let hb = m.hyperbolicity_x2;
    let mut out = Vec::new();

    let sl_reason = format!("slimness skipped above {} vertices", options.max_slimness_n);
    let exact_reason = format!("exact tree-length skipped above {} vertices", options.max_exact_n);
    let chordality_reason = format!("chordality skipped above {} vertices", options.max_chordality_n);

    // Bounds that need slimness.
    if let Some(sl) = m.slimness {
        out.push(R::check(HB_LE_2SL, hb, 4 * u64::from(sl) + 1));
        out.push(R::check(SL_LE_3HB, x2(sl), 3 * hb + 1));
        out.push(R::check(SL_LE_HALF_MAX_CLUSTER, x2(sl), x2(m.cluster_diameter_max / 2)));
        let per_start = deltas.iter().map(|&d| 3 * d / 2).min().unwrap_or(0);
        out.push(R::check(SL_LE_THREE_HALVES_CLUSTER, x2(sl), x2(per_start)));
    } else {
        for name in [HB_LE_2SL, SL_LE_3HB, SL_LE_HALF_MAX_CLUSTER, SL_LE_THREE_HALVES_CLUSTER] {
            out.push(R::skipped(name, sl_reason.clone()));
        }
    }
    if let (Some(sd), Some(sl)) = (m.slimness_distinct, m.slimness) {
        out.push(R::check(DISTINCT_LE_UNRESTRICTED, x2(sd), x2(sl)));
    } else {
        out.push(R::skipped(DISTINCT_LE_UNRESTRICTED, sl_reason.clone()));
    }
    out.push(R::check(
        CLUSTER_MAX_LE_3_CLUSTER_MIN,
        x2(m.cluster_diameter_max),
        3 * x2(m.cluster_diameter_min),
    ));

    // Tree-length and tree-breadth.
    match (m.tree_length, m.tree_breadth) {
        (Some(tl), Some(tb)) => {
            let lower = deltas.iter().map(|&d| d.div_ceil(3)).max().unwrap_or(0);
            out.push(R::check(TL_GE_CLUSTER_THIRD, x2(lower), x2(tl)));
            out.push(R::check(TL_LE_CLUSTER_PLUS_ONE, x2(tl), x2(m.cluster_diameter_min + 1)));
            if g.n() >= 2 {
                out.push(R::check(ONE_LE_TB, 2, x2(tb)));
            } else {
                out.push(R::skipped(ONE_LE_TB, "single vertex"));
            }
            out.push(R::check(TB_LE_TL, x2(tb), x2(tl)));
            out.push(R::check(TL_LE_2TB, x2(tl), 2 * x2(tb)));
            match m.slimness {
                Some(sl) => {
                    out.push(R::check(SL_LE_THREE_HALVES_TL, x2(sl), x2(3 * tl / 2)));
                    out.push(R::check(SL_LE_3TB, x2(sl), x2(3 * tb)));
                }
                None => {
                    out.push(R::skipped(SL_LE_THREE_HALVES_TL, sl_reason.clone()));
                    out.push(R::skipped(SL_LE_3TB, sl_reason.clone()));
                }
            }
        }
        _ => {
            for name in [
                TL_GE_CLUSTER_THIRD,
                TL_LE_CLUSTER_PLUS_ONE,
                ONE_LE_TB,
                TB_LE_TL,
                TL_LE_2TB,
                SL_LE_THREE_HALVES_TL,
                SL_LE_3TB,
            ] {
                out.push(R::skipped(name, exact_reason.clone()));
            }
        }
    }

    // Chordality.
    match m.chordality {
        Some(k) => {
            out.push(R::check(CLUSTER_LE_HALF_CHORDALITY, x2(m.cluster_diameter_max), u64::from(k) + 4));
            match m.slimness {
                Some(sl) => {
                    out.push(R::check(SL_LE_CHORDALITY_QUARTER, x2(sl), x2(k / 4 + 1)));
                    if k <= 4 {
                        out.push(R::check(FOUR_CHORDAL_SL, x2(sl), 4));
                    } else {
                        out.push(R::skipped(FOUR_CHORDAL_SL, format!("chordality is {k}")));
                    }
                }
                None => {
                    out.push(R::skipped(SL_LE_CHORDALITY_QUARTER, sl_reason.clone()));
                    out.push(R::skipped(FOUR_CHORDAL_SL, sl_reason.clone()));
                }
            }
        }
        None => {
            for name in [CLUSTER_LE_HALF_CHORDALITY, SL_LE_CHORDALITY_QUARTER, FOUR_CHORDAL_SL] {
                out.push(R::skipped(name, chordality_reason.clone()));
            }
        }
    }

    // Class-conditional bounds.
    let conditional = |name: &'static str, member: Option<bool>, class: &str, lhs: Option<u64>, rhs: u64| match (member, lhs)
    {
        (None, _) => R::skipped(name, chordality_reason.clone()),
        (Some(false), _) => R::skipped(name, format!("graph is not {class}")),
        (Some(true), None) => R::skipped(name, sl_reason.clone()),
        (Some(true), Some(lhs)) => R::check(name, lhs, rhs),
    };
    let sl_x2 = m.slimness.map(x2);
    out.push(conditional(CHORDAL_SL, Some(m.is_chordal), "chordal", sl_x2, 2));
    out.push(conditional(CHORDAL_HB, Some(m.is_chordal), "chordal", Some(hb), 2));
    out.push(conditional(AT_FREE_SL, Some(m.is_at_free), "AT-free", sl_x2, 2));
    out.push(conditional(HHD_FREE_SL, m.is_hhd_free, "HHD-free", sl_x2, 2));
    let hereditary = match m.is_hhd_free {
        Some(true) if g.n() <= options.max_hereditary_n => {
            match classes::hereditary_max_slimness(g, options.max_hereditary_n) {
                Ok(h) => R::check(HHD_FREE_HEREDITARY, x2(h), 2),
                Err(e) => R::skipped(HHD_FREE_HEREDITARY, e.to_string()),
            }
        }
        Some(true) => R::skipped(
            HHD_FREE_HEREDITARY,
            format!("hereditary check skipped above {} vertices", options.max_hereditary_n),
        ),
        other => conditional(HHD_FREE_HEREDITARY, other, "HHD-free", None, 2),
    };
    out.push(hereditary);

    // Block graphs are exactly the graphs of slimness 0. A block graph checks
    // 2·sl ≤ 0; any other graph checks 2 ≤ 2·sl, which is never counted as
    // tight.
    match m.slimness {
        Some(sl) if m.is_block => out.push(R::check(BLOCK_IFF_SL_ZERO, x2(sl), 0)),
        Some(sl) => out.push(InequalityResult {
            tight: false,
            ..R::check(BLOCK_IFF_SL_ZERO, 2, x2(sl))
        }),
        None => out.push(R::skipped(BLOCK_IFF_SL_ZERO, sl_reason)),
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, path, FamilySpec};

    fn find<'a>(results: &'a [InequalityResult], name: &str) -> &'a InequalityResult {
        results.iter().find(|r| r.name == name).unwrap_or_else(|| panic!("missing {name}"))
    }

    #[test]
    fn eight_cycle_is_tight_for_the_cluster_bound() {
        let (m, results) = check_inequalities(&cycle(8).unwrap(), &VerifyOptions::default()).unwrap();
        assert_eq!(m.slimness, Some(2));
        assert_eq!(m.cluster_diameter_max, 4);
        let r = find(&results, names::SL_LE_HALF_MAX_CLUSTER);
        assert_eq!((r.lhs_x2, r.rhs_x2, r.holds, r.tight), (4, 4, true, true));
        assert!(results.iter().all(|r| !r.is_violation()));
    }

    #[test]
    fn trees_pass_everything() {
        let (_, results) = check_inequalities(&path(6).unwrap(), &VerifyOptions::default()).unwrap();
        for r in results.iter().filter(|r| r.applicable) {
            assert!(r.holds, "{r:?}");
            assert!(r.lhs_x2 <= 2, "{r:?}");
        }
    }

    #[test]
    fn bowtie_is_a_tight_block_graph() {
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let (_, results) = check_inequalities(&g, &VerifyOptions::default()).unwrap();
        let r = find(&results, names::BLOCK_IFF_SL_ZERO);
        assert!(r.applicable && r.holds && r.tight);
        let (_, results) = check_inequalities(&cycle(5).unwrap(), &VerifyOptions::default()).unwrap();
        let r = find(&results, names::BLOCK_IFF_SL_ZERO);
        assert!(r.applicable && r.holds && !r.tight);
    }

    #[test]
    fn caps_mark_entries_inapplicable() {
        let options = VerifyOptions {
            max_exact_n: 4,
            max_chordality_n: 4,
            max_hereditary_n: 4,
            max_slimness_n: 4,
        };
        let (m, results) = check_inequalities(&cycle(6).unwrap(), &options).unwrap();
        assert_eq!((m.slimness, m.tree_length, m.chordality), (None, None, None));
        for name in [names::SL_LE_HALF_MAX_CLUSTER, names::TB_LE_TL, names::FOUR_CHORDAL_SL, names::HHD_FREE_SL] {
            let r = find(&results, name);
            assert!(!r.applicable && r.reason.is_some(), "{name}");
        }
        assert!(find(&results, names::CLUSTER_MAX_LE_3_CLUSTER_MIN).applicable);
    }

    #[test]
    fn every_name_appears_once() {
        let g = FamilySpec::Random(8, 0.3).generate(3).unwrap();
        let (_, results) = check_inequalities(&g, &VerifyOptions::default()).unwrap();
        let mut seen: Vec<_> = results.iter().map(|r| r.name).collect();
        seen.sort_unstable();
        let mut all = names::ALL.to_vec();
        all.sort_unstable();
        assert_eq!(seen, all);
    }
}
