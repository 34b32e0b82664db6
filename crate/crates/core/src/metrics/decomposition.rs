//! Tree-decompositions measured by length (bag diameter) and breadth (bag
//! covering radius), with exact small-graph optima.
//!
//! The exact routines search elimination orderings. The clique created when
//! `v` is eliminated after a set `S` depends only on `S` (it is `v` plus every
//! vertex outside `S` reachable from `v` through `S`), so the search over all
//! `n!` orderings collapses to a dynamic program over the `2^n` subsets.

use serde::Serialize;

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSubset};
use crate::layering::{cluster_diameter_at, layering_partition};

/// Default vertex cap for the exact tree-length and tree-breadth searches.
pub const DEFAULT_EXACT_MAX_N: usize = 9;

/// The subset table is `2^n` entries; beyond this the search is refused
/// whatever cap the caller requests.
const ABSOLUTE_EXACT_MAX_N: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeDecomposition {
    pub bags: Vec<VertexSubset>,
    pub tree_edges: Vec<(usize, usize)>,
    pub length: u32,
    pub breadth: u32,
}

impl TreeDecomposition {
    /// Decomposition induced by eliminating vertices in `order`: one bag per
    /// elimination clique, each attached to the bag of its earliest-eliminated
    /// later neighbor.
    pub fn from_elimination_order(g: &Graph, dm: &DistanceMatrix, order: &[VertexId]) -> Result<Self> {
        let n = g.n();
        let mut position = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || position[v] != usize::MAX {
                return Err(Error::input("elimination order is not a permutation"));
            }
            position[v] = i;
        }
        if order.len() != n {
            return Err(Error::input("elimination order is not a permutation"));
        }
        let mut fill: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect();
        let mut bags = Vec::with_capacity(n);
        let mut tree_edges = Vec::new();
        for (i, &v) in order.iter().enumerate() {
            let later: Vec<VertexId> = (0..n).filter(|&w| fill[v][w] && position[w] > i).collect();
            for (a, &p) in later.iter().enumerate() {
                for &q in &later[a + 1..] {
                    fill[p][q] = true;
                    fill[q][p] = true;
                }
            }
            if let Some(&next) = later.iter().min_by_key(|&&w| position[w]) {
                tree_edges.push((i, position[next]));
            } else if i + 1 < n {
                // a component finished; chain it to the next bag to keep one tree
                tree_edges.push((i, i + 1));
            }
            let mut bag = later;
            bag.push(v);
            bags.push(VertexSubset::new(bag));
        }
        let length = bags.iter().map(|b| dm.set_diameter(b.members())).max().unwrap_or(0);
        let breadth = bags.iter().map(|b| dm.set_radius(b.members())).max().unwrap_or(0);
        Ok(TreeDecomposition {
            bags,
            tree_edges,
            length,
            breadth,
        })
    }

    /// Checks vertex coverage, edge coverage and the running-intersection
    /// property (bags containing any vertex form a subtree).
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let k = self.bags.len();
        if k == 0 || self.tree_edges.len() + 1 != k {
            return false;
        }
        let mut adjacency = vec![Vec::new(); k];
        for &(a, b) in &self.tree_edges {
            if a >= k || b >= k {
                return false;
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        let spans = |allowed: &dyn Fn(usize) -> bool| -> bool {
            let nodes: Vec<usize> = (0..k).filter(|&i| allowed(i)).collect();
            let Some(&start) = nodes.first() else {
                return false;
            };
            let mut seen = vec![false; k];
            let mut stack = vec![start];
            seen[start] = true;
            let mut count = 1;
            while let Some(i) = stack.pop() {
                for &j in &adjacency[i] {
                    if allowed(j) && !seen[j] {
                        seen[j] = true;
                        count += 1;
                        stack.push(j);
                    }
                }
            }
            count == nodes.len()
        };
        if !spans(&|_| true) {
            return false;
        }
        let every_vertex = g.vertices().all(|v| spans(&|i| self.bags[i].contains(v)));
        let every_edge = g
            .edges()
            .all(|(u, v)| self.bags.iter().any(|b| b.contains(u) && b.contains(v)));
        every_vertex && every_edge
    }
}

/// Lower and upper tree-length bounds from a single layering partition:
/// `⌈Δ_s/3⌉ ≤ tl ≤ Δ_s + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TreeLengthBounds {
    pub source: VertexId,
    pub cluster_diameter: u32,
    pub lower: u32,
    pub upper: u32,
}

pub fn tree_length_bounds(g: &Graph, dm: &DistanceMatrix, s: VertexId) -> Result<TreeLengthBounds> {
    let lp = layering_partition(g, dm, s)?;
    let delta = cluster_diameter_at(dm, &lp);
    Ok(TreeLengthBounds {
        source: s,
        cluster_diameter: delta,
        lower: delta.div_ceil(3),
        upper: delta + 1,
    })
}

/// Exact tree-length; refuses graphs with more than `max_n` vertices.
pub fn exact_tree_length(g: &Graph, dm: &DistanceMatrix, max_n: usize) -> Result<u32> {
    Ok(optimal_elimination(g, max_n, |bag| dm.set_diameter(bag))?.0)
}

/// Exact tree-breadth; ball centers range over the whole vertex set.
pub fn exact_tree_breadth(g: &Graph, dm: &DistanceMatrix, max_n: usize) -> Result<u32> {
    Ok(optimal_elimination(g, max_n, |bag| dm.set_radius(bag))?.0)
}

/// A decomposition of minimum length.
pub fn optimal_length_decomposition(g: &Graph, dm: &DistanceMatrix, max_n: usize) -> Result<TreeDecomposition> {
    let (_, order) = optimal_elimination(g, max_n, |bag| dm.set_diameter(bag))?;
    TreeDecomposition::from_elimination_order(g, dm, &order)
}

/// A decomposition of minimum breadth.
pub fn optimal_breadth_decomposition(g: &Graph, dm: &DistanceMatrix, max_n: usize) -> Result<TreeDecomposition> {
    let (_, order) = optimal_elimination(g, max_n, |bag| dm.set_radius(bag))?;
    TreeDecomposition::from_elimination_order(g, dm, &order)
}

/// Minimizes the largest bag cost over all elimination orderings. Returns the
/// optimum and an ordering achieving it.
fn optimal_elimination(g: &Graph, max_n: usize, cost: impl Fn(&[VertexId]) -> u32) -> Result<(u32, Vec<VertexId>)> {
    let n = g.n();
    let limit = max_n.min(ABSOLUTE_EXACT_MAX_N);
    if n > limit {
        return Err(Error::SizeLimit {
            what: "vertex count for exact decomposition search",
            actual: n,
            limit,
        });
    }
    if n == 0 {
        return Err(Error::input("graph has no vertices"));
    }
    let adjacency: Vec<usize> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0usize, |acc, &w| acc | (1 << w)))
        .collect();
    let full = (1usize << n) - 1;
    let mut best = vec![u32::MAX; 1 << n];
    let mut last = vec![0u8; 1 << n];
    best[0] = 0;
    let mut bag = Vec::with_capacity(n);
    for set in 1..=full {
        let mut members = set;
        while members != 0 {
            let v = members.trailing_zeros() as usize;
            members &= members - 1;
            let before = set & !(1 << v);
            let prior = best[before];
            if prior >= best[set] {
                continue;
            }
            let clique = elimination_clique(&adjacency, before, v);
            bag.clear();
            bag.push(v);
            let mut rest = clique;
            while rest != 0 {
                bag.push(rest.trailing_zeros() as usize);
                rest &= rest - 1;
            }
            let value = prior.max(cost(&bag));
            if value < best[set] {
                best[set] = value;
                last[set] = v as u8;
            }
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut set = full;
    while set != 0 {
        let v = last[set] as usize;
        order.push(v);
        set &= !(1 << v);
    }
    order.reverse();
    Ok((best[full], order))
}

/// Vertices outside `eliminated ∪ {v}` reachable from `v` through `eliminated`.
fn elimination_clique(adjacency: &[usize], eliminated: usize, v: usize) -> usize {
    let mut visited = 1usize << v;
    let mut frontier = 1usize << v;
    let mut reach = 0usize;
    while frontier != 0 {
        let w = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let around = adjacency[w] & !visited;
        visited |= around;
        reach |= around & !eliminated;
        frontier |= around & eliminated;
    }
    reach
}
