//! Layering partitions and layering trees.
//!
//! The layering of a connected graph from a start vertex `s` splits `V` into
//! BFS spheres; each sphere is refined into clusters, two sphere vertices
//! sharing a cluster iff they are joined by a path avoiding the ball of radius
//! one less. Contracting clusters yields the layering tree.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSubset};

/// A cluster address: layer index and position within the layer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ClusterId {
    pub layer: usize,
    pub index: usize,
}

#[derive(Clone, Debug)]
pub struct LayeringPartition {
    source: VertexId,
    layers: Vec<Vec<VertexSubset>>,
    cluster_of: Vec<ClusterId>,
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller root so representatives are deterministic
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Builds the layering partition from `s`, sweeping layers from the outermost
/// inward while merging components of the subgraph induced on `d(s, ·) ≥ i`.
pub fn layering_partition(g: &Graph, dm: &DistanceMatrix, s: VertexId) -> Result<LayeringPartition> {
    g.require_connected()?;
    if s >= g.n() {
        return Err(Error::input(format!("start vertex {s} is out of range")));
    }
    let dist = dm.row(s);
    let ecc = dm.eccentricity(s) as usize;
    let mut by_layer: Vec<Vec<VertexId>> = vec![Vec::new(); ecc + 1];
    for v in g.vertices() {
        by_layer[dist[v] as usize].push(v);
    }

    let mut sets = DisjointSets::new(g.n());
    let mut layers: Vec<Vec<VertexSubset>> = vec![Vec::new(); ecc + 1];
    let mut cluster_of = vec![ClusterId { layer: 0, index: 0 }; g.n()];
    let mut slot = vec![usize::MAX; g.n()];
    for i in (0..=ecc).rev() {
        for &v in &by_layer[i] {
            for &w in g.neighbors(v) {
                if dist[w] as usize >= i {
                    sets.union(v, w);
                }
            }
        }
        // Group the layer by component root; layer vertices are in id order,
        // so clusters come out ordered by smallest member.
        let mut groups: Vec<Vec<VertexId>> = Vec::new();
        for &v in &by_layer[i] {
            let r = sets.find(v);
            if slot[r] == usize::MAX {
                slot[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[slot[r]].push(v);
        }
        for &v in &by_layer[i] {
            slot[sets.find(v)] = usize::MAX;
        }
        for (index, members) in groups.into_iter().enumerate() {
            for &v in &members {
                cluster_of[v] = ClusterId { layer: i, index };
            }
            layers[i].push(VertexSubset::new(members));
        }
    }
    Ok(LayeringPartition {
        source: s,
        layers,
        cluster_of,
    })
}

impl LayeringPartition {
    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn layers(&self) -> &[Vec<VertexSubset>] {
        &self.layers
    }

    pub fn cluster(&self, id: ClusterId) -> &VertexSubset {
        &self.layers[id.layer][id.index]
    }

    pub fn cluster_of(&self, v: VertexId) -> ClusterId {
        self.cluster_of[v]
    }

    pub fn cluster_ids(&self) -> impl Iterator<Item = ClusterId> + '_ {
        self.layers.iter().enumerate().flat_map(|(layer, clusters)| {
            (0..clusters.len()).map(move |index| ClusterId { layer, index })
        })
    }

    pub fn cluster_count(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }
}

/// The tree obtained by contracting every cluster of a layering partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayeringTree {
    nodes: Vec<ClusterId>,
    edges: Vec<(ClusterId, ClusterId)>,
}

/// Joins two clusters whenever some graph edge runs between them.
///
/// # Panics
///
/// Panics if the result is not a tree; that can only come from a partition
/// that was not produced from `g`.
pub fn layering_tree(g: &Graph, lp: &LayeringPartition) -> LayeringTree {
    let nodes: Vec<ClusterId> = lp.cluster_ids().collect();
    let mut edges: Vec<(ClusterId, ClusterId)> = g
        .edges()
        .filter_map(|(u, v)| {
            let (a, b) = (lp.cluster_of(u), lp.cluster_of(v));
            match a.cmp(&b) {
                std::cmp::Ordering::Less => Some((a, b)),
                std::cmp::Ordering::Greater => Some((b, a)),
                std::cmp::Ordering::Equal => None,
            }
        })
        .collect();
    edges.sort_unstable();
    edges.dedup();
    let tree = LayeringTree { nodes, edges };
    assert!(tree.is_tree(), "layering tree invariant violated for start {}", lp.source());
    assert!(
        tree.edges.iter().all(|(a, b)| b.layer == a.layer + 1),
        "layering tree edge skips a layer"
    );
    tree
}

impl LayeringTree {
    pub fn nodes(&self) -> &[ClusterId] {
        &self.nodes
    }

    pub fn edges(&self) -> &[(ClusterId, ClusterId)] {
        &self.edges
    }

    /// `|E| = |V| - 1` and connected.
    pub fn is_tree(&self) -> bool {
        if self.nodes.is_empty() || self.edges.len() + 1 != self.nodes.len() {
            return false;
        }
        let position = |c: &ClusterId| self.nodes.binary_search(c).ok();
        let mut adjacency = vec![Vec::new(); self.nodes.len()];
        for (a, b) in &self.edges {
            let (Some(i), Some(j)) = (position(a), position(b)) else {
                return false;
            };
            adjacency[i].push(j);
            adjacency[j].push(i);
        }
        let mut seen = vec![false; self.nodes.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for &j in &adjacency[i] {
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Graphviz rendering; node `c<layer>_<index>` is labeled with the sorted
    /// external labels of its members.
    pub fn to_dot(&self, g: &Graph, lp: &LayeringPartition) -> String {
        let mut out = String::from("graph layering_tree {\n");
        for &c in &self.nodes {
            let mut labels: Vec<&str> = lp.cluster(c).iter().map(|v| g.label(v)).collect();
            labels.sort_unstable();
            let _ = writeln!(
                out,
                "  c{}_{} [label=\"{}\"];",
                c.layer,
                c.index,
                labels.join(",").replace('"', "\\\"")
            );
        }
        for (a, b) in &self.edges {
            let _ = writeln!(out, "  c{}_{} -- c{}_{};", a.layer, a.index, b.layer, b.index);
        }
        out.push_str("}\n");
        out
    }
}

/// `Δ_s`: the largest G-diameter of a cluster.
pub fn cluster_diameter_at(dm: &DistanceMatrix, lp: &LayeringPartition) -> u32 {
    lp.layers
        .iter()
        .flatten()
        .map(|c| dm.set_diameter(c.members()))
        .max()
        .unwrap_or(0)
}

/// `Δ_s` for every start vertex, indexed by start.
pub fn cluster_diameters(g: &Graph, dm: &DistanceMatrix) -> Result<Vec<u32>> {
    g.require_connected()?;
    g.vertices()
        .into_par_iter()
        .map(|s| layering_partition(g, dm, s).map(|lp| cluster_diameter_at(dm, &lp)))
        .collect()
}

/// An extremal cluster-diameter with the start vertex achieving it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClusterDiameter {
    pub value: u32,
    pub source: VertexId,
}

/// `Δ(G)` with the smallest start id achieving it.
pub fn cluster_diameter_min(g: &Graph, dm: &DistanceMatrix) -> Result<ClusterDiameter> {
    let all = cluster_diameters(g, dm)?;
    Ok(extreme(&all, |cand, best| cand < best))
}

/// `Δ̂(G)` with the smallest start id achieving it.
pub fn cluster_diameter_max(g: &Graph, dm: &DistanceMatrix) -> Result<ClusterDiameter> {
    let all = cluster_diameters(g, dm)?;
    Ok(extreme(&all, |cand, best| cand > best))
}

pub(crate) fn extreme(all: &[u32], better: impl Fn(u32, u32) -> bool) -> ClusterDiameter {
    let mut best = ClusterDiameter {
        value: all[0],
        source: 0,
    };
    for (s, &value) in all.iter().enumerate().skip(1) {
        if better(value, best.value) {
            best = ClusterDiameter { value, source: s };
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    fn members(lp: &LayeringPartition) -> Vec<Vec<Vec<usize>>> {
        lp.layers()
            .iter()
            .map(|l| l.iter().map(|c| c.members().to_vec()).collect())
            .collect()
    }

    #[test]
    fn cycle_of_eight() {
        let g = cycle(8);
        let dm = DistanceMatrix::new(&g).unwrap();
        let lp = layering_partition(&g, &dm, 0).unwrap();
        assert_eq!(
            members(&lp),
            vec![
                vec![vec![0]],
                vec![vec![1, 7]],
                vec![vec![2, 6]],
                vec![vec![3, 5]],
                vec![vec![4]]
            ]
        );
        let tree = layering_tree(&g, &lp);
        assert_eq!(tree.nodes().len(), 5);
        assert_eq!(tree.edges().len(), 4);
        assert_eq!(cluster_diameter_at(&dm, &lp), 4);
        assert_eq!(cluster_diameter_min(&g, &dm).unwrap(), ClusterDiameter { value: 4, source: 0 });
        assert_eq!(cluster_diameter_max(&g, &dm).unwrap(), ClusterDiameter { value: 4, source: 0 });
    }

    #[test]
    fn trees_have_singleton_clusters() {
        // spider with legs of length 2 and 1
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 3), (3, 4)]).unwrap();
        let dm = DistanceMatrix::new(&g).unwrap();
        for s in g.vertices() {
            let lp = layering_partition(&g, &dm, s).unwrap();
            assert_eq!(lp.cluster_count(), 5);
            let tree = layering_tree(&g, &lp);
            // Contracting singletons reproduces the input edges.
            assert_eq!(tree.edges().len(), g.m());
            assert_eq!(cluster_diameter_at(&dm, &lp), 0);
        }
    }

    #[test]
    fn clique_layer_is_one_cluster() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let dm = DistanceMatrix::new(&g).unwrap();
        let lp = layering_partition(&g, &dm, 0).unwrap();
        assert_eq!(members(&lp), vec![vec![vec![0]], vec![vec![1, 2, 3]]]);
        assert_eq!(layering_tree(&g, &lp).nodes().len(), 2);
        assert_eq!(cluster_diameter_at(&dm, &lp), 1);
    }

    #[test]
    fn star_leaves_are_separate_clusters() {
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let dm = DistanceMatrix::new(&g).unwrap();
        let lp = layering_partition(&g, &dm, 0).unwrap();
        assert_eq!(lp.layers()[1].len(), 4);
    }

    #[test]
    fn dot_output() {
        let g = cycle(4);
        let dm = DistanceMatrix::new(&g).unwrap();
        let lp = layering_partition(&g, &dm, 0).unwrap();
        let dot = layering_tree(&g, &lp).to_dot(&g, &lp);
        assert_eq!(
            dot,
            "graph layering_tree {\n  c0_0 [label=\"0\"];\n  c1_0 [label=\"1,3\"];\n  c2_0 [label=\"2\"];\n  c0_0 -- c1_0;\n  c1_0 -- c2_0;\n}\n"
        );
    }

    #[test]
    fn ties_pick_smallest_start() {
        let all = [3, 1, 4, 1, 4];
        assert_eq!(extreme(&all, |a, b| a < b), ClusterDiameter { value: 1, source: 1 });
        assert_eq!(extreme(&all, |a, b| a > b), ClusterDiameter { value: 4, source: 2 });
    }
}
