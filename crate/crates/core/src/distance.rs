//! Hop distances and the metric primitives built on them: intervals, balls,
//! eccentricities and isometric subsets.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSubset};

const UNREACHED: u32 = u32::MAX;

/// BFS distances from `s`; fails on a disconnected graph, naming the first
/// unreached vertex.
pub fn bfs_distances(g: &Graph, s: VertexId) -> Result<Vec<u32>> {
    if s >= g.n() {
        return Err(Error::input(format!("source {s} is out of range")));
    }
    let dist = bfs_raw(g, s);
    if let Some(v) = dist.iter().position(|&d| d == UNREACHED) {
        return Err(Error::Disconnected(g.label(v).to_owned()));
    }
    Ok(dist)
}

fn bfs_raw(g: &Graph, s: VertexId) -> Vec<u32> {
    let mut dist = vec![UNREACHED; g.n()];
    let mut queue = VecDeque::with_capacity(g.n());
    dist[s] = 0;
    queue.push_back(s);
    while let Some(v) = queue.pop_front() {
        let next = dist[v] + 1;
        for &w in g.neighbors(v) {
            if dist[w] == UNREACHED {
                dist[w] = next;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// All-pairs hop distances of a connected graph, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    /// One BFS per source.
    pub fn new(g: &Graph) -> Result<Self> {
        g.require_connected()?;
        let n = g.n();
        let mut dist = Vec::with_capacity(n * n);
        for s in g.vertices() {
            dist.extend(bfs_distances(g, s)?);
        }
        Ok(DistanceMatrix { n, dist })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: VertexId, v: VertexId) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: VertexId) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    /// `d(v, M)`, the distance from `v` to the nearest member of `set`.
    pub fn to_set(&self, v: VertexId, set: impl IntoIterator<Item = VertexId>) -> Option<u32> {
        set.into_iter().map(|u| self.get(v, u)).min()
    }

    /// `I(u, v)`: all `z` with `d(u, v) = d(u, z) + d(z, v)`.
    pub fn interval(&self, u: VertexId, v: VertexId) -> VertexSubset {
        let duv = self.get(u, v);
        VertexSubset::new(
            (0..self.n)
                .filter(|&z| self.get(u, z) + self.get(z, v) == duv)
                .collect(),
        )
    }

    #[inline]
    pub fn in_interval(&self, u: VertexId, v: VertexId, z: VertexId) -> bool {
        self.get(u, z) + self.get(z, v) == self.get(u, v)
    }

    /// `B_r(s)`: all vertices within distance `r` of `s`.
    pub fn ball(&self, s: VertexId, r: u32) -> VertexSubset {
        VertexSubset::new(self.row(s).iter().enumerate().filter(|(_, &d)| d <= r).map(|(v, _)| v).collect())
    }

    pub fn eccentricity(&self, v: VertexId) -> u32 {
        self.row(v).iter().copied().max().unwrap_or(0)
    }

    pub fn radius(&self) -> u32 {
        (0..self.n).map(|v| self.eccentricity(v)).min().unwrap_or(0)
    }

    pub fn diameter(&self) -> u32 {
        self.dist.iter().copied().max().unwrap_or(0)
    }

    /// Largest pairwise distance within `set`.
    pub fn set_diameter(&self, set: &[VertexId]) -> u32 {
        let mut best = 0;
        for (i, &u) in set.iter().enumerate() {
            for &v in &set[i + 1..] {
                best = best.max(self.get(u, v));
            }
        }
        best
    }

    /// Smallest `r` such that some vertex of the whole graph covers `set`
    /// with a ball of radius `r`.
    pub fn set_radius(&self, set: &[VertexId]) -> u32 {
        (0..self.n)
            .map(|c| set.iter().map(|&u| self.get(c, u)).max().unwrap_or(0))
            .min()
            .unwrap_or(0)
    }
}

/// True iff the subgraph induced on `s` is connected and preserves every
/// pairwise distance of `g`.
pub fn is_isometric_subset(g: &Graph, dm: &DistanceMatrix, s: &VertexSubset) -> bool {
    let Ok(h) = g.induced_subgraph(s) else {
        return false;
    };
    if !h.is_connected() {
        return false;
    }
    let members = s.members();
    (0..h.n()).all(|i| {
        let local = bfs_raw(&h, i);
        (0..h.n()).all(|j| local[j] == dm.get(members[i], members[j]))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()).unwrap()
    }

    fn clique(n: usize) -> Graph {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        Graph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn bfs_examples() {
        assert_eq!(bfs_distances(&cycle(4), 0).unwrap(), vec![0, 1, 2, 1]);
        assert_eq!(bfs_distances(&clique(4), 2).unwrap(), vec![1, 1, 0, 1]);
        assert_eq!(bfs_distances(&path(4), 0).unwrap(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn disconnected_is_rejected() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(bfs_distances(&g, 0), Err(Error::Disconnected("2".into())));
        assert!(matches!(DistanceMatrix::new(&g), Err(Error::Disconnected(_))));
    }

    #[test]
    fn matrix_examples() {
        assert_eq!(DistanceMatrix::new(&cycle(4)).unwrap().get(0, 2), 2);
        let k4 = DistanceMatrix::new(&clique(4)).unwrap();
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(k4.get(u, v), u32::from(u != v));
            }
        }
        assert_eq!(DistanceMatrix::new(&path(4)).unwrap().get(0, 3), 3);
    }

    #[test]
    fn intervals() {
        let c4 = DistanceMatrix::new(&cycle(4)).unwrap();
        assert_eq!(c4.interval(0, 2).members(), &[0, 1, 2, 3]);
        let c5 = DistanceMatrix::new(&cycle(5)).unwrap();
        assert_eq!(c5.interval(0, 2).members(), &[0, 1, 2]);
        let k4 = DistanceMatrix::new(&clique(4)).unwrap();
        assert_eq!(k4.interval(0, 1).members(), &[0, 1]);
    }

    #[test]
    fn balls() {
        let c8 = DistanceMatrix::new(&cycle(8)).unwrap();
        assert_eq!(c8.ball(0, 1).members(), &[0, 1, 7]);
        assert_eq!(c8.ball(3, 0).members(), &[3]);
        assert_eq!(c8.ball(5, c8.diameter()).len(), 8);
    }

    #[test]
    fn eccentricities() {
        let p5 = DistanceMatrix::new(&path(5)).unwrap();
        assert_eq!((p5.radius(), p5.diameter()), (2, 4));
        let c8 = DistanceMatrix::new(&cycle(8)).unwrap();
        assert_eq!((c8.radius(), c8.diameter()), (4, 4));
        let k1 = DistanceMatrix::new(&Graph::from_edges(1, &[]).unwrap()).unwrap();
        assert_eq!((k1.radius(), k1.diameter()), (0, 0));
    }

    #[test]
    fn isometric_subsets() {
        let c8 = cycle(8);
        let d8 = DistanceMatrix::new(&c8).unwrap();
        assert!(is_isometric_subset(&c8, &d8, &VertexSubset::new(vec![0, 1, 2])));
        let c6 = cycle(6);
        let d6 = DistanceMatrix::new(&c6).unwrap();
        assert!(!is_isometric_subset(&c6, &d6, &VertexSubset::new(vec![0, 1, 3, 4])));
        assert!(is_isometric_subset(&c6, &d6, &VertexSubset::new(vec![0, 1, 2, 3])));
        // A 5-vertex arc of C_6 is connected but stretches d(0,4) from 2 to 4.
        assert!(!is_isometric_subset(&c6, &d6, &VertexSubset::new(vec![0, 1, 2, 3, 4])));
    }

    #[test]
    fn set_radius_uses_all_centers() {
        let c6 = DistanceMatrix::new(&cycle(6)).unwrap();
        // {0, 2} is covered by B_1(1) although neither member covers the other within 1.
        assert_eq!(c6.set_radius(&[0, 2]), 1);
        assert_eq!(c6.set_diameter(&[0, 2, 3]), 3);
    }
}
