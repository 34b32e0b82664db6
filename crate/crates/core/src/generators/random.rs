use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

use super::families::clique;
use super::rng::SplitMix64;

/// Resampling budget for [`random_interval`].
pub const INTERVAL_RETRIES: usize = 1000;

/// Random recursive tree plus independent extra edges. Vertex `i ≥ 1`
/// attaches to a uniform earlier vertex, then every absent pair `(u, v)`,
/// `u < v`, in lexicographic order is added with probability `p`.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(Error::input("random graph needs at least 1 vertex"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::input(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = SplitMix64::new(seed);
    let mut present = vec![false; n * n];
    let mut edges = Vec::new();
    for v in 1..n {
        let u = rng.index(v);
        present[u * n + v] = true;
        edges.push((u, v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !present[u * n + v] && rng.chance(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Random k-tree: `K_{min(k+1, n)}`, then each new vertex joins a uniformly
/// chosen existing k-clique.
pub fn random_chordal(n: usize, k: usize, seed: u64) -> Result<Graph> {
    if n < 1 || k < 1 {
        return Err(Error::input("random chordal graph needs n ≥ 1 and k ≥ 1"));
    }
    if n <= k + 1 {
        return clique(n);
    }
    let mut rng = SplitMix64::new(seed);
    let mut edges: Vec<(VertexId, VertexId)> = (0..=k).flat_map(|u| (u + 1..=k).map(move |v| (u, v))).collect();
    let mut cliques: Vec<Vec<VertexId>> = (0..=k)
        .map(|skip| (0..=k).filter(|&v| v != skip).collect())
        .collect();
    for v in k + 1..n {
        let base = cliques[rng.index(cliques.len())].clone();
        edges.extend(base.iter().map(|&u| (u, v)));
        for i in 0..base.len() {
            let mut next = base.clone();
            next.remove(i);
            next.push(v);
            cliques.push(next);
        }
    }
    Graph::from_edges(n, &edges)
}

/// Random block graph: starting from one vertex, repeatedly attach a clique
/// of uniform size in `[2, max_clique]` at a uniformly chosen existing
/// vertex. The last clique is truncated to reach exactly `n` vertices.
pub fn random_block(n: usize, max_clique: usize, seed: u64) -> Result<Graph> {
    if n < 1 || max_clique < 2 {
        return Err(Error::input("random block graph needs n ≥ 1 and max_clique ≥ 2"));
    }
    let mut rng = SplitMix64::new(seed);
    let mut count = 1;
    let mut edges = Vec::new();
    while count < n {
        let size = rng.range_inclusive(2, max_clique as u64) as usize;
        let size = size.min(n - count + 1);
        let shared = rng.index(count);
        let members: Vec<VertexId> = std::iter::once(shared).chain(count..count + size - 1).collect();
        for (i, &a) in members.iter().enumerate() {
            edges.extend(members[i + 1..].iter().map(|&b| (a, b)));
        }
        count += size - 1;
    }
    Graph::from_edges(n, &edges)
}

/// Intersection graph of `n` random closed intervals with integer endpoints
/// uniform on `[0, 2n]`, resampled until connected.
pub fn random_interval(n: usize, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(Error::input("random interval graph needs at least 1 vertex"));
    }
    let mut rng = SplitMix64::new(seed);
    let span = 2 * n as u64;
    for _ in 0..INTERVAL_RETRIES {
        let intervals: Vec<(u64, u64)> = (0..n)
            .map(|_| {
                let a = rng.range_inclusive(0, span);
                let b = rng.range_inclusive(0, span);
                (a.min(b), a.max(b))
            })
            .collect();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let (lu, ru) = intervals[u];
                let (lv, rv) = intervals[v];
                if lu.max(lv) <= ru.min(rv) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::Generation(format!(
        "no connected interval graph on {n} vertices after {INTERVAL_RETRIES} samples"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::{is_at_free, is_block_graph, is_chordal};

    #[test]
    fn connected_extremes() {
        assert_eq!(random_connected(1, 0.5, 3).unwrap().n(), 1);
        let tree = random_connected(8, 0.0, 11).unwrap();
        assert_eq!(tree.m(), 7);
        assert!(tree.is_connected());
        assert_eq!(random_connected(8, 1.0, 11).unwrap().m(), 28);
        assert!(random_connected(4, 1.5, 0).is_err());
    }

    #[test]
    fn deterministic() {
        assert_eq!(random_connected(12, 0.3, 42).unwrap(), random_connected(12, 0.3, 42).unwrap());
        assert_eq!(random_chordal(12, 2, 42).unwrap(), random_chordal(12, 2, 42).unwrap());
        assert_ne!(random_connected(12, 0.3, 42).unwrap(), random_connected(12, 0.3, 43).unwrap());
    }

    #[test]
    fn chordal_graphs_are_chordal() {
        for seed in 0..30 {
            let g = random_chordal(12, 1 + (seed % 3) as usize, seed).unwrap();
            assert!(g.is_connected());
            assert!(is_chordal(&g));
        }
        assert_eq!(random_chordal(3, 4, 0).unwrap().m(), 3);
        // k = 1 builds trees
        assert_eq!(random_chordal(9, 1, 5).unwrap().m(), 8);
    }

    #[test]
    fn block_graphs_are_block_graphs() {
        for seed in 0..30 {
            let g = random_block(10, 4, seed).unwrap();
            assert_eq!(g.n(), 10);
            assert!(g.is_connected());
            assert!(is_block_graph(&g));
        }
    }

    #[test]
    fn interval_graphs_are_at_free() {
        for seed in 0..30 {
            let g = random_interval(10, seed).unwrap();
            assert!(g.is_connected());
            assert!(is_at_free(&g).0);
        }
    }
}
