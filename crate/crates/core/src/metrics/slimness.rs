//! Exact slimness via bottleneck dynamic programming on shortest-path DAGs.
//!
//! For a triple `(x, y, z)` and a vertex `u` inside `I(x, y)`, the best an
//! adversary can do is route `P(x, z)` and `P(y, z)` independently as far from
//! `u` as possible, so the triangle value at `u` is
//! `min(f(u, x, z), f(u, y, z))` where `f(u, x, z)` is the largest possible
//! minimum distance from `u` to a shortest `x`–`z` path.

use rayon::prelude::*;
use serde::Serialize;

use crate::distance::DistanceMatrix;
use crate::graph::{Graph, VertexId};

/// Which vertex triples count as geodesic triangles.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TripleMode {
    /// `x ≠ y`, `z` arbitrary; bigons (`z = x` or `z = y`) are triangles too.
    #[default]
    Unrestricted,
    /// `x`, `y`, `z` pairwise distinct.
    Distinct,
}

/// A triple and side vertex certifying the slimness value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct TriangleWitness {
    pub x: VertexId,
    pub y: VertexId,
    pub z: VertexId,
    pub u: VertexId,
    pub delta: u32,
    pub avoid_xz: u32,
    pub avoid_yz: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Slimness {
    pub value: u32,
    /// Absent when no triple has an interior side vertex (cliques, `n ≤ 2`).
    pub witness: Option<TriangleWitness>,
}

/// `f(u, x, z)`: the maximum over shortest `x`–`z` paths of the minimum
/// distance from `u` to a path vertex.
pub fn max_avoiding_distance(g: &Graph, dm: &DistanceMatrix, u: VertexId, x: VertexId, z: VertexId) -> u32 {
    if x == z {
        return dm.get(u, x);
    }
    let dxz = dm.get(x, z);
    let mut layers: Vec<Vec<VertexId>> = vec![Vec::new(); dxz as usize + 1];
    for v in g.vertices() {
        if dm.in_interval(x, z, v) {
            layers[dm.get(x, v) as usize].push(v);
        }
    }
    let mut best = vec![0u32; g.n()];
    best[x] = dm.get(u, x);
    for layer in &layers[1..] {
        for &b in layer {
            let db = dm.get(x, b);
            let through = g
                .neighbors(b)
                .iter()
                .filter(|&&a| dm.get(x, a) + 1 == db && dm.in_interval(x, z, a))
                .map(|&a| best[a])
                .max()
                .expect("interval vertex without a predecessor");
            best[b] = through.min(dm.get(u, b));
        }
    }
    best[z]
}

/// `f(u, x, z)` for every `u` and `x` at a fixed target `z`, as a row-major
/// table indexed `[u * n + x]`.
pub fn avoidance_table(g: &Graph, dm: &DistanceMatrix, z: VertexId) -> Vec<u32> {
    let n = g.n();
    let from_z = dm.row(z);
    let mut order: Vec<VertexId> = g.vertices().collect();
    order.sort_by_key(|&v| from_z[v]);
    // predecessors toward z along shortest paths
    let toward: Vec<Vec<VertexId>> = g
        .vertices()
        .map(|v| {
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|&a| from_z[a] + 1 == from_z[v])
                .collect()
        })
        .collect();
    let mut table = vec![0u32; n * n];
    for u in 0..n {
        let du = dm.row(u);
        let row = &mut table[u * n..(u + 1) * n];
        for &v in &order {
            row[v] = if v == z {
                du[z]
            } else {
                let through = toward[v].iter().map(|&a| row[a]).max().unwrap_or(0);
                through.min(du[v])
            };
        }
    }
    table
}

/// Exact slimness with the unrestricted triple convention.
pub fn slimness(g: &Graph, dm: &DistanceMatrix) -> Slimness {
    slimness_with(g, dm, TripleMode::Unrestricted)
}

/// Exact slimness; the witness is the lexicographically smallest
/// `(x, y, z, u)` achieving the maximum.
pub fn slimness_with(g: &Graph, dm: &DistanceMatrix, mode: TripleMode) -> Slimness {
    let n = g.n();
    let per_target: Vec<Option<TriangleWitness>> = (0..n)
        .into_par_iter()
        .map(|z| best_for_target(g, dm, z, mode))
        .collect();
    let mut best: Option<TriangleWitness> = None;
    for w in per_target.into_iter().flatten() {
        best = match best {
            Some(b) if b.delta > w.delta || (b.delta == w.delta && key(&b) <= key(&w)) => Some(b),
            _ => Some(w),
        };
    }
    Slimness {
        value: best.map_or(0, |w| w.delta),
        witness: best,
    }
}

fn key(w: &TriangleWitness) -> (VertexId, VertexId, VertexId, VertexId) {
    (w.x, w.y, w.z, w.u)
}

fn best_for_target(g: &Graph, dm: &DistanceMatrix, z: VertexId, mode: TripleMode) -> Option<TriangleWitness> {
    let n = g.n();
    let table = avoidance_table(g, dm, z);
    let f = |u: VertexId, x: VertexId| table[u * n + x];
    let mut best: Option<TriangleWitness> = None;
    for x in 0..n {
        if mode == TripleMode::Distinct && x == z {
            continue;
        }
        for y in x + 1..n {
            if mode == TripleMode::Distinct && y == z {
                continue;
            }
            let dxy = dm.get(x, y);
            // any side vertex is within d(x,y)/2 of an endpoint
            if let Some(b) = best {
                if dxy / 2 <= b.delta {
                    continue;
                }
            }
            if dxy < 2 {
                continue;
            }
            for u in 0..n {
                if u == x || u == y || !dm.in_interval(x, y, u) {
                    continue;
                }
                let (avoid_xz, avoid_yz) = (f(u, x), f(u, y));
                let delta = avoid_xz.min(avoid_yz);
                if best.is_none_or(|b| delta > b.delta) {
                    best = Some(TriangleWitness {
                        x,
                        y,
                        z,
                        u,
                        delta,
                        avoid_xz,
                        avoid_yz,
                    });
                }
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> (Graph, DistanceMatrix) {
        let g = Graph::from_edges(n, edges).unwrap();
        let dm = DistanceMatrix::new(&g).unwrap();
        (g, dm)
    }

    fn cycle(n: usize) -> (Graph, DistanceMatrix) {
        graph(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
    }

    #[test]
    fn avoiding_distance_examples() {
        let (p, dp) = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(max_avoiding_distance(&p, &dp, 1, 0, 3), 0);
        let (c8, d8) = cycle(8);
        assert_eq!(max_avoiding_distance(&c8, &d8, 2, 0, 4), 2);
        let (k4, dk) = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(max_avoiding_distance(&k4, &dk, 3, 0, 1), 1);
        assert_eq!(max_avoiding_distance(&c8, &d8, 5, 1, 1), 4);
    }

    #[test]
    fn table_matches_single_calls() {
        let (g, dm) = graph(
            7,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 6), (6, 4), (2, 5)],
        );
        for z in g.vertices() {
            let t = avoidance_table(&g, &dm, z);
            for u in g.vertices() {
                for x in g.vertices() {
                    assert_eq!(t[u * 7 + x], max_avoiding_distance(&g, &dm, u, x, z));
                }
            }
        }
    }

    #[test]
    fn cycle_of_eight() {
        let (g, dm) = cycle(8);
        let s = slimness(&g, &dm);
        assert_eq!(s.value, 2);
        let w = s.witness.unwrap();
        // bigon 0 → 4 → 0 through u = 2 is the lexicographically first
        assert_eq!((w.x, w.y, w.z, w.u, w.delta), (0, 4, 0, 2, 2));
        // the textbook triangle (0, 4, 6) with side vertex 2 also reaches 2
        let t = max_avoiding_distance(&g, &dm, 2, 0, 6).min(max_avoiding_distance(&g, &dm, 2, 4, 6));
        assert_eq!(t, 2);
        let distinct = slimness_with(&g, &dm, TripleMode::Distinct);
        assert_eq!(distinct.value, 2);
        let w = distinct.witness.unwrap();
        assert!(w.z != w.x && w.z != w.y);
    }

    #[test]
    fn small_values() {
        let (c4, d4) = cycle(4);
        assert_eq!(slimness(&c4, &d4).value, 1);
        let (bowtie, db) = graph(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]);
        assert_eq!(slimness(&bowtie, &db).value, 0);
        let (tree, dt) = graph(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (4, 5)]);
        let s = slimness(&tree, &dt);
        assert_eq!(s.value, 0);
        assert!(s.witness.is_some());
        let (k4, dk) = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(slimness(&k4, &dk), Slimness { value: 0, witness: None });
        let (k1, d1) = graph(1, &[]);
        assert_eq!(slimness(&k1, &d1).value, 0);
    }

    #[test]
    fn witness_fields_are_consistent() {
        let (g, dm) = cycle(9);
        let w = slimness(&g, &dm).witness.unwrap();
        assert!(dm.in_interval(w.x, w.y, w.u));
        assert_eq!(w.avoid_xz, max_avoiding_distance(&g, &dm, w.u, w.x, w.z));
        assert_eq!(w.avoid_yz, max_avoiding_distance(&g, &dm, w.u, w.y, w.z));
        assert_eq!(w.delta, w.avoid_xz.min(w.avoid_yz));
    }
}
