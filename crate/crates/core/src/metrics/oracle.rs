//! Brute-force slimness: enumerate every shortest path of every pair and
//! every geodesic triangle built from them.

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::{Graph, Path, VertexId};

use super::slimness::TripleMode;

/// Default bound on the total number of enumerated shortest paths.
pub const DEFAULT_ORACLE_PATH_LIMIT: usize = 200_000;

/// Largest distance from a vertex of one side to the union of the other two,
/// over all three sides, for an explicit geodesic triangle `(x, y, z)`.
pub fn slim_value_of_triangle(g: &Graph, dm: &DistanceMatrix, pxy: &Path, pxz: &Path, pyz: &Path) -> Result<u32> {
    let (x, y, z) = (pxy.first(), pxy.last(), pxz.last());
    if pxz.first() != x || pyz.first() != y || pyz.last() != z {
        return Err(Error::input(
            "triangle sides must run x→y, x→z and y→z with matching endpoints",
        ));
    }
    for side in [pxy, pxz, pyz] {
        if side.vertices().iter().any(|&v| v >= g.n()) {
            return Err(Error::input("triangle side leaves the graph"));
        }
        if side.len() as u32 != dm.get(side.first(), side.last()) {
            return Err(Error::input(format!(
                "side {} → {} is not a shortest path",
                g.label(side.first()),
                g.label(side.last())
            )));
        }
    }
    Ok(triangle_value(dm, pxy.vertices(), pxz.vertices(), pyz.vertices()))
}

fn side_value(dm: &DistanceMatrix, side: &[VertexId], a: &[VertexId], b: &[VertexId]) -> u32 {
    side.iter()
        .map(|&u| {
            a.iter()
                .chain(b)
                .map(|&w| dm.get(u, w))
                .min()
                .expect("triangle sides are non-empty")
        })
        .max()
        .unwrap_or(0)
}

fn triangle_value(dm: &DistanceMatrix, pxy: &[VertexId], pxz: &[VertexId], pyz: &[VertexId]) -> u32 {
    side_value(dm, pxy, pxz, pyz)
        .max(side_value(dm, pxz, pxy, pyz))
        .max(side_value(dm, pyz, pxy, pxz))
}

/// Every shortest `a`–`b` path.
pub fn shortest_paths(g: &Graph, dm: &DistanceMatrix, a: VertexId, b: VertexId) -> Vec<Vec<VertexId>> {
    let mut out = Vec::new();
    let mut current = vec![a];
    extend_paths(g, dm, b, &mut current, &mut out);
    out
}

fn extend_paths(g: &Graph, dm: &DistanceMatrix, target: VertexId, current: &mut Vec<VertexId>, out: &mut Vec<Vec<VertexId>>) {
    let last = *current.last().expect("path is never empty");
    if last == target {
        out.push(current.clone());
        return;
    }
    let remaining = dm.get(last, target);
    for &w in g.neighbors(last) {
        if dm.get(w, target) + 1 == remaining {
            current.push(w);
            extend_paths(g, dm, target, current, out);
            current.pop();
        }
    }
}

/// Slimness by full enumeration with the same triple convention as
/// [`super::slimness`]. Fails with a size-limit error once more than `limit`
/// shortest paths would be stored.
pub fn slimness_oracle(g: &Graph, dm: &DistanceMatrix, limit: usize) -> Result<u32> {
    slimness_oracle_with(g, dm, limit, TripleMode::Unrestricted)
}

pub fn slimness_oracle_with(g: &Graph, dm: &DistanceMatrix, limit: usize, mode: TripleMode) -> Result<u32> {
    g.require_connected()?;
    let n = g.n();
    let mut paths: Vec<Vec<Vec<Vec<VertexId>>>> = vec![Vec::new(); n];
    let mut total = 0usize;
    for (a, row) in paths.iter_mut().enumerate() {
        for b in 0..n {
            if b < a {
                row.push(Vec::new());
                continue;
            }
            let ps = shortest_paths(g, dm, a, b);
            total += ps.len();
            if total > limit {
                return Err(Error::SizeLimit {
                    what: "shortest-path count",
                    actual: total,
                    limit,
                });
            }
            row.push(ps);
        }
    }
    let mut best = 0;
    for x in 0..n {
        for y in x..n {
            for z in y..n {
                if mode == TripleMode::Distinct && (x == y || y == z) {
                    continue;
                }
                for pxy in &paths[x][y] {
                    for pxz in &paths[x][z] {
                        for pyz in &paths[y][z] {
                            best = best.max(triangle_value(dm, pxy, pxz, pyz));
                        }
                    }
                }
            }
        }
    }
    Ok(best)
}
