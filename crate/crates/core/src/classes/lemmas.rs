use serde::Serialize;

use crate::distance::{is_isometric_subset, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSubset};
use crate::metrics::slimness;

/// Default vertex cap for the exhaustive hereditary slimness check.
pub const DEFAULT_HEREDITARY_MAX_N: usize = 10;
const ABSOLUTE_HEREDITARY_MAX_N: usize = 24;

/// Checks that an edge `xy` of a cycle of length at least 5 lies in a
/// triangle or a 4-cycle built from cycle vertices: some `w1` adjacent to `x`
/// and `w2` adjacent to `y`, both on the cycle and distinct from `x` and `y`,
/// with `d(w1, w2) ≤ 1`.
pub fn verify_cycle_lemma(g: &Graph, dm: &DistanceMatrix, cycle: &[VertexId], edge: (VertexId, VertexId)) -> Result<bool> {
    let len = cycle.len();
    if len < 5 {
        return Err(Error::input(format!("cycle has length {len}; at least 5 required")));
    }
    let members = VertexSubset::new(cycle.to_vec());
    if members.len() != len {
        return Err(Error::input("cycle repeats a vertex"));
    }
    if let Some(&v) = cycle.iter().find(|&&v| v >= g.n()) {
        return Err(Error::input(format!("vertex id {v} out of range")));
    }
    for i in 0..len {
        let (a, b) = (cycle[i], cycle[(i + 1) % len]);
        if !g.has_edge(a, b) {
            return Err(Error::input(format!(
                "consecutive cycle vertices {} and {} are not adjacent",
                g.label(a),
                g.label(b)
            )));
        }
    }
    let (x, y) = edge;
    let on_cycle = (0..len).any(|i| {
        let (a, b) = (cycle[i], cycle[(i + 1) % len]);
        (a, b) == (x, y) || (b, a) == (x, y)
    });
    if !on_cycle {
        return Err(Error::input("edge is not on the cycle"));
    }
    let near = |end: VertexId| -> Vec<VertexId> {
        members
            .iter()
            .filter(|&w| w != x && w != y && g.has_edge(end, w))
            .collect()
    };
    let (near_x, near_y) = (near(x), near(y));
    Ok(near_x
        .iter()
        .any(|&w1| near_y.iter().any(|&w2| dm.get(w1, w2) <= 1)))
}

/// A building: a chain of induced 4-cycles closed by a triangle at the apex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BuildingEmbedding {
    pub w: VertexId,
    /// `(a_i, b_i)` for `i = 0..=k`; `(a_0, b_0)` is adjacent to the apex.
    pub chain: Vec<(VertexId, VertexId)>,
    pub k: usize,
}

impl BuildingEmbedding {
    pub fn vertices(&self) -> VertexSubset {
        std::iter::once(self.w)
            .chain(self.chain.iter().flat_map(|&(a, b)| [a, b]))
            .collect()
    }

    /// Checks the building structure against `g`: the induced subgraph on the
    /// building's vertices has exactly the building's edges, and it is
    /// isometric in `g`.
    pub fn is_valid_in(&self, g: &Graph, dm: &DistanceMatrix) -> bool {
        let vs = self.vertices();
        if vs.len() != 2 * self.k + 3 || self.chain.len() != self.k + 1 {
            return false;
        }
        let mut expected = vec![(self.w, self.chain[0].0), (self.w, self.chain[0].1)];
        for (i, &(a, b)) in self.chain.iter().enumerate() {
            expected.push((a, b));
            if i > 0 {
                let (pa, pb) = self.chain[i - 1];
                expected.push((pa, a));
                expected.push((pb, b));
            }
        }
        let norm = |(u, v): (VertexId, VertexId)| (u.min(v), u.max(v));
        let mut expected: Vec<_> = expected.into_iter().map(norm).collect();
        expected.sort_unstable();
        let members = vs.members();
        let mut actual = Vec::new();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if g.has_edge(u, v) {
                    actual.push((u, v));
                }
            }
        }
        actual == expected && is_isometric_subset(g, dm, &vs)
    }
}

/// Descends from the equidistant edge `uv` toward `x`, closing with a common
/// neighbor one step closer to `x` when available and otherwise stepping to
/// an adjacent pair one step closer with no cross edges. Smallest ids win
/// every choice.
pub fn find_isometric_building(
    g: &Graph,
    dm: &DistanceMatrix,
    x: VertexId,
    u: VertexId,
    v: VertexId,
) -> Result<BuildingEmbedding> {
    for id in [x, u, v] {
        if id >= g.n() {
            return Err(Error::input(format!("vertex id {id} out of range")));
        }
    }
    if !g.has_edge(u, v) {
        return Err(Error::input(format!("{} and {} are not adjacent", g.label(u), g.label(v))));
    }
    if dm.get(x, u) != dm.get(x, v) {
        return Err(Error::input(format!(
            "edge {}-{} is not equidistant from {}",
            g.label(u),
            g.label(v),
            g.label(x)
        )));
    }
    let closer = |p: VertexId| -> Vec<VertexId> {
        let level = dm.get(x, p);
        g.neighbors(p)
            .iter()
            .copied()
            .filter(|&q| dm.get(x, q) + 1 == level)
            .collect()
    };
    let mut outer_to_inner = vec![(u, v)];
    let w = loop {
        let (p, q) = *outer_to_inner.last().expect("chain is non-empty");
        let (cp, cq) = (closer(p), closer(q));
        if let Some(&w) = cp.iter().find(|w| cq.contains(w)) {
            break w;
        }
        let step = cp.iter().find_map(|&a| {
            cq.iter()
                .find(|&&b| g.has_edge(a, b) && !g.has_edge(a, q) && !g.has_edge(b, p))
                .map(|&b| (a, b))
        });
        match step {
            Some(pair) => outer_to_inner.push(pair),
            None => {
                return Err(Error::Counterexample(format!(
                    "no building below edge {}-{} toward {}",
                    g.label(p),
                    g.label(q),
                    g.label(x)
                )))
            }
        }
    };
    outer_to_inner.reverse();
    let b = BuildingEmbedding {
        w,
        k: outer_to_inner.len() - 1,
        chain: outer_to_inner,
    };
    if !b.is_valid_in(g, dm) {
        return Err(Error::Counterexample(format!(
            "building below edge {}-{} toward {} is not isometric",
            g.label(u),
            g.label(v),
            g.label(x)
        )));
    }
    Ok(b)
}

/// Largest slimness over connected induced subgraphs.
pub fn hereditary_max_slimness(g: &Graph, max_n: usize) -> Result<u32> {
    let mut best = 0;
    for_each_connected_subset(g, max_n, |sub| {
        best = best.max(sub);
        true
    })?;
    Ok(best)
}

/// True iff every connected induced subgraph has slimness at most `delta`.
pub fn hereditary_slimness_at_most(g: &Graph, delta: u32, max_n: usize) -> Result<bool> {
    let mut ok = true;
    for_each_connected_subset(g, max_n, |sub| {
        ok = sub <= delta;
        ok
    })?;
    Ok(ok)
}

/// Calls `visit` with the slimness of each connected induced subgraph until
/// it returns false.
fn for_each_connected_subset(g: &Graph, max_n: usize, mut visit: impl FnMut(u32) -> bool) -> Result<()> {
    let limit = max_n.min(ABSOLUTE_HEREDITARY_MAX_N);
    if g.n() > limit {
        return Err(Error::SizeLimit {
            what: "vertex count for hereditary slimness check",
            actual: g.n(),
            limit,
        });
    }
    let n = g.n();
    let adj: Vec<usize> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0usize, |m, &w| m | 1 << w))
        .collect();
    for mask in 1usize..(1 << n) {
        if !mask_connected(&adj, mask) {
            continue;
        }
        let members: VertexSubset = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let sub = g.induced_subgraph(&members)?;
        let dm = DistanceMatrix::new(&sub)?;
        if !visit(slimness(&sub, &dm).value) {
            break;
        }
    }
    Ok(())
}

fn mask_connected(adj: &[usize], mask: usize) -> bool {
    let start = mask.trailing_zeros() as usize;
    let mut reach = 1usize << start;
    let mut frontier = reach;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[v] & mask & !reach;
        reach |= fresh;
        frontier |= fresh;
    }
    reach == mask
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

    // ids: w=0, a0=1, b0=2, a1=3, b1=4, a2=5, b2=6
    fn building2() -> (Graph, DistanceMatrix) {
        graph(7, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 4), (3, 4), (3, 5), (4, 6), (5, 6)])
    }

    #[test]
    fn cycle_lemma_on_building() {
        let (g, dm) = building2();
        let boundary = [0, 1, 3, 5, 6, 4, 2];
        assert!(verify_cycle_lemma(&g, &dm, &boundary, (5, 6)).unwrap());
        assert!(verify_cycle_lemma(&g, &dm, &boundary, (0, 1)).unwrap());
    }

    #[test]
    fn cycle_lemma_fails_on_long_hole() {
        let (g, dm) = cycle(6);
        assert!(!verify_cycle_lemma(&g, &dm, &[0, 1, 2, 3, 4, 5], (0, 1)).unwrap());
    }

    #[test]
    fn cycle_lemma_input_errors() {
        let (g, dm) = cycle(4);
        assert!(matches!(verify_cycle_lemma(&g, &dm, &[0, 1, 2, 3], (0, 1)), Err(Error::Input(_))));
        let (g, dm) = cycle(6);
        assert!(matches!(
            verify_cycle_lemma(&g, &dm, &[0, 1, 2, 3, 4, 5], (0, 2)),
            Err(Error::Input(_))
        ));
        assert!(matches!(
            verify_cycle_lemma(&g, &dm, &[0, 2, 1, 3, 4, 5], (0, 2)),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn building_search_recovers_generator() {
        let (g, dm) = building2();
        let b = find_isometric_building(&g, &dm, 0, 5, 6).unwrap();
        assert_eq!(b, BuildingEmbedding { w: 0, chain: vec![(1, 2), (3, 4), (5, 6)], k: 2 });
        assert!(is_isometric_subset(&g, &dm, &b.vertices()));
    }

    #[test]
    fn building_search_on_house_and_diamond() {
        // house: apex 0, triangle 0-1-2, square 1-2-4-3
        let (g, dm) = graph(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 4), (3, 4)]);
        let b = find_isometric_building(&g, &dm, 0, 3, 4).unwrap();
        assert_eq!(b.k, 1);
        assert_eq!(b.vertices().len(), 5);
        // diamond: 0 and 3 have degree 2
        let (g, dm) = graph(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
        let b = find_isometric_building(&g, &dm, 0, 1, 2).unwrap();
        assert_eq!(b, BuildingEmbedding { w: 0, chain: vec![(1, 2)], k: 0 });
    }

    #[test]
    fn building_search_errors() {
        let (g, dm) = cycle(6);
        assert!(matches!(find_isometric_building(&g, &dm, 0, 1, 2), Err(Error::Input(_))));
        // C_7: edge 3-4 is equidistant from 0 but no building exists below it
        let (g, dm) = cycle(7);
        assert!(matches!(find_isometric_building(&g, &dm, 0, 3, 4), Err(Error::Counterexample(_))));
    }

    #[test]
    fn hereditary_checks() {
        let (k4, _) = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(hereditary_slimness_at_most(&k4, 1, 10).unwrap());
        assert_eq!(hereditary_max_slimness(&k4, 10).unwrap(), 0);
        let (c8, _) = cycle(8);
        assert!(!hereditary_slimness_at_most(&c8, 1, 10).unwrap());
        let (house, _) = graph(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 4), (3, 4)]);
        assert!(hereditary_slimness_at_most(&house, 1, 10).unwrap());
        let (c12, _) = cycle(12);
        assert!(hereditary_max_slimness(&c12, 10).unwrap_err().is_size_limit());
    }
}
