use crate::graph::{Graph, VertexId};

/// Checks for an asteroidal triple. Returns `(true, None)` for AT-free graphs,
/// otherwise the lexicographically smallest asteroidal triple.
pub fn is_at_free(g: &Graph) -> (bool, Option<[VertexId; 3]>) {
    match asteroidal_triple(g) {
        Some(t) => (false, Some(t)),
        None => (true, None),
    }
}

fn asteroidal_triple(g: &Graph) -> Option<[VertexId; 3]> {
    let n = g.n();
    // component[v][w]: component id of w in G - N[v], or usize::MAX when w ∈ N[v].
    let component: Vec<Vec<usize>> = g
        .vertices()
        .map(|v| {
            let mut allowed = vec![true; n];
            allowed[v] = false;
            for &w in g.neighbors(v) {
                allowed[w] = false;
            }
            g.components_within(&allowed)
        })
        .collect();
    let same = |v: VertexId, a: VertexId, b: VertexId| component[v][a] == component[v][b];
    for x in 0..n {
        for y in x + 1..n {
            if g.has_edge(x, y) {
                continue;
            }
            for z in y + 1..n {
                if g.has_edge(x, z) || g.has_edge(y, z) {
                    continue;
                }
                if same(x, y, z) && same(y, x, z) && same(z, x, y) {
                    return Some([x, y, z]);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn paths_and_short_cycles() {
        let p = Graph::from_edges(6, &(0..5).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap();
        assert_eq!(is_at_free(&p), (true, None));
        assert_eq!(is_at_free(&cycle(5)), (true, None));
    }

    #[test]
    fn six_cycle_witness() {
        assert_eq!(is_at_free(&cycle(6)), (false, Some([0, 2, 4])));
    }

    #[test]
    fn claw_subdivision() {
        // spider with three legs of length 2 has an asteroidal triple at its tips
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert_eq!(is_at_free(&g), (false, Some([2, 4, 6])));
    }
}
