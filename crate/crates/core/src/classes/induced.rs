use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Largest pattern accepted by [`contains_induced`].
pub const MAX_PATTERN_N: usize = 12;

/// Searches for an induced copy of `pattern` in `g`. The embedding maps
/// pattern vertex ids to `g` vertex ids.
pub fn contains_induced(g: &Graph, pattern: &Graph) -> Result<(bool, Option<Vec<VertexId>>)> {
    if pattern.n() > MAX_PATTERN_N {
        return Err(Error::SizeLimit {
            what: "pattern vertex count",
            actual: pattern.n(),
            limit: MAX_PATTERN_N,
        });
    }
    if pattern.n() > g.n() || pattern.m() > g.m() {
        return Ok((false, None));
    }
    let order = search_order(pattern);
    let mut search = Matcher {
        g,
        pattern,
        order: &order,
        image: vec![usize::MAX; pattern.n()],
        used: vec![false; g.n()],
    };
    if search.place(0) {
        Ok((true, Some(search.image)))
    } else {
        Ok((false, None))
    }
}

/// Pattern vertices in breadth-first order from the highest-degree vertex of
/// each component, so most placements are constrained by a mapped neighbor.
fn search_order(p: &Graph) -> Vec<VertexId> {
    let mut seen = vec![false; p.n()];
    let mut order = Vec::with_capacity(p.n());
    while order.len() < p.n() {
        let root = p
            .vertices()
            .filter(|&v| !seen[v])
            .max_by_key(|&v| (p.degree(v), std::cmp::Reverse(v)))
            .expect("unvisited vertex remains");
        seen[root] = true;
        let mut head = order.len();
        order.push(root);
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &w in p.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    order
}

struct Matcher<'a> {
    g: &'a Graph,
    pattern: &'a Graph,
    order: &'a [VertexId],
    image: Vec<VertexId>,
    used: Vec<bool>,
}

impl Matcher<'_> {
    fn place(&mut self, depth: usize) -> bool {
        let Some(&p) = self.order.get(depth) else {
            return true;
        };
        let anchor = self.pattern.neighbors(p).iter().copied().find(|&q| self.image[q] != usize::MAX);
        let candidates: Vec<VertexId> = match anchor {
            Some(q) => self.g.neighbors(self.image[q]).to_vec(),
            None => self.g.vertices().collect(),
        };
        for c in candidates {
            if self.used[c] || self.g.degree(c) < self.pattern.degree(p) || !self.consistent(p, c) {
                continue;
            }
            self.image[p] = c;
            self.used[c] = true;
            if self.place(depth + 1) {
                return true;
            }
            self.image[p] = usize::MAX;
            self.used[c] = false;
        }
        false
    }

    fn consistent(&self, p: VertexId, c: VertexId) -> bool {
        self.pattern.vertices().all(|q| {
            let img = self.image[q];
            img == usize::MAX || self.pattern.has_edge(p, q) == self.g.has_edge(c, img)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    fn check_embedding(g: &Graph, p: &Graph, emb: &[VertexId]) {
        for a in p.vertices() {
            for b in a + 1..p.n() {
                assert_eq!(p.has_edge(a, b), g.has_edge(emb[a], emb[b]));
            }
        }
    }

    #[test]
    fn domino_contains_square() {
        let domino = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap();
        let c4 = cycle(4);
        let (found, emb) = contains_induced(&domino, &c4).unwrap();
        assert!(found);
        check_embedding(&domino, &c4, &emb.unwrap());
    }

    #[test]
    fn six_cycle_has_no_square() {
        assert_eq!(contains_induced(&cycle(6), &cycle(4)).unwrap(), (false, None));
    }

    #[test]
    fn house_contains_triangle() {
        let house = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 4), (3, 4)]).unwrap();
        let (found, emb) = contains_induced(&house, &cycle(3)).unwrap();
        assert!(found);
        check_embedding(&house, &cycle(3), &emb.unwrap());
    }

    #[test]
    fn independent_set_pattern() {
        let p = Graph::from_edges(3, &[]).unwrap();
        assert!(contains_induced(&cycle(6), &p).unwrap().0);
        assert!(!contains_induced(&cycle(5), &p).unwrap().0);
    }

    #[test]
    fn pattern_too_large() {
        let err = contains_induced(&cycle(20), &cycle(13)).unwrap_err();
        assert!(err.is_size_limit());
    }
}
