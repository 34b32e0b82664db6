use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, VertexId};

fn numbered(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Graph> {
    Graph::from_edges(n, edges)
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::input(msg))
    }
}

pub fn path(n: usize) -> Result<Graph> {
    require(n >= 1, "path needs at least 1 vertex")?;
    numbered(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())
}

pub fn cycle(n: usize) -> Result<Graph> {
    require(n >= 3, "cycle needs at least 3 vertices")?;
    numbered(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
}

pub fn clique(n: usize) -> Result<Graph> {
    require(n >= 1, "clique needs at least 1 vertex")?;
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    numbered(n, &edges)
}

/// Star on `n` vertices in total, centered at vertex 0.
pub fn star(n: usize) -> Result<Graph> {
    require(n >= 1, "star needs at least 1 vertex")?;
    numbered(n, &(1..n).map(|i| (0, i)).collect::<Vec<_>>())
}

/// `rows × cols` grid; vertex `r * cols + c` sits in row `r`, column `c`.
pub fn grid(rows: usize, cols: usize) -> Result<Graph> {
    require(rows >= 1 && cols >= 1, "grid sides must be at least 1")?;
    let id = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    numbered(rows * cols, &edges)
}

/// K_4 minus the edge 0–3.
pub fn diamond() -> Graph {
    numbered(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).expect("static pattern")
}

/// 6-cycle on labels `1..6` with the chord 1–4.
pub fn domino() -> Graph {
    let labels = (1..=6).map(|i| i.to_string()).collect();
    Graph::from_labeled_edges(labels, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).expect("static pattern")
}

/// The building with one square.
pub fn house() -> Graph {
    building(1)
}

/// Triangle `w a0 b0` followed by `k` squares `a_{i-1} a_i b_i b_{i-1}`.
/// Vertex ids run `w, a0, b0, a1, b1, ...`, so `a_i = 2i + 1` and `b_i = 2i + 2`.
pub fn building(k: usize) -> Graph {
    let mut labels = vec!["w".to_string()];
    for i in 0..=k {
        labels.push(format!("a{i}"));
        labels.push(format!("b{i}"));
    }
    let a = |i: usize| 2 * i + 1;
    let b = |i: usize| 2 * i + 2;
    let mut edges = vec![(0, a(0)), (0, b(0)), (a(0), b(0))];
    for i in 1..=k {
        edges.extend([(a(i - 1), a(i)), (b(i - 1), b(i)), (a(i), b(i))]);
    }
    Graph::from_labeled_edges(labels, &edges).expect("building labels are unique")
}

/// An induced cycle of length `n ≥ 5`.
pub fn hole(n: usize) -> Result<Graph> {
    require(n >= 5, "hole needs at least 5 vertices")?;
    cycle(n)
}

/// Half of a rectilinear grid with two diagonal boundaries. Vertex `(i,j)`
/// (label `"i,j"`) exists for `0 ≤ j ≤ k`, `j ≤ i ≤ 2k − j`. Ids run row by
/// row from the bottom, so the corners `(0,0)` and `(2k,0)` are ids `0` and
/// `2k`, and the apex `(k,k)` is the last id.
pub fn half_grid(k: usize) -> Result<Graph> {
    require(k >= 1, "half grid needs k at least 1")?;
    let mut builder = GraphBuilder::new();
    let exists = |i: usize, j: usize| j <= k && j <= i && i <= 2 * k - j;
    let mut ids = std::collections::HashMap::new();
    for j in 0..=k {
        for i in j..=2 * k - j {
            ids.insert((i, j), builder.vertex(&format!("{i},{j}"))?);
        }
    }
    for j in 0..=k {
        for i in j..=2 * k - j {
            let here = ids[&(i, j)];
            if exists(i + 1, j) {
                builder.edge(here, ids[&(i + 1, j)])?;
            }
            if exists(i, j + 1) {
                builder.edge(here, ids[&(i, j + 1)])?;
            }
        }
        if j < k {
            builder.edge(ids[&(j, j)], ids[&(j + 1, j + 1)])?;
            builder.edge(ids[&(2 * k - j, j)], ids[&(2 * k - j - 1, j + 1)])?;
        }
    }
    Ok(builder.build())
}

/// Disjoint union of `a` and `b` with each pair `(va, vb)` of `identify`
/// merged into the vertex `va`. Labels of `a` are kept; labels of `b` get a
/// `'` suffix until they are unique.
pub fn glue(a: &Graph, b: &Graph, identify: &[(VertexId, VertexId)]) -> Result<Graph> {
    let mut builder = GraphBuilder::new();
    for label in a.labels() {
        builder.vertex(label)?;
    }
    let mut map = vec![usize::MAX; b.n()];
    for &(va, vb) in identify {
        if va >= a.n() || vb >= b.n() {
            return Err(Error::input("identified vertex out of range"));
        }
        if map[vb] != usize::MAX {
            return Err(Error::input("vertex identified twice"));
        }
        map[vb] = va;
    }
    for vb in b.vertices() {
        if map[vb] == usize::MAX {
            let mut label = b.label(vb).to_string();
            while builder.id_of(&label).is_some() {
                label.push('\'');
            }
            map[vb] = builder.vertex(&label)?;
        }
    }
    for (u, v) in a.edges() {
        builder.edge(u, v)?;
    }
    for (u, v) in b.edges() {
        if map[u] != map[v] {
            builder.edge(map[u], map[v])?;
        }
    }
    Ok(builder.build())
}

/// Largest vertex count accepted by [`connected_labeled_graphs`].
pub const MAX_ENUMERATION_N: usize = 7;

/// Every connected graph on the labeled vertex set `0..n`, in increasing
/// order of the edge bitmask over pairs `(u, v)`, `u < v`, taken
/// lexicographically.
pub fn connected_labeled_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_ENUMERATION_N {
        return Err(Error::SizeLimit {
            what: "vertex count for exhaustive enumeration",
            actual: n,
            limit: MAX_ENUMERATION_N,
        });
    }
    require(n >= 1, "enumeration needs at least 1 vertex")?;
    let pairs: Vec<(VertexId, VertexId)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges: Vec<_> = (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
        let g = numbered(n, &edges)?;
        if g.is_connected() {
            out.push(g);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::DistanceMatrix;

    #[test]
    fn basic_sizes() {
        let g = cycle(4).unwrap();
        assert_eq!((g.n(), g.m()), (4, 4));
        assert_eq!(clique(5).unwrap().m(), 10);
        let g = grid(2, 3).unwrap();
        assert_eq!((g.n(), g.m()), (6, 7));
        assert_eq!(star(5).unwrap().degree(0), 4);
        assert_eq!(path(1).unwrap().m(), 0);
        assert!(cycle(2).is_err());
        assert!(hole(4).is_err());
    }

    #[test]
    fn patterns() {
        let g = building(0);
        assert_eq!((g.n(), g.m()), (3, 3));
        let g = house();
        assert_eq!((g.n(), g.m()), (5, 6));
        let g = building(2);
        assert_eq!((g.n(), g.m()), (7, 9));
        assert_eq!(g.label(5), "a2");
        let g = domino();
        assert_eq!((g.n(), g.m()), (6, 7));
        assert!(g.has_edge(g.id_of("1").unwrap(), g.id_of("4").unwrap()));
        assert_eq!(diamond().m(), 5);
    }

    #[test]
    fn half_grid_shape() {
        let g = half_grid(1).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 5);
        let g = half_grid(4).unwrap();
        assert_eq!(g.n(), 25);
        let dm = DistanceMatrix::new(&g).unwrap();
        let (x, y, z) = (g.id_of("0,0").unwrap(), g.id_of("8,0").unwrap(), g.id_of("4,4").unwrap());
        assert_eq!((x, y, z), (0, 8, 24));
        assert_eq!(dm.get(x, y), 8);
        assert_eq!(dm.get(x, z), 4);
        assert_eq!(dm.get(y, z), 4);
        assert_eq!(dm.diameter(), 8);
    }

    #[test]
    fn connected_graph_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| connected_labeled_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 4, 38, 728]);
        assert!(connected_labeled_graphs(8).unwrap_err().is_size_limit());
    }

    #[test]
    fn glue_along_an_edge() {
        let g = glue(&clique(3).unwrap(), &cycle(4).unwrap(), &[(0, 0), (1, 1)]).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.m(), 3 + 3);
        assert!(glue(&clique(3).unwrap(), &cycle(4).unwrap(), &[(0, 0), (1, 0)]).is_err());
    }
}
