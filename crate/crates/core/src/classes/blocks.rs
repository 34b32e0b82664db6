use std::collections::BTreeSet;

use crate::graph::{Graph, VertexId};

/// Biconnected components (blocks), each as a sorted vertex list. Isolated
/// vertices form singleton blocks. Blocks are returned sorted.
pub fn blocks(g: &Graph) -> Vec<Vec<VertexId>> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut edge_stack: Vec<(VertexId, VertexId)> = Vec::new();
    let mut out: Vec<Vec<VertexId>> = Vec::new();

    for root in g.vertices() {
        if disc[root] != usize::MAX {
            continue;
        }
        if g.degree(root) == 0 {
            disc[root] = time;
            time += 1;
            out.push(vec![root]);
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent, next neighbor index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (v, parent, ref mut next)) = stack.last_mut() {
            if let Some(&w) = g.neighbors(v).get(*next) {
                *next += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            stack.pop();
            if parent == usize::MAX {
                continue;
            }
            low[parent] = low[parent].min(low[v]);
            if low[v] >= disc[parent] {
                let mut members = BTreeSet::new();
                while let Some((a, b)) = edge_stack.pop() {
                    members.insert(a);
                    members.insert(b);
                    if (a, b) == (parent, v) {
                        break;
                    }
                }
                out.push(members.into_iter().collect());
            }
        }
    }
    out.sort();
    out
}

/// True iff every block induces a clique.
pub fn is_block_graph(g: &Graph) -> bool {
    blocks(g)
        .iter()
        .all(|b| b.iter().enumerate().all(|(i, &u)| b[i + 1..].iter().all(|&v| g.has_edge(u, v))))
}
