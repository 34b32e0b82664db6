use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Default vertex cap for the exhaustive induced-cycle search.
pub const DEFAULT_CHORDALITY_MAX_N: usize = 20;

/// Lexicographic breadth-first search order, by partition refinement.
pub fn lex_bfs(g: &Graph) -> Vec<VertexId> {
    let mut classes: Vec<Vec<VertexId>> = vec![g.vertices().collect()];
    let mut order = Vec::with_capacity(g.n());
    let mut is_neighbor = vec![false; g.n()];
    while let Some(first) = classes.first_mut() {
        let v = first.remove(0);
        if first.is_empty() {
            classes.remove(0);
        }
        order.push(v);
        for &w in g.neighbors(v) {
            is_neighbor[w] = true;
        }
        let mut refined = Vec::with_capacity(classes.len() + 1);
        for class in classes.drain(..) {
            let (near, far): (Vec<_>, Vec<_>) = class.into_iter().partition(|&w| is_neighbor[w]);
            if !near.is_empty() {
                refined.push(near);
            }
            if !far.is_empty() {
                refined.push(far);
            }
        }
        classes = refined;
        for &w in g.neighbors(v) {
            is_neighbor[w] = false;
        }
    }
    order
}

/// Chordality test: the reverse LexBFS order must be a perfect elimination
/// ordering.
pub fn is_chordal(g: &Graph) -> bool {
    let order = lex_bfs(g);
    let mut position = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    order.iter().all(|&v| {
        let earlier: Vec<VertexId> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| position[w] < position[v])
            .collect();
        let Some(&parent) = earlier.iter().max_by_key(|&&w| position[w]) else {
            return true;
        };
        earlier.iter().all(|&w| w == parent || g.has_edge(w, parent))
    })
}

/// Length of the longest induced cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Chordality {
    /// 2 for acyclic graphs.
    pub value: u32,
    /// Set when the search stopped at the cap; the true value is at least `value`.
    pub at_least: bool,
}

/// Exhaustive induced-cycle search. Without a cap the graph must have at
/// most `max_n` vertices; with a cap the search stops as soon as an induced
/// cycle of length `cap` or more is found.
pub fn chordality(g: &Graph, max_n: usize, cap: Option<u32>) -> Result<Chordality> {
    if cap.is_none() && g.n() > max_n {
        return Err(Error::SizeLimit {
            what: "vertex count for induced-cycle search",
            actual: g.n(),
            limit: max_n,
        });
    }
    let mut search = CycleSearch {
        g,
        cap,
        best: 2,
        blocked: vec![0; g.n()],
        path: Vec::with_capacity(g.n()),
    };
    for s in g.vertices() {
        search.path.clear();
        search.path.push(s);
        for &p1 in g.neighbors(s) {
            if p1 > s {
                search.path.push(p1);
                search.extend();
                search.path.pop();
            }
            if search.done() {
                break;
            }
        }
        if search.done() {
            break;
        }
    }
    let at_least = search.done();
    Ok(Chordality {
        value: search.best,
        at_least,
    })
}

struct CycleSearch<'a> {
    g: &'a Graph,
    cap: Option<u32>,
    best: u32,
    /// Number of interior path vertices (excluding the start and the tip)
    /// whose closed neighborhood contains each vertex.
    blocked: Vec<u32>,
    path: Vec<VertexId>,
}

impl CycleSearch<'_> {
    fn done(&self) -> bool {
        self.cap.is_some_and(|c| self.best >= c)
    }

    /// Extends an induced path starting at its smallest vertex `path[0]`.
    fn extend(&mut self) {
        let g = self.g;
        let start = self.path[0];
        let tip = *self.path.last().expect("path has a tip");
        for &v in g.neighbors(tip) {
            if v <= start || self.blocked[v] > 0 || self.path.contains(&v) {
                continue;
            }
            if g.has_edge(v, start) {
                self.best = self.best.max(self.path.len() as u32 + 1);
                if self.done() {
                    return;
                }
                continue;
            }
            if self.path.len() >= 2 {
                self.block(tip, 1);
            }
            self.path.push(v);
            self.extend();
            self.path.pop();
            if self.path.len() >= 2 {
                self.block(tip, -1);
            }
            if self.done() {
                return;
            }
        }
    }

    fn block(&mut self, v: VertexId, delta: i32) {
        let apply = |c: &mut u32| *c = (*c as i32 + delta) as u32;
        apply(&mut self.blocked[v]);
        for &w in self.g.neighbors(v) {
            apply(&mut self.blocked[w]);
        }
    }
}
