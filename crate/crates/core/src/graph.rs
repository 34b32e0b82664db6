//! Simple undirected graphs with stable external vertex labels.
//!
//! Vertices carry dense internal ids `0..n` assigned in order of first
//! appearance; every report maps ids back to the external labels.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};

/// Dense internal vertex id.
pub type VertexId = usize;

/// Largest vertex count accepted by the builder. Distances are stored as
/// `u32` and every sum of distances is evaluated in `u64`.
pub const MAX_VERTICES: usize = 1 << 16;

/// Immutable simple undirected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adjacency: Vec<Vec<VertexId>>,
    m: usize,
    index: HashMap<String, VertexId>,
}

/// Sorted set of distinct vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct VertexSubset(Vec<VertexId>);

impl VertexSubset {
    /// Builds a subset from arbitrary ids, sorting and deduplicating them.
    pub fn new(mut members: Vec<VertexId>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSubset(members)
    }

    pub fn members(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &VertexSubset) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }

    pub fn intersection(&self, other: &VertexSubset) -> VertexSubset {
        VertexSubset(self.0.iter().copied().filter(|&v| other.contains(v)).collect())
    }

    pub fn into_vec(self) -> Vec<VertexId> {
        self.0
    }
}

impl FromIterator<VertexId> for VertexSubset {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        VertexSubset::new(iter.into_iter().collect())
    }
}

/// A path given as an ordered vertex sequence (consecutive vertices adjacent,
/// no repeats). Validity is checked against a graph by [`Path::new`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Path(Vec<VertexId>);

impl Path {
    pub fn new(g: &Graph, vertices: Vec<VertexId>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::input("path must contain at least one vertex"));
        }
        if let Some(&bad) = vertices.iter().find(|&&v| v >= g.n()) {
            return Err(Error::input(format!("path vertex {bad} is out of range")));
        }
        for pair in vertices.windows(2) {
            if !g.has_edge(pair[0], pair[1]) {
                return Err(Error::input(format!(
                    "path step {} -> {} is not an edge",
                    g.label(pair[0]),
                    g.label(pair[1])
                )));
            }
        }
        let mut seen = vertices.clone();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::input("path repeats a vertex"));
        }
        Ok(Path(vertices))
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn first(&self) -> VertexId {
        self.0[0]
    }

    pub fn last(&self) -> VertexId {
        self.0[self.0.len() - 1]
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.0.len() == 1
    }
}

/// Incremental construction of a [`Graph`].
#[derive(Debug, Default)]
pub struct GraphBuilder {
    labels: Vec<String>,
    index: HashMap<String, VertexId>,
    adjacency: Vec<Vec<VertexId>>,
    edge_set: HashSet<(VertexId, VertexId)>,
    duplicates: usize,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns the id of `label`, creating the vertex on first sight.
    pub fn vertex(&mut self, label: &str) -> Result<VertexId> {
        if let Some(&id) = self.index.get(label) {
            return Ok(id);
        }
        if self.labels.len() >= MAX_VERTICES {
            return Err(Error::SizeLimit {
                what: "vertex count",
                actual: self.labels.len() + 1,
                limit: MAX_VERTICES,
            });
        }
        let id = self.labels.len();
        self.labels.push(label.to_owned());
        self.index.insert(label.to_owned(), id);
        self.adjacency.push(Vec::new());
        Ok(id)
    }

    /// Adds an edge between two existing ids. Returns `false` when the edge was
    /// already present.
    pub fn edge(&mut self, u: VertexId, v: VertexId) -> Result<bool> {
        let n = self.labels.len();
        if u >= n || v >= n {
            return Err(Error::input(format!("edge ({u}, {v}) references a missing vertex")));
        }
        if u == v {
            return Err(Error::input(format!("self-loop at vertex {:?}", self.labels[u])));
        }
        if !self.edge_set.insert((u.min(v), u.max(v))) {
            self.duplicates += 1;
            return Ok(false);
        }
        self.adjacency[u].push(v);
        self.adjacency[v].push(u);
        Ok(true)
    }

    pub fn labeled_edge(&mut self, a: &str, b: &str) -> Result<bool> {
        if a == b {
            return Err(Error::input(format!("self-loop at vertex {a:?}")));
        }
        let u = self.vertex(a)?;
        let v = self.vertex(b)?;
        self.edge(u, v)
    }

    pub fn id_of(&self, label: &str) -> Option<VertexId> {
        self.index.get(label).copied()
    }

    /// Number of duplicate edges collapsed so far.
    pub fn duplicates(&self) -> usize {
        self.duplicates
    }

    pub fn build(self) -> Graph {
        let mut adjacency = self.adjacency;
        let mut m = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            m += list.len();
        }
        Graph {
            labels: self.labels,
            adjacency,
            m: m / 2,
            index: self.index,
        }
    }
}

impl Graph {
    /// Graph on vertices labeled `"0".."n-1"` with the given edges. Duplicate
    /// edges collapse silently; self-loops are an input error.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::from_labeled_edges(labels, edges)
    }

    /// Graph with explicit labels (must be unique) and edges over their ids.
    pub fn from_labeled_edges(labels: Vec<String>, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut builder = GraphBuilder::new();
        for label in &labels {
            let before = builder.labels.len();
            builder.vertex(label)?;
            if builder.labels.len() == before {
                return Err(Error::input(format!("duplicate vertex label {label:?}")));
            }
        }
        for &(u, v) in edges {
            builder.edge(u, v)?;
        }
        Ok(builder.build())
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn id_of(&self, label: &str) -> Option<VertexId> {
        self.index.get(label).copied()
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.n()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn edge_vec(&self) -> Vec<(VertexId, VertexId)> {
        self.edges().collect()
    }

    /// Vertices reached from `start` by BFS when restricted to `allowed`.
    pub(crate) fn component_within(&self, start: VertexId, allowed: &[bool]) -> Vec<bool> {
        let mut seen = vec![false; self.n()];
        if !allowed[start] {
            return seen;
        }
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for &w in self.neighbors(v) {
                if allowed[w] && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Component index of each allowed vertex (`usize::MAX` for excluded ones).
    pub(crate) fn components_within(&self, allowed: &[bool]) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n()];
        let mut next = 0;
        for s in self.vertices() {
            if !allowed[s] || comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in self.neighbors(v) {
                    if allowed[w] && comp[w] == usize::MAX {
                        comp[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    /// First vertex (smallest id) not reachable from vertex 0, if any.
    pub fn first_unreachable(&self) -> Option<VertexId> {
        if self.n() == 0 {
            return None;
        }
        let reached = self.component_within(0, &vec![true; self.n()]);
        reached.iter().position(|&r| !r)
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.first_unreachable().is_none()
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.n() == 0 {
            return Err(Error::input("graph has no vertices"));
        }
        match self.first_unreachable() {
            Some(v) => Err(Error::Disconnected(self.label(v).to_owned())),
            None => Ok(()),
        }
    }

    /// Induced subgraph on `s`; vertex order follows `s`, labels are inherited.
    pub fn induced_subgraph(&self, s: &VertexSubset) -> Result<Graph> {
        if s.is_empty() {
            return Err(Error::input("induced subgraph of an empty vertex set"));
        }
        if let Some(bad) = s.iter().find(|&v| v >= self.n()) {
            return Err(Error::input(format!("vertex {bad} is out of range")));
        }
        let mut local = vec![usize::MAX; self.n()];
        for (i, v) in s.iter().enumerate() {
            local[v] = i;
        }
        let labels: Vec<String> = s.iter().map(|v| self.labels[v].clone()).collect();
        let adjacency: Vec<Vec<VertexId>> = s
            .iter()
            .map(|v| {
                self.neighbors(v)
                    .iter()
                    .filter(|&&w| local[w] != usize::MAX)
                    .map(|&w| local[w])
                    .collect()
            })
            .collect();
        let m = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        let index = labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        Ok(Graph {
            labels,
            adjacency,
            m,
            index,
        })
    }

    /// Replaces every edge by a path of `t` edges. Original vertices keep
    /// their ids; fresh vertices follow in edge order.
    pub fn subdivide(&self, t: usize) -> Result<Graph> {
        if t < 1 {
            return Err(Error::input("subdivision factor must be at least 1"));
        }
        let mut builder = GraphBuilder::new();
        for label in &self.labels {
            builder.vertex(label)?;
        }
        for (u, v) in self.edge_vec() {
            let mut prev = u;
            for step in 1..t {
                let mut label = format!("{}~{}.{}", self.label(u), self.label(v), step);
                while builder.index.contains_key(&label) {
                    label.push('\'');
                }
                let fresh = builder.vertex(&label)?;
                builder.edge(prev, fresh)?;
                prev = fresh;
            }
            builder.edge(prev, v)?;
        }
        Ok(builder.build())
    }

    /// Canonical edge-list text: one `label label` line per edge, sorted by
    /// `(min id, max id)`.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{} {}", self.label(u), self.label(v));
        }
        out
    }
}

/// Parses whitespace-separated edge-list text. `#` starts a comment line and
/// blank lines are skipped; duplicate edges collapse with a logged warning.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut builder = GraphBuilder::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let &[a, b] = fields.as_slice() else {
            return Err(Error::input(format!(
                "line {}: expected two labels, found {}",
                lineno + 1,
                fields.len()
            )));
        };
        if a == b {
            return Err(Error::input(format!("line {}: self-loop at {a:?}", lineno + 1)));
        }
        if !builder.labeled_edge(a, b)? {
            log::warn!("line {}: duplicate edge {a} {b} ignored", lineno + 1);
        }
    }
    if builder.labels.is_empty() {
        return Err(Error::input("edge list contains no edges"));
    }
    Ok(builder.build())
}

/// Parses DIMACS `p edge n m` text with 1-based `e i j` lines.
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut declared: Option<(usize, usize)> = None;
    let mut builder = GraphBuilder::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lineno = lineno + 1;
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.first().copied() {
            Some("p") => {
                if declared.is_some() {
                    return Err(Error::input(format!("line {lineno}: second problem line")));
                }
                let (n, m) = match fields.as_slice() {
                    [_, "edge" | "col", n, m] => (n.parse::<usize>(), m.parse::<usize>()),
                    _ => return Err(Error::input(format!("line {lineno}: malformed header {line:?}"))),
                };
                let (Ok(n), Ok(m)) = (n, m) else {
                    return Err(Error::input(format!("line {lineno}: malformed header {line:?}")));
                };
                if n == 0 {
                    return Err(Error::input("DIMACS header declares zero vertices"));
                }
                for i in 1..=n {
                    builder.vertex(&i.to_string())?;
                }
                declared = Some((n, m));
            }
            Some("e") => {
                let Some((n, _)) = declared else {
                    return Err(Error::input(format!("line {lineno}: edge before header")));
                };
                let &[_, a, b] = fields.as_slice() else {
                    return Err(Error::input(format!("line {lineno}: malformed edge {line:?}")));
                };
                let parse = |s: &str| -> Result<usize> {
                    let i = s
                        .parse::<usize>()
                        .map_err(|_| Error::input(format!("line {lineno}: bad index {s:?}")))?;
                    if i == 0 || i > n {
                        return Err(Error::input(format!(
                            "line {lineno}: index {i} outside 1..={n}"
                        )));
                    }
                    Ok(i - 1)
                };
                let (u, v) = (parse(a)?, parse(b)?);
                if u == v {
                    return Err(Error::input(format!("line {lineno}: self-loop at {a}")));
                }
                if !builder.edge(u, v)? {
                    log::warn!("line {lineno}: duplicate edge {a} {b} ignored");
                }
            }
            _ => return Err(Error::input(format!("line {lineno}: unrecognized line {line:?}"))),
        }
    }
    let Some((_, m)) = declared else {
        return Err(Error::input("missing DIMACS problem line"));
    };
    let g = builder.build();
    if g.m() != m {
        return Err(Error::input(format!(
            "header declares {m} edges but {} distinct edges were read",
            g.m()
        )));
    }
    Ok(g)
}

/// Text formats accepted for graph input.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum GraphFormat {
    #[default]
    EdgeList,
    Dimacs,
}

impl GraphFormat {
    pub fn parse(self, text: &str) -> Result<Graph> {
        match self {
            GraphFormat::EdgeList => parse_edge_list(text),
            GraphFormat::Dimacs => parse_dimacs(text),
        }
    }

    /// Reads and parses a file; I/O failures become input errors.
    pub fn read(self, path: &std::path::Path) -> Result<Graph> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::input(format!("cannot read {}: {e}", path.display())))?;
        self.parse(&text).map_err(|e| match e {
            Error::Input(msg) => Error::input(format!("{}: {msg}", path.display())),
            other => other,
        })
    }
}
