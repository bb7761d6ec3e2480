//! Simple undirected graphs on dense vertex indices, stored as packed
//! adjacency rows so neighborhood intersections are word-parallel ANDs.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::Serialize;

use crate::bitset::{and_count, words_for, BitSet, Ones};
use crate::par;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("edge list line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Finite simple undirected graph on vertices `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    order: usize,
    stride: usize,
    rows: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Self {
        let stride = words_for(order).max(1);
        Self {
            order,
            stride,
            rows: vec![0; stride * order],
            labels: None,
        }
    }

    /// Builds a graph from an edge iterator. Duplicate edges are merged.
    pub fn from_edges(
        order: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut g = Self::empty(order);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph by evaluating `adjacent(i, j)` for every `i < j`.
    pub fn from_fn(order: usize, adjacent: impl Fn(usize, usize) -> bool) -> Self {
        let mut g = Self::empty(order);
        for i in 0..order {
            for j in i + 1..order {
                if adjacent(i, j) {
                    g.set(i, j);
                    g.set(j, i);
                }
            }
        }
        g
    }

    pub fn complete(order: usize) -> Self {
        Self::from_fn(order, |_, _| true)
    }

    pub fn cycle(order: usize) -> Self {
        Self::from_fn(order, |i, j| {
            j - i == 1 || (i == 0 && j + 1 == order && order > 2)
        })
    }

    pub fn path(order: usize) -> Self {
        Self::from_fn(order, |i, j| j - i == 1)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.order {
            return Err(GraphError::LabelCount {
                expected: self.order,
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.order {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    order: self.order,
                });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.set(u, v);
        self.set(v, u);
        Ok(())
    }

    #[inline]
    fn set(&mut self, u: usize, v: usize) {
        self.rows[u * self.stride + v / 64] |= 1 << (v % 64);
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(labels) => labels[v].clone(),
            None => v.to_string(),
        }
    }

    /// Packed adjacency row of `v`.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    pub fn neighbor_set(&self, v: usize) -> BitSet {
        BitSet::from_indices(self.order, self.neighbors(v))
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.row(u)[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> Ones<'_> {
        Ones::new(self.row(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn common_neighbor_count(&self, u: usize, v: usize) -> usize {
        and_count(self.row(u), self.row(v))
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> Vec<usize> {
        let words: Vec<u64> = self
            .row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| a & b)
            .collect();
        Ones::new(&words).collect()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Common valency if every vertex has the same degree. An empty graph
    /// (no vertices) is not considered regular.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.order == 0 {
            return None;
        }
        let k = self.degree(0);
        (1..self.order).all(|v| self.degree(v) == k).then_some(k)
    }

    pub fn complement(&self) -> Self {
        let mut g = Self::from_fn(self.order, |i, j| !self.adjacent(i, j));
        g.labels = self.labels.clone();
        g
    }

    /// Two-colouring test by BFS.
    pub fn is_bipartite(&self) -> bool {
        let mut colour = vec![u8::MAX; self.order];
        let mut queue = VecDeque::new();
        for start in 0..self.order {
            if colour[start] != u8::MAX {
                continue;
            }
            colour[start] = 0;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if colour[v] == u8::MAX {
                        colour[v] = 1 - colour[u];
                        queue.push_back(v);
                    } else if colour[v] == colour[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Returns the graph with vertex `v` renamed to `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.order, "permutation length");
        let mut g = Self::empty(self.order);
        for (u, v) in self.edges() {
            g.set(perm[u], perm[v]);
            g.set(perm[v], perm[u]);
        }
        if let Some(labels) = &self.labels {
            let mut out = vec![String::new(); self.order];
            for (v, l) in labels.iter().enumerate() {
                out[perm[v]] = l.clone();
            }
            g.labels = Some(out);
        }
        g
    }

    /// Writes the edge-list format: `p <n> <m>` followed by one `u v` per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        writeln!(out, "p {} {}", self.order, self.edge_count()).unwrap();
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }

    /// Parses the edge-list format. `#` starts a comment; blank lines are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| GraphError::Parse {
                line: line_no,
                message,
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            if header.is_none() {
                if fields.len() != 3 || fields[0] != "p" {
                    return Err(err(format!("expected header `p <n> <m>`, found `{line}`")));
                }
                let n = fields[1]
                    .parse()
                    .map_err(|e| err(format!("vertex count: {e}")))?;
                let m = fields[2]
                    .parse()
                    .map_err(|e| err(format!("edge count: {e}")))?;
                header = Some((n, m));
                continue;
            }
            if fields.len() != 2 {
                return Err(err(format!("expected `<u> <v>`, found `{line}`")));
            }
            let u: usize = fields[0].parse().map_err(|e| err(format!("{e}")))?;
            let v: usize = fields[1].parse().map_err(|e| err(format!("{e}")))?;
            edges.push((line_no, u, v));
        }
        let (n, m) = header.ok_or(GraphError::Parse {
            line: 0,
            message: "missing header".into(),
        })?;
        if edges.len() != m {
            return Err(GraphError::Parse {
                line: 0,
                message: format!("header declares {m} edges, found {}", edges.len()),
            });
        }
        let mut g = Self::empty(n);
        for (line, u, v) in edges {
            g.add_edge(u, v).map_err(|e| GraphError::Parse {
                line,
                message: e.to_string(),
            })?;
        }
        Ok(g)
    }
}

/// All-pairs shortest path lengths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    order: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub const UNREACHABLE: u32 = u32::MAX;

    pub fn order(&self) -> usize {
        self.order
    }

    /// Distance, or `None` when `y` is unreachable from `x`.
    #[inline]
    pub fn get(&self, x: usize, y: usize) -> Option<usize> {
        let d = self.dist[x * self.order + y];
        (d != Self::UNREACHABLE).then_some(d as usize)
    }

    #[inline]
    pub fn raw(&self, x: usize, y: usize) -> u32 {
        self.dist[x * self.order + y]
    }

    pub fn is_connected(&self) -> bool {
        !self.dist.contains(&Self::UNREACHABLE)
    }

    /// Largest finite distance.
    pub fn diameter(&self) -> usize {
        self.dist
            .iter()
            .filter(|&&d| d != Self::UNREACHABLE)
            .max()
            .copied()
            .unwrap_or(0) as usize
    }

    /// Vertices at distance exactly `i` from `x`.
    pub fn sphere(&self, x: usize, i: usize) -> BitSet {
        let row = &self.dist[x * self.order..(x + 1) * self.order];
        BitSet::from_indices(
            self.order,
            row.iter()
                .enumerate()
                .filter(|(_, &d)| d as usize == i && d != Self::UNREACHABLE)
                .map(|(y, _)| y),
        )
    }
}

fn bfs_row(g: &Graph, source: usize) -> Vec<u32> {
    let mut dist = vec![DistanceMatrix::UNREACHABLE; g.order()];
    let mut queue = VecDeque::with_capacity(g.order());
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let next = dist[u] + 1;
        for v in g.neighbors(u) {
            if dist[v] == DistanceMatrix::UNREACHABLE {
                dist[v] = next;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// BFS from every vertex.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let rows = par::map_range(g.order(), |x| bfs_row(g, x));
    DistanceMatrix {
        order: g.order(),
        dist: rows.concat(),
    }
}

/// An induced subgraph together with the map back to the parent's indices.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `original[i]` is the parent vertex that became vertex `i`.
    pub original: Vec<usize>,
}

/// Subgraph induced on `vertices`. Indices are sorted and deduplicated, so
/// the new numbering follows the parent's order.
pub fn induced_subgraph(g: &Graph, vertices: &[usize]) -> Result<InducedSubgraph, GraphError> {
    let mut original = vertices.to_vec();
    original.sort_unstable();
    original.dedup();
    if let Some(&bad) = original.iter().find(|&&v| v >= g.order()) {
        return Err(GraphError::VertexOutOfRange {
            vertex: bad,
            order: g.order(),
        });
    }
    let mut graph = Graph::from_fn(original.len(), |i, j| g.adjacent(original[i], original[j]));
    if let Some(labels) = g.labels() {
        graph.labels = Some(original.iter().map(|&v| labels[v].clone()).collect());
    }
    Ok(InducedSubgraph { graph, original })
}

/// Local graph: the subgraph induced on the neighbours of `x`.
pub fn local_graph(g: &Graph, x: usize) -> InducedSubgraph {
    let nbrs: Vec<usize> = g.neighbors(x).collect();
    induced_subgraph(g, &nbrs).expect("neighbours are in range")
}

/// `K_{t x n}`: `t` cocliques of size `n`, all edges between distinct parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct MultipartiteShape {
    pub t: usize,
    pub n: usize,
}

impl std::fmt::Display for MultipartiteShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "K_{{{}x{}}}", self.t, self.n)
    }
}

/// Returns `(t, n)` iff non-adjacency is an equivalence relation with `t >= 2`
/// classes all of size `n`, i.e. the complement is `t` disjoint `K_n`.
pub fn recognize_complete_multipartite(g: &Graph) -> Option<MultipartiteShape> {
    let order = g.order();
    if order == 0 {
        return None;
    }
    let mut part_of = vec![usize::MAX; order];
    let mut sizes = Vec::new();
    for v in 0..order {
        if part_of[v] != usize::MAX {
            continue;
        }
        let id = sizes.len();
        // closed non-neighbourhood of v
        let members: Vec<usize> = (0..order).filter(|&u| !g.adjacent(v, u)).collect();
        for &u in &members {
            if part_of[u] != usize::MAX {
                return None;
            }
            part_of[u] = id;
        }
        sizes.push(members.len());
    }
    // every pair inside a class must be non-adjacent
    for (u, v) in g.edges() {
        if part_of[u] == part_of[v] {
            return None;
        }
    }
    // and every cross pair adjacent
    let n = sizes[0];
    let t = sizes.len();
    if t < 2 || sizes.iter().any(|&s| s != n) {
        return None;
    }
    (g.edge_count() == t * (t - 1) / 2 * n * n).then_some(MultipartiteShape { t, n })
}
