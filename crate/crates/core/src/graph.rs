//! Undirected simple graphs on dense labels `0..n`, plus the path, cycle and
//! vertex-set objects every other module produces.
//!
//! Throughout the crate the *order* of a path or cycle is its vertex count,
//! not its edge count.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
}

/// Undirected simple graph with adjacency bitsets.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
    degrees: Vec<usize>,
    edge_count: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: (0..n).map(|_| FixedBitSet::with_capacity(n)).collect(),
            degrees: vec![0; n],
            edge_count: 0,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_unchecked(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 0..n {
            let j = (i + 1) % n;
            if i != j && !g.has_edge(i, j) {
                g.insert_unchecked(i, j);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 1..n {
            g.insert_unchecked(i - 1, i);
        }
        g
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).expect("petersen edges are simple")
    }

    /// Adds an edge, rejecting loops, out-of-range labels and duplicates.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.order();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.insert_unchecked(u, v);
        Ok(())
    }

    /// Adds the edge unless it is already present; returns whether it was new.
    pub fn ensure_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v && u < self.order() && v < self.order());
        if self.has_edge(u, v) {
            return false;
        }
        self.insert_unchecked(u, v);
        true
    }

    fn insert_unchecked(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.degrees[u] += 1;
        self.degrees[v] += 1;
        self.edge_count += 1;
    }

    /// Adds a new isolated vertex and returns its label.
    pub fn add_vertex(&mut self) -> usize {
        let n = self.order() + 1;
        for row in &mut self.adj {
            row.grow(n);
        }
        self.adj.push(FixedBitSet::with_capacity(n));
        self.degrees.push(0);
        n - 1
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub fn neighbor_bits(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn min_degree(&self) -> usize {
        self.degrees.iter().copied().min().unwrap_or(0)
    }

    /// Edges as ascending pairs `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.order() {
            for v in self.adj[u].ones().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.edge_count == n * n.saturating_sub(1) / 2
    }

    /// Number of neighbors of `v` inside `set`.
    pub fn degree_into(&self, v: usize, set: &FixedBitSet) -> usize {
        self.adj[v].intersection(set).count()
    }

    /// Induced subgraph on `vertices` (in the given order; local label `i`
    /// is host vertex `vertices[i]`).
    pub fn induced(&self, vertices: &[usize]) -> Subgraph {
        let mut local = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut g = Graph::new(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for w in self.neighbors(v) {
                let j = local[w];
                if j != usize::MAX && j > i {
                    g.insert_unchecked(i, j);
                }
            }
        }
        Subgraph {
            graph: g,
            labels: vertices.to_vec(),
        }
    }

    /// Graph with the listed vertices deleted; remaining vertices keep their
    /// relative order.
    pub fn without(&self, removed: &[usize]) -> Subgraph {
        let mut gone = FixedBitSet::with_capacity(self.order());
        for &v in removed {
            gone.insert(v);
        }
        let keep: Vec<usize> = (0..self.order()).filter(|v| !gone.contains(*v)).collect();
        self.induced(&keep)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.components().len() == 1
    }

    /// 2-connected in the strict sense: at least three vertices, connected,
    /// and no cutvertex.
    pub fn is_two_connected(&self) -> bool {
        if self.order() < 3 || !self.is_connected() {
            return false;
        }
        (0..self.order()).all(|v| self.without(&[v]).graph.is_connected())
    }

    /// A shortest `u`–`v` path restricted to the vertices in `allowed`
    /// (endpoints must be allowed), by BFS with smallest-label tie-breaking.
    pub fn shortest_path_within(&self, u: usize, v: usize, allowed: &FixedBitSet) -> Option<Path> {
        if !allowed.contains(u) || !allowed.contains(v) {
            return None;
        }
        let n = self.order();
        let mut parent = vec![usize::MAX; n];
        parent[u] = u;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            if x == v {
                break;
            }
            for y in self.neighbors(x) {
                if allowed.contains(y) && parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if parent[v] == usize::MAX {
            return None;
        }
        let mut seq = vec![v];
        let mut x = v;
        while x != u {
            x = parent[x];
            seq.push(x);
        }
        seq.reverse();
        Some(Path::new(seq))
    }

    pub fn shortest_path(&self, u: usize, v: usize) -> Option<Path> {
        self.shortest_path_within(u, v, &full_set(self.order()))
    }

    /// Disjoint union of two graphs; `other` is relabelled after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.order();
        let mut g = Graph::new(off + other.order());
        for (u, v) in self.edges() {
            g.insert_unchecked(u, v);
        }
        for (u, v) in other.edges() {
            g.insert_unchecked(u + off, v + off);
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    g.insert_unchecked(u, v);
                }
            }
        }
        g
    }
}

/// A bitset over `0..n` with every bit set.
pub fn full_set(n: usize) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(n);
    s.insert_range(..);
    s
}

pub fn bitset_of(n: usize, members: impl IntoIterator<Item = usize>) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(n);
    for v in members {
        s.insert(v);
    }
    s
}

/// An induced subgraph together with the host labels of its vertices.
#[derive(Debug, Clone)]
pub struct Subgraph {
    pub graph: Graph,
    /// `labels[local] = host`.
    pub labels: Vec<usize>,
}

impl Subgraph {
    pub fn to_host(&self, local: usize) -> usize {
        self.labels[local]
    }

    pub fn to_local(&self, host: usize) -> Option<usize> {
        self.labels.iter().position(|&h| h == host)
    }

    pub fn path_to_host(&self, p: &Path) -> Path {
        Path::new(p.vertices().iter().map(|&v| self.labels[v]).collect())
    }

    pub fn cycle_to_host(&self, c: &Cycle) -> Cycle {
        Cycle::new(c.vertices().iter().map(|&v| self.labels[v]).collect())
    }

    pub fn set_to_host(&self, s: &VertexSet) -> VertexSet {
        s.iter().map(|v| self.labels[v]).collect()
    }
}

/// Ordered sequence of distinct vertices; validity against a host graph is
/// checked by [`crate::verify`], not on construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Path(Vec<usize>);

impl Path {
    pub fn new(vertices: Vec<usize>) -> Self {
        Path(vertices)
    }

    pub fn single(v: usize) -> Self {
        Path(vec![v])
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.0
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn last(&self) -> usize {
        *self.0.last().expect("paths are nonempty")
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.first(), self.last())
    }

    pub fn reversed(&self) -> Path {
        let mut v = self.0.clone();
        v.reverse();
        Path(v)
    }

    /// Joins `self` and `other` where `self.last() == other.first()`.
    pub fn concat_shared(&self, other: &Path) -> Path {
        assert_eq!(self.last(), other.first(), "paths must share the joint vertex");
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0[1..]);
        Path(v)
    }

    /// Joins `self` and `other` through the edge `self.last()`–`other.first()`.
    pub fn concat_edge(&self, other: &Path) -> Path {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Path(v)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.0.iter().copied().collect()
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Cyclically ordered sequence of distinct vertices; the closing edge
/// `last`–`first` is implicit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cycle(Vec<usize>);

impl Cycle {
    pub fn new(vertices: Vec<usize>) -> Self {
        Cycle(vertices)
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.0.iter().copied().collect()
    }
}

/// Set of vertex labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(BTreeSet<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(BTreeSet::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn insert(&mut self, v: usize) -> bool {
        self.0.insert(v)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.0.iter().copied().collect()
    }

    pub fn min(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.union(&other.0).copied().collect())
    }

    pub fn to_bits(&self, n: usize) -> FixedBitSet {
        bitset_of(n, self.iter())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VertexSet(iter.into_iter().collect())
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}
