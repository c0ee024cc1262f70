//! Simple undirected graphs on dense vertex labels `0..n`, plus the
//! composition operations (disjoint union, complete sum, substitution).

use std::fmt;

use crate::bits::Bits;
use crate::error::{Error, Result};

/// A strictly ascending list of distinct vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    /// Wraps an already sorted, duplicate-free vector.
    pub fn from_sorted(v: Vec<usize>) -> Result<Self> {
        if v.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::input("vertex list is not strictly ascending"));
        }
        Ok(VertexSet(v))
    }

    pub fn range(lo: usize, hi: usize) -> Self {
        VertexSet((lo..hi).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn min(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Immutable simple undirected graph.
///
/// Edges are kept as a sorted list of `(u, v)` pairs with `u < v`; each vertex
/// also carries a sorted neighbor list and a bitset row for the exponential
/// routines.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    rows: Vec<Bits>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse; self-loops and out-of-range endpoints are errors.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!("edge ({u}, {v}) out of range for {n} vertices")));
            }
            if u == v {
                return Err(Error::input(format!("self-loop on vertex {u}")));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        list.dedup();
        Ok(Self::from_normalized(n, list))
    }

    fn from_normalized(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        let mut rows = vec![Bits::empty(n); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
            rows[u].insert(v);
            rows[v].insert(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Graph { n, edges, adj, rows }
    }

    /// Edgeless graph `I_n`.
    pub fn empty(n: usize) -> Self {
        Self::from_normalized(n, Vec::new())
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Self::from_normalized(n, edges)
    }

    pub fn path(n: usize) -> Self {
        Self::from_normalized(n, (1..n).map(|v| (v - 1, v)).collect())
    }

    pub fn cycle(n: usize) -> Self {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        if n >= 3 {
            edges.push((0, n - 1));
            edges.sort_unstable();
        }
        Self::from_normalized(n, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::range(0, self.n)
    }

    pub(crate) fn row(&self, v: usize) -> &Bits {
        &self.rows[v]
    }

    pub fn complement(&self) -> Graph {
        let edges = (0..self.n)
            .flat_map(|u| (u + 1..self.n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.has_edge(u, v))
            .collect();
        Self::from_normalized(self.n, edges)
    }

    /// Subgraph induced by `r`, relabeled `0..|r|` in ascending order of the
    /// original labels.
    pub fn induced_subgraph(&self, r: &VertexSet) -> Result<InducedSubgraph> {
        if let Some(&bad) = r.as_slice().last().filter(|&&v| v >= self.n) {
            return Err(Error::input(format!("vertex {bad} out of range for {} vertices", self.n)));
        }
        let original = r.as_slice().to_vec();
        let mut edges = Vec::new();
        for (i, &u) in original.iter().enumerate() {
            for &w in &self.adj[u] {
                if w > u {
                    if let Ok(j) = original.binary_search(&w) {
                        edges.push((i, j));
                    }
                }
            }
        }
        edges.sort_unstable();
        Ok(InducedSubgraph { graph: Self::from_normalized(original.len(), edges), original })
    }

    /// `self ∪ other`: `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + off, v + off)))
            .collect();
        Self::from_normalized(self.n + other.n, edges)
    }

    /// `self + other`: disjoint union plus every cross edge.
    pub fn complete_sum(&self, other: &Graph) -> Graph {
        let off = self.n;
        let mut edges: Vec<_> = self.edges.clone();
        for u in 0..self.n {
            edges.extend((0..other.n).map(|v| (u, v + off)));
        }
        edges.extend(other.edges.iter().map(|&(u, v)| (u + off, v + off)));
        edges.sort_unstable();
        Self::from_normalized(self.n + other.n, edges)
    }

    /// Substitutes `parts[i]` for vertex `i` of `h`. Parts are laid out
    /// consecutively in list order; the returned vertex sets are the part
    /// boundaries, each a module of the result.
    pub fn substitute(h: &Graph, parts: &[Graph]) -> Result<(Graph, Vec<VertexSet>)> {
        if parts.len() != h.n {
            return Err(Error::input(format!(
                "substitution needs {} parts, got {}",
                h.n,
                parts.len()
            )));
        }
        let mut offsets = Vec::with_capacity(parts.len());
        let mut total = 0;
        for p in parts {
            offsets.push(total);
            total += p.n;
        }
        let mut edges = Vec::new();
        for (i, p) in parts.iter().enumerate() {
            let o = offsets[i];
            edges.extend(p.edges.iter().map(|&(u, v)| (u + o, v + o)));
        }
        for &(a, b) in &h.edges {
            for x in 0..parts[a].n {
                for y in 0..parts[b].n {
                    edges.push((offsets[a] + x, offsets[b] + y));
                }
            }
        }
        edges.sort_unstable();
        let modules =
            parts.iter().zip(&offsets).map(|(p, &o)| VertexSet::range(o, o + p.n)).collect();
        Ok((Self::from_normalized(total, edges), modules))
    }

    /// Complete multipartite graph with parts of the given sizes, laid out
    /// consecutively.
    pub fn complete_multipartite(sizes: &[usize]) -> Result<(Graph, Vec<VertexSet>)> {
        if let Some(i) = sizes.iter().position(|&s| s == 0) {
            return Err(Error::input(format!("part {i} has size 0")));
        }
        let parts: Vec<Graph> = sizes.iter().map(|&s| Graph::empty(s)).collect();
        Self::substitute(&Graph::complete(sizes.len()), &parts)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges).finish()
    }
}

/// An induced subgraph together with its relabeling.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `original[i]` is the label in the parent graph of new vertex `i`.
    pub original: Vec<usize>,
}

impl InducedSubgraph {
    /// Maps a parent label to its new label, if the vertex was kept.
    pub fn new_index(&self, old: usize) -> Option<usize> {
        self.original.binary_search(&old).ok()
    }
}
