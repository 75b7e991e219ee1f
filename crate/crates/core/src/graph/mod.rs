//! Coxeter graphs, their derived subgraphs and the standard diagram catalog.
//!
//! A [`CoxeterGraph`] stores an ordered vertex set and only the pairs whose
//! label differs from 2. The vertex order doubles as the total order on the
//! generating set: every "s < t" condition elsewhere in the crate refers to
//! positions in [`CoxeterGraph::vertices`].

mod catalog;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::GraphError;

pub use catalog::{catalog_names, from_catalog, CatalogType};

/// Entry `m(s, t)` of a Coxeter matrix.
///
/// Stored labels are always `Finite(m)` with `m >= 2` or `Infinity`.
/// `Finite(1)` only ever appears as the diagonal value returned by
/// [`CoxeterGraph::label_of`] when `s = t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoxeterLabel {
    Finite(u32),
    Infinity,
}

impl CoxeterLabel {
    /// Validated constructor for an off-diagonal label.
    pub fn finite(m: u32) -> Result<Self, GraphError> {
        if m < 2 {
            Err(GraphError::BadLabel(m))
        } else {
            Ok(CoxeterLabel::Finite(m))
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, CoxeterLabel::Finite(_))
    }

    /// Finite and odd. Infinity is never odd.
    pub fn is_odd(self) -> bool {
        matches!(self, CoxeterLabel::Finite(m) if m % 2 == 1)
    }

    /// Finite, even and at least 4.
    pub fn is_even_ge4(self) -> bool {
        matches!(self, CoxeterLabel::Finite(m) if m >= 4 && m % 2 == 0)
    }

    /// An edge of the Coxeter graph: `m >= 3` or infinite.
    pub fn is_edge(self) -> bool {
        match self {
            CoxeterLabel::Finite(m) => m >= 3,
            CoxeterLabel::Infinity => true,
        }
    }

    pub fn value(self) -> Option<u32> {
        match self {
            CoxeterLabel::Finite(m) => Some(m),
            CoxeterLabel::Infinity => None,
        }
    }
}

impl fmt::Display for CoxeterLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterLabel::Finite(m) => write!(f, "{m}"),
            CoxeterLabel::Infinity => f.write_str("inf"),
        }
    }
}

/// Unordered pair of vertex indices, normalized so that `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexPair {
    lo: usize,
    hi: usize,
}

impl VertexPair {
    /// Panics if `a == b`.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "a vertex pair needs two distinct vertices");
        if a < b {
            VertexPair { lo: a, hi: b }
        } else {
            VertexPair { lo: b, hi: a }
        }
    }

    pub fn lo(self) -> usize {
        self.lo
    }

    pub fn hi(self) -> usize {
        self.hi
    }

    pub fn contains(self, v: usize) -> bool {
        self.lo == v || self.hi == v
    }

    /// The vertex of the pair other than `v`, if `v` belongs to it.
    pub fn other(self, v: usize) -> Option<usize> {
        if v == self.lo {
            Some(self.hi)
        } else if v == self.hi {
            Some(self.lo)
        } else {
            None
        }
    }
}

/// A Coxeter graph in canonical sparse form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterGraph {
    vertices: Vec<String>,
    index: HashMap<String, usize>,
    labels: BTreeMap<VertexPair, CoxeterLabel>,
}

impl Default for CoxeterGraph {
    fn default() -> Self {
        Self::empty()
    }
}

impl CoxeterGraph {
    pub fn empty() -> Self {
        CoxeterGraph {
            vertices: Vec::new(),
            index: HashMap::new(),
            labels: BTreeMap::new(),
        }
    }

    /// Builds a graph from named vertices and labeled edges.
    ///
    /// Edges labeled 2 are accepted and dropped into the implicit default.
    /// Listing a pair twice is fine as long as both listings agree.
    pub fn build<V, E, S1, S2>(vertices: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        E: IntoIterator<Item = (S1, S2, CoxeterLabel)>,
        S1: AsRef<str>,
        S2: AsRef<str>,
    {
        let mut g = CoxeterGraph::empty();
        for name in vertices {
            g.push_vertex(name.into())?;
        }
        let mut seen: BTreeMap<VertexPair, CoxeterLabel> = BTreeMap::new();
        for (u, v, label) in edges {
            g.insert_edge(&mut seen, u.as_ref(), v.as_ref(), label)?;
        }
        Ok(g)
    }

    pub(crate) fn push_vertex(&mut self, name: String) -> Result<usize, GraphError> {
        if self.index.contains_key(&name) {
            return Err(GraphError::DuplicateVertex(name));
        }
        let i = self.vertices.len();
        self.index.insert(name.clone(), i);
        self.vertices.push(name);
        Ok(i)
    }

    /// Inserts one edge, tracking every listed label (2 included) in `seen`
    /// so that conflicting re-listings are caught.
    pub(crate) fn insert_edge(
        &mut self,
        seen: &mut BTreeMap<VertexPair, CoxeterLabel>,
        u: &str,
        v: &str,
        label: CoxeterLabel,
    ) -> Result<(), GraphError> {
        let i = self.index_of(u)?;
        let j = self.index_of(v)?;
        if i == j {
            return Err(GraphError::SelfLoop(u.to_string()));
        }
        if let CoxeterLabel::Finite(m) = label {
            CoxeterLabel::finite(m)?;
        }
        let pair = VertexPair::new(i, j);
        if let Some(&prev) = seen.get(&pair) {
            if prev != label {
                return Err(GraphError::ConflictingLabel {
                    u: self.vertices[pair.lo].clone(),
                    v: self.vertices[pair.hi].clone(),
                    first: prev.to_string(),
                    second: label.to_string(),
                });
            }
            return Ok(());
        }
        seen.insert(pair, label);
        if label != CoxeterLabel::Finite(2) {
            self.labels.insert(pair, label);
        }
        Ok(())
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.vertices[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize, GraphError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| GraphError::UnknownVertex(name.to_string()))
    }

    /// `m(s, t)` by name; `Finite(1)` on the diagonal.
    pub fn label_of(&self, s: &str, t: &str) -> Result<CoxeterLabel, GraphError> {
        let i = self.index_of(s)?;
        let j = self.index_of(t)?;
        Ok(self.label(i, j))
    }

    /// `m(s, t)` by vertex index; `Finite(1)` on the diagonal.
    pub fn label(&self, i: usize, j: usize) -> CoxeterLabel {
        if i == j {
            return CoxeterLabel::Finite(1);
        }
        self.labels
            .get(&VertexPair::new(i, j))
            .copied()
            .unwrap_or(CoxeterLabel::Finite(2))
    }

    /// Stored (label != 2) pairs in lexicographic pair order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexPair, CoxeterLabel)> + '_ {
        self.labels.iter().map(|(&p, &l)| (p, l))
    }

    pub fn edge_count(&self) -> usize {
        self.labels.len()
    }

    /// Dense `n x n` label table, for loops that probe many pairs.
    pub fn label_table(&self) -> Vec<Vec<CoxeterLabel>> {
        let n = self.vertex_count();
        let mut table = vec![vec![CoxeterLabel::Finite(2); n]; n];
        for (i, row) in table.iter_mut().enumerate() {
            row[i] = CoxeterLabel::Finite(1);
        }
        for (p, l) in self.edges() {
            table[p.lo][p.hi] = l;
            table[p.hi][p.lo] = l;
        }
        table
    }

    /// Full subgraph spanned by `subset`, keeping the vertex order of `self`.
    pub fn full_subgraph<I, S>(&self, subset: I) -> Result<CoxeterGraph, GraphError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut keep = vec![false; self.vertex_count()];
        for name in subset {
            keep[self.index_of(name.as_ref())?] = true;
        }
        let mut g = CoxeterGraph::empty();
        let mut remap = vec![usize::MAX; self.vertex_count()];
        for (i, name) in self.vertices.iter().enumerate() {
            if keep[i] {
                remap[i] = g.push_vertex(name.clone())?;
            }
        }
        for (p, l) in self.edges() {
            if keep[p.lo] && keep[p.hi] {
                g.labels
                    .insert(VertexPair::new(remap[p.lo], remap[p.hi]), l);
            }
        }
        Ok(g)
    }

    /// The odd subgraph: same vertices, edges with finite odd label.
    pub fn odd_subgraph(&self) -> PlainGraph {
        PlainGraph {
            vertices: self.vertices.clone(),
            edges: self
                .edges()
                .filter(|(_, l)| l.is_odd())
                .map(|(p, _)| p)
                .collect(),
        }
    }

    /// The underlying unlabeled graph (every stored pair, including
    /// even and infinite labels).
    pub fn underlying_graph(&self) -> PlainGraph {
        PlainGraph {
            vertices: self.vertices.clone(),
            edges: self.edges().map(|(p, _)| p).collect(),
        }
    }

    /// Appends a fresh vertex joined to the current last vertex by a 3-edge.
    pub fn extend_family(&self) -> Result<CoxeterGraph, GraphError> {
        let last = self
            .vertex_count()
            .checked_sub(1)
            .ok_or(GraphError::EmptyGraph)?;
        let mut g = self.clone();
        let mut k = self.vertex_count() + 1;
        let fresh = loop {
            let candidate = format!("s{k}");
            if !g.index.contains_key(&candidate) {
                break candidate;
            }
            k += 1;
        };
        let new = g.push_vertex(fresh)?;
        g.labels
            .insert(VertexPair::new(last, new), CoxeterLabel::Finite(3));
        Ok(g)
    }

    /// Same graph with vertices reordered: new vertex `k` is old vertex
    /// `order[k]`. `order` must be a permutation of `0..n`.
    pub fn permuted(&self, order: &[usize]) -> CoxeterGraph {
        assert_eq!(order.len(), self.vertex_count());
        let mut position = vec![usize::MAX; order.len()];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }
        let mut g = CoxeterGraph::empty();
        for &old in order {
            g.push_vertex(self.vertices[old].clone())
                .expect("permutation repeats a vertex");
        }
        for (p, l) in self.edges() {
            g.labels
                .insert(VertexPair::new(position[p.lo], position[p.hi]), l);
        }
        g
    }
}

/// Plain graph with oriented edges `lo -> hi`, so `∂⟨s,t⟩ = t - s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlainGraph {
    vertices: Vec<String>,
    edges: Vec<VertexPair>,
}

impl PlainGraph {
    /// Builds a plain graph on `vertex_count` anonymous vertices `v0, v1, ...`.
    /// Edges are deduplicated; self-loops are rejected.
    pub fn from_edges(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let vertices: Vec<String> = (0..vertex_count).map(|i| format!("v{i}")).collect();
        let mut out: Vec<VertexPair> = Vec::new();
        for (a, b) in edges {
            if a >= vertex_count {
                return Err(GraphError::UnknownVertex(format!("v{a}")));
            }
            if b >= vertex_count {
                return Err(GraphError::UnknownVertex(format!("v{b}")));
            }
            if a == b {
                return Err(GraphError::SelfLoop(format!("v{a}")));
            }
            let p = VertexPair::new(a, b);
            if !out.contains(&p) {
                out.push(p);
            }
        }
        Ok(PlainGraph {
            vertices,
            edges: out,
        })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> &[VertexPair] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Neighbor lists sorted in vertex order, each entry `(neighbor, edge index)`.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for (e, p) in self.edges.iter().enumerate() {
            adj[p.lo].push((p.hi, e));
            adj[p.hi].push((p.lo, e));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Number of connected components (isolated vertices count).
    pub fn component_count(&self) -> usize {
        let mut uf = petgraph::unionfind::UnionFind::<usize>::new(self.vertex_count());
        let mut components = self.vertex_count();
        for p in &self.edges {
            if uf.union(p.lo, p.hi) {
                components -= 1;
            }
        }
        components
    }

    /// First Betti number `E - V + C`.
    pub fn cycle_rank(&self) -> usize {
        self.edge_count() + self.component_count() - self.vertex_count()
    }

    pub fn is_acyclic(&self) -> bool {
        self.cycle_rank() == 0
    }
}
