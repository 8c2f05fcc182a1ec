//! Simple directed and undirected graphs over dense 1-indexed vertex ids,
//! degree queries and cycle validation.
//!
//! Graphs are built once through a builder and are immutable afterwards.
//! Adjacency lists are kept sorted so neighbor iteration is always in
//! increasing vertex id order, which the solvers rely on for reproducible
//! witnesses.

use std::fmt;

use thiserror::Error;

/// A vertex id in `1..=n`.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("vertex {vertex} is out of range 1..={n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("duplicate arc ({0},{1})")]
    DuplicateArc(Vertex, Vertex),
}

/// Why a vertex sequence is not a cycle. Positions are 1-based indices into
/// the sequence; a missing edge is reported at the position of its tail.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleError {
    #[error("sequence of length {len} is too short, need at least {min}")]
    TooShort { len: usize, min: usize },
    #[error("vertex {vertex} at position {position} is out of range")]
    VertexOutOfRange { position: usize, vertex: Vertex },
    #[error("vertex {vertex} repeats at position {position}")]
    RepeatedVertex { position: usize, vertex: Vertex },
    #[error("missing edge {from}->{to} at position {position}")]
    MissingEdge {
        position: usize,
        from: Vertex,
        to: Vertex,
    },
}

fn check_pair(n: usize, u: Vertex, v: Vertex) -> Result<(), GraphError> {
    for w in [u, v] {
        if w == 0 || w > n {
            return Err(GraphError::VertexOutOfRange { vertex: w, n });
        }
    }
    if u == v {
        return Err(GraphError::SelfLoop(u));
    }
    Ok(())
}

/// An undirected simple graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UGraph {
    adj: Vec<Vec<Vertex>>,
    edges: Vec<(Vertex, Vertex)>,
}

impl UGraph {
    pub fn builder(n: usize) -> UGraphBuilder {
        UGraphBuilder {
            n,
            edges: Vec::new(),
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut b = Self::builder(n);
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.n()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v - 1]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v - 1].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u >= 1 && u <= self.n() && self.adj[u - 1].binary_search(&v).is_ok()
    }

    /// Index of edge `{u, v}` in [`UGraph::edges`].
    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    /// Minimum vertex degree.
    pub fn mindeg(&self) -> Result<usize, GraphError> {
        self.adj
            .iter()
            .map(Vec::len)
            .min()
            .ok_or(GraphError::EmptyGraph)
    }

    /// The digraph with both arcs `(u,v)` and `(v,u)` for every edge.
    pub fn bidirected(&self) -> Digraph {
        let mut b = Digraph::builder(self.n());
        for &(u, v) in &self.edges {
            b.add_arc(u, v).expect("simple graph");
            b.add_arc(v, u).expect("simple graph");
        }
        b.build()
    }

    /// Subgraph induced on all vertices except `removed`, renumbered densely.
    pub fn without_vertex(&self, removed: Vertex) -> UGraph {
        let relabel = |w: Vertex| if w > removed { w - 1 } else { w };
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| u != removed && v != removed)
            .map(|&(u, v)| (relabel(u), relabel(v)));
        UGraph::from_edges(self.n() - 1, edges).expect("subgraph of a simple graph")
    }
}

impl fmt::Debug for UGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("UGraph")
            .field("n", &self.n())
            .field("edges", &self.edges)
            .finish()
    }
}

#[derive(Debug, Clone)]
pub struct UGraphBuilder {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl UGraphBuilder {
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<&mut Self, GraphError> {
        check_pair(self.n, u, v)?;
        self.edges.push((u.min(v), u.max(v)));
        Ok(self)
    }

    pub fn edge(mut self, u: Vertex, v: Vertex) -> Result<Self, GraphError> {
        self.add_edge(u, v)?;
        Ok(self)
    }

    /// Finishes the graph. Duplicates are reported here since they may only
    /// become visible once all edges are known.
    pub fn try_build(mut self) -> Result<UGraph, GraphError> {
        self.edges.sort_unstable();
        if let Some(w) = self.edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u - 1].push(v);
            adj[v - 1].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(UGraph {
            adj,
            edges: self.edges,
        })
    }

    /// Like [`UGraphBuilder::try_build`] but silently merges duplicates.
    pub fn build(mut self) -> UGraph {
        self.edges.sort_unstable();
        self.edges.dedup();
        self.try_build().expect("duplicates removed")
    }
}

/// A directed simple graph. Antiparallel arcs are allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    out: Vec<Vec<Vertex>>,
    inc: Vec<Vec<Vertex>>,
    arc_count: usize,
}

impl Digraph {
    pub fn builder(n: usize) -> DigraphBuilder {
        DigraphBuilder {
            n,
            arcs: Vec::new(),
        }
    }

    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut b = Self::builder(n);
        for (u, v) in arcs {
            b.add_arc(u, v)?;
        }
        b.try_build()
    }

    pub fn n(&self) -> usize {
        self.out.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.n()
    }

    /// All arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(i, list)| list.iter().map(move |&v| (i + 1, v)))
    }

    pub fn out_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.out[v - 1]
    }

    pub fn in_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.inc[v - 1]
    }

    pub fn outdeg(&self, v: Vertex) -> usize {
        self.out[v - 1].len()
    }

    pub fn indeg(&self, v: Vertex) -> usize {
        self.inc[v - 1].len()
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        u >= 1 && u <= self.n() && self.out[u - 1].binary_search(&v).is_ok()
    }

    /// Minimum over all vertices of `min(indeg, outdeg)`.
    pub fn mindeg(&self) -> Result<usize, GraphError> {
        self.vertices()
            .map(|v| self.indeg(v).min(self.outdeg(v)))
            .min()
            .ok_or(GraphError::EmptyGraph)
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.n())
            .field("arcs", &self.arcs().collect::<Vec<_>>())
            .finish()
    }
}

#[derive(Debug, Clone)]
pub struct DigraphBuilder {
    n: usize,
    arcs: Vec<(Vertex, Vertex)>,
}

impl DigraphBuilder {
    pub fn add_arc(&mut self, u: Vertex, v: Vertex) -> Result<&mut Self, GraphError> {
        check_pair(self.n, u, v)?;
        self.arcs.push((u, v));
        Ok(self)
    }

    pub fn arc(mut self, u: Vertex, v: Vertex) -> Result<Self, GraphError> {
        self.add_arc(u, v)?;
        Ok(self)
    }

    /// Adds both `(u,v)` and `(v,u)`.
    pub fn add_bidirected(&mut self, u: Vertex, v: Vertex) -> Result<&mut Self, GraphError> {
        self.add_arc(u, v)?;
        self.add_arc(v, u)
    }

    pub fn try_build(mut self) -> Result<Digraph, GraphError> {
        self.arcs.sort_unstable();
        if let Some(w) = self.arcs.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateArc(w[0].0, w[0].1));
        }
        let mut out = vec![Vec::new(); self.n];
        let mut inc = vec![Vec::new(); self.n];
        for &(u, v) in &self.arcs {
            out[u - 1].push(v);
            inc[v - 1].push(u);
        }
        // arcs are sorted by (u, v), so out-lists are sorted already
        for list in &mut inc {
            list.sort_unstable();
        }
        Ok(Digraph {
            out,
            inc,
            arc_count: self.arcs.len(),
        })
    }

    /// Like [`DigraphBuilder::try_build`] but silently merges duplicates.
    pub fn build(mut self) -> Digraph {
        self.arcs.sort_unstable();
        self.arcs.dedup();
        self.try_build().expect("duplicates removed")
    }
}

/// A graph that can host a cycle.
pub trait CycleHost {
    fn vertex_count(&self) -> usize;
    fn is_directed(&self) -> bool;
    /// Whether the cycle step `u -> v` is available.
    fn links(&self, u: Vertex, v: Vertex) -> bool;

    /// Shortest legal cycle length: 2 in digraphs, 3 in undirected graphs.
    fn min_cycle_len(&self) -> usize {
        if self.is_directed() {
            2
        } else {
            3
        }
    }
}

impl CycleHost for UGraph {
    fn vertex_count(&self) -> usize {
        self.n()
    }
    fn is_directed(&self) -> bool {
        false
    }
    fn links(&self, u: Vertex, v: Vertex) -> bool {
        self.has_edge(u, v)
    }
}

impl CycleHost for Digraph {
    fn vertex_count(&self) -> usize {
        self.n()
    }
    fn is_directed(&self) -> bool {
        true
    }
    fn links(&self, u: Vertex, v: Vertex) -> bool {
        self.has_arc(u, v)
    }
}

/// A simple cycle, stored in traversal order without repeating the start.
///
/// Only [`validate_cycle`] creates values of this type, so every `Cycle` was
/// valid in the host it was checked against.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cycle {
    vertices: Vec<Vertex>,
}

impl Cycle {
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn into_vertices(self) -> Vec<Vertex> {
        self.vertices
    }

    /// The rotation starting at the smallest vertex id.
    pub fn canonical_rotation(&self) -> Vec<Vertex> {
        let start = self
            .vertices
            .iter()
            .enumerate()
            .min_by_key(|&(_, v)| v)
            .map_or(0, |(i, _)| i);
        let mut out = self.vertices[start..].to_vec();
        out.extend_from_slice(&self.vertices[..start]);
        out
    }

    /// Same vertex sequence up to the choice of starting point.
    pub fn same_up_to_rotation(&self, other: &Cycle) -> bool {
        self.len() == other.len() && self.canonical_rotation() == other.canonical_rotation()
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.vertices {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// Checks that `seq` is a cycle of `host`: long enough, pairwise distinct,
/// and every consecutive pair (including last -> first) is an edge or arc.
pub fn validate_cycle<H: CycleHost + ?Sized>(
    host: &H,
    seq: &[Vertex],
) -> Result<Cycle, CycleError> {
    let n = host.vertex_count();
    for (i, &v) in seq.iter().enumerate() {
        if v == 0 || v > n {
            return Err(CycleError::VertexOutOfRange {
                position: i + 1,
                vertex: v,
            });
        }
    }
    let min = host.min_cycle_len();
    if seq.len() < min {
        return Err(CycleError::TooShort {
            len: seq.len(),
            min,
        });
    }
    let mut seen = vec![false; n + 1];
    for (i, &v) in seq.iter().enumerate() {
        if std::mem::replace(&mut seen[v], true) {
            return Err(CycleError::RepeatedVertex {
                position: i + 1,
                vertex: v,
            });
        }
    }
    for i in 0..seq.len() {
        let (from, to) = (seq[i], seq[(i + 1) % seq.len()]);
        if !host.links(from, to) {
            return Err(CycleError::MissingEdge {
                position: i + 1,
                from,
                to,
            });
        }
    }
    Ok(Cycle {
        vertices: seq.to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn directed_cycle(n: usize) -> Digraph {
        Digraph::from_arcs(n, (1..=n).map(|v| (v, v % n + 1))).unwrap()
    }

    fn bidirected_clique(k: usize) -> Digraph {
        let mut b = Digraph::builder(k);
        for u in 1..=k {
            for v in 1..=k {
                if u != v {
                    b.add_arc(u, v).unwrap();
                }
            }
        }
        b.build()
    }

    #[test]
    fn directed_mindeg_examples() {
        assert_eq!(bidirected_clique(5).mindeg(), Ok(4));
        assert_eq!(directed_cycle(5).mindeg(), Ok(1));
        assert_eq!(
            Digraph::builder(0).build().mindeg(),
            Err(GraphError::EmptyGraph)
        );
    }

    #[test]
    fn undirected_mindeg_examples() {
        let k4 = UGraph::from_edges(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(k4.mindeg(), Ok(3));
        let k23 = UGraph::from_edges(5, [(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]).unwrap();
        assert_eq!(k23.mindeg(), Ok(2));
        let p3 = UGraph::from_edges(3, [(1, 2), (2, 3)]).unwrap();
        assert_eq!(p3.mindeg(), Ok(1));
        assert_eq!(
            UGraph::builder(0).build().mindeg(),
            Err(GraphError::EmptyGraph)
        );
    }

    #[test]
    fn builder_rejects_bad_input() {
        assert_eq!(
            UGraph::builder(3).edge(2, 2).unwrap_err(),
            GraphError::SelfLoop(2)
        );
        assert_eq!(
            UGraph::builder(3).edge(1, 4).unwrap_err(),
            GraphError::VertexOutOfRange { vertex: 4, n: 3 }
        );
        let dup = UGraph::builder(3).edge(1, 2).unwrap().edge(2, 1).unwrap();
        assert_eq!(dup.try_build(), Err(GraphError::DuplicateEdge(1, 2)));
        let anti = Digraph::from_arcs(2, [(1, 2), (2, 1)]).unwrap();
        assert_eq!(anti.arc_count(), 2);
        assert_eq!(
            Digraph::from_arcs(2, [(1, 2), (1, 2)]),
            Err(GraphError::DuplicateArc(1, 2))
        );
    }

    #[test]
    fn validate_cycle_examples() {
        let c5 = directed_cycle(5);
        let c = validate_cycle(&c5, &[1, 2, 3, 4, 5]).unwrap();
        assert_eq!(c.len(), 5);
        assert_eq!(
            validate_cycle(&c5, &[1, 2, 4]),
            Err(CycleError::MissingEdge {
                position: 2,
                from: 2,
                to: 4
            })
        );
        let k3 = bidirected_clique(3);
        assert_eq!(validate_cycle(&k3, &[1, 2]).unwrap().len(), 2);
    }

    #[test]
    fn validate_cycle_error_paths() {
        let k3 = bidirected_clique(3);
        assert_eq!(
            validate_cycle(&k3, &[1]),
            Err(CycleError::TooShort { len: 1, min: 2 })
        );
        assert_eq!(
            validate_cycle(&k3, &[1, 2, 1]),
            Err(CycleError::RepeatedVertex {
                position: 3,
                vertex: 1
            })
        );
        assert_eq!(
            validate_cycle(&k3, &[1, 9]),
            Err(CycleError::VertexOutOfRange {
                position: 2,
                vertex: 9
            })
        );
        let tri = UGraph::from_edges(3, [(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(
            validate_cycle(&tri, &[1, 2]),
            Err(CycleError::TooShort { len: 2, min: 3 })
        );
        assert!(validate_cycle(&tri, &[3, 2, 1]).is_ok());
    }

    #[test]
    fn rotation_equivalence() {
        let c5 = directed_cycle(5);
        let a = validate_cycle(&c5, &[3, 4, 5, 1, 2]).unwrap();
        let b = validate_cycle(&c5, &[1, 2, 3, 4, 5]).unwrap();
        assert!(a.same_up_to_rotation(&b));
        assert_eq!(a.canonical_rotation(), vec![1, 2, 3, 4, 5]);
        assert_eq!(a.to_string(), "3 4 5 1 2");
    }

    #[test]
    fn without_vertex_relabels() {
        let c4 = UGraph::from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        let p = c4.without_vertex(2);
        assert_eq!(p.n(), 3);
        assert_eq!(p.edges(), &[(1, 3), (2, 3)]);
    }
}
