//! Degree-inflating gadget constructions.
//!
//! The edge-clique reduction turns an undirected 2-connected graph `G` on
//! `n` vertices into a 2-connected digraph `H` with minimum degree `2n - a`
//! such that `G` is Hamiltonian exactly when `H` has a cycle of length at
//! least `2n = mindeg(H) + a`. For every edge `uv` (`u < v`) of `G`, `H` gets
//! `clique_count` bidirected cliques of `clique_size` vertices each. In every
//! clique position 1 plays `u'` and position 2 plays `v'`, wired by the arcs
//! `(u, u')`, `(u', v)`, `(v, v')` and `(v', u)`.
//!
//! Vertex ids in `H` are arithmetic: originals keep `1..=n`, clique vertices
//! follow in (edge, clique index, position) order.
//!
//! The vertex-clique construction attaches one bidirected clique to every
//! vertex of a digraph instead. It inflates the minimum degree just as well
//! but destroys 2-connectivity.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::connectivity::is_2connected_undirected;
use crate::graph::{validate_cycle, Cycle, CycleError, Digraph, GraphError, UGraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GadgetError {
    #[error("source graph is not 2-connected; such an input is a no-instance")]
    NotTwoConnected,
    #[error("source graph has {n} vertices, fewer than a = {a}")]
    TooFewVertices { n: usize, a: usize },
    #[error("bad gadget parameters: {0}")]
    BadParams(String),
    #[error("threshold equals mindeg + a only at canonical parameters")]
    NonCanonicalParams,
    #[error("cycle is not a Hamiltonian cycle of the source graph: {0}")]
    NotHamiltonian(String),
    #[error("cycle of length {len} is shorter than the threshold {threshold}")]
    TooShort { len: usize, threshold: usize },
    #[error(
        "cycle does not alternate between original and clique vertices at position {position}"
    )]
    NotAlternating { position: usize },
    #[error("cycle is not valid in the host graph: {0}")]
    InvalidCycle(#[from] CycleError),
    #[error("construction needs at least 3 vertices, got {0}")]
    TooSmall(usize),
    #[error("vertex mapping is inconsistent: {0}")]
    BadMapping(String),
    #[error("minimum degree of H is {found}, expected {expected}")]
    DegreeMismatch { found: usize, expected: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Gadget tunables. `None` selects the canonical value for the source graph:
/// `2n` cliques per edge, each on `2n - a + 1` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GadgetParams {
    pub a: usize,
    pub clique_count: Option<usize>,
    pub clique_size: Option<usize>,
}

impl GadgetParams {
    pub fn canonical(a: usize) -> Self {
        Self {
            a,
            clique_count: None,
            clique_size: None,
        }
    }

    /// One 3-vertex clique per edge: the smallest gadget that keeps a
    /// non-chosen clique vertex and still forbids long cycles through a
    /// clique, so exhaustive search on `H` stays cheap.
    pub fn test(a: usize) -> Self {
        Self {
            a,
            clique_count: Some(1),
            clique_size: Some(3),
        }
    }

    pub fn resolve(&self, n: usize) -> Result<ResolvedParams, GadgetError> {
        if self.a < 3 {
            return Err(GadgetError::BadParams(format!(
                "a = {} must be at least 3",
                self.a
            )));
        }
        let canon_count = 2 * n;
        let canon_size = (2 * n + 1).saturating_sub(self.a);
        let clique_count = self.clique_count.unwrap_or(canon_count);
        let clique_size = self.clique_size.unwrap_or(canon_size);
        if clique_count == 0 {
            return Err(GadgetError::BadParams(
                "clique_count must be positive".into(),
            ));
        }
        if clique_size < 2 {
            return Err(GadgetError::BadParams(format!(
                "clique_size = {clique_size} leaves no room for two attachment vertices"
            )));
        }
        Ok(ResolvedParams {
            a: self.a,
            clique_count,
            clique_size,
            canonical: clique_count == canon_count && clique_size == canon_size,
        })
    }
}

/// Gadget parameters resolved against a concrete source graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResolvedParams {
    pub a: usize,
    pub clique_count: usize,
    pub clique_size: usize,
    pub canonical: bool,
}

impl ResolvedParams {
    /// Whether a cycle touching two vertices of one clique is provably
    /// shorter than `2n`, which is what makes long cycles project back.
    pub fn guarantees_equivalence(&self, n: usize) -> bool {
        self.clique_size + 1 < 2 * n
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexRole {
    Original(Vertex),
    /// Vertex `position` of clique `index` on edge `edge = (u, v)`, `u < v`.
    /// Position 1 is `u'` and position 2 is `v'`.
    Clique {
        edge: (Vertex, Vertex),
        index: usize,
        position: usize,
    },
}

impl VertexRole {
    pub fn class(&self) -> VertexClass {
        match *self {
            VertexRole::Original(_) => VertexClass::Original,
            VertexRole::Clique { position, .. } if position <= 2 => VertexClass::CliqueChosen,
            VertexRole::Clique { .. } => VertexClass::CliqueInternal,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexClass {
    Original,
    CliqueChosen,
    CliqueInternal,
}

/// Kind of an arc of `H` in terms of the gadget wiring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArcKind {
    IntraClique,
    /// `(u, u')`
    IntoFirst,
    /// `(u', v)`
    OutOfFirst,
    /// `(v, v')`
    IntoSecond,
    /// `(v', u)`
    OutOfSecond,
}

/// The constructed digraph `H` together with what every vertex of `H` is.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionInstance {
    graph: Digraph,
    source: UGraph,
    roles: Vec<VertexRole>,
    params: ResolvedParams,
}

impl ReductionInstance {
    pub fn graph(&self) -> &Digraph {
        &self.graph
    }

    pub fn source(&self) -> &UGraph {
        &self.source
    }

    pub fn source_n(&self) -> usize {
        self.source.n()
    }

    pub fn params(&self) -> &ResolvedParams {
        &self.params
    }

    /// Roles of vertices `1..=|V(H)|`, in id order.
    pub fn roles(&self) -> &[VertexRole] {
        &self.roles
    }

    pub fn role(&self, v: Vertex) -> VertexRole {
        self.roles[v - 1]
    }

    /// Length a cycle of `H` must reach: `2n`.
    pub fn threshold(&self) -> usize {
        2 * self.source_n()
    }

    /// Id of a clique vertex. `edge_idx` is 0-based into the sorted edge
    /// list; `index` and `position` are 1-based.
    pub fn clique_vertex(&self, edge_idx: usize, index: usize, position: usize) -> Vertex {
        let p = &self.params;
        self.source_n() + (edge_idx * p.clique_count + (index - 1)) * p.clique_size + position
    }

    /// Reassembles an instance from `H` and a role table, e.g. after reading
    /// both from disk. The source graph is recovered from the edges named by
    /// clique roles. Only table shape is checked here; a table that does not
    /// describe `H` surfaces later through [`ReductionInstance::classify_arcs`]
    /// or [`project_long_cycle`].
    pub fn from_parts(
        graph: Digraph,
        roles: Vec<VertexRole>,
        source_n: usize,
        params: ResolvedParams,
    ) -> Result<Self, GadgetError> {
        if roles.len() != graph.n() {
            return Err(GadgetError::BadMapping(format!(
                "{} roles for {} vertices",
                roles.len(),
                graph.n()
            )));
        }
        let mut edges = Vec::new();
        for (i, role) in roles.iter().enumerate() {
            match *role {
                VertexRole::Original(_) => {}
                VertexRole::Clique {
                    edge: (u, v),
                    index,
                    position,
                } => {
                    if u == 0 || v > source_n || u >= v {
                        return Err(GadgetError::BadMapping(format!(
                            "vertex {} names invalid edge ({u},{v})",
                            i + 1
                        )));
                    }
                    if index == 0
                        || index > params.clique_count
                        || position == 0
                        || position > params.clique_size
                    {
                        return Err(GadgetError::BadMapping(format!(
                            "vertex {} has clique index {index} position {position} out of range",
                            i + 1
                        )));
                    }
                    edges.push((u, v));
                }
            }
        }
        let source = UGraph::builder(source_n);
        let source = edges
            .into_iter()
            .try_fold(source, |b, (u, v)| b.edge(u, v))?
            .build();
        Ok(Self {
            graph,
            source,
            roles,
            params,
        })
    }

    /// Classifies every arc of `H` by the role table. Fails on the first arc
    /// that is neither inside one clique nor one of its four attachments.
    pub fn classify_arcs(&self) -> Result<BTreeMap<ArcKind, usize>, GadgetError> {
        let mut counts = BTreeMap::new();
        for (x, y) in self.graph.arcs() {
            let kind = classify(self.role(x), self.role(y)).ok_or_else(|| {
                GadgetError::BadMapping(format!("arc ({x},{y}) matches no gadget arc"))
            })?;
            *counts.entry(kind).or_insert(0) += 1;
        }
        Ok(counts)
    }
}

fn classify(from: VertexRole, to: VertexRole) -> Option<ArcKind> {
    use VertexRole::*;
    match (from, to) {
        (
            Clique {
                edge: e1,
                index: i1,
                ..
            },
            Clique {
                edge: e2,
                index: i2,
                ..
            },
        ) if e1 == e2 && i1 == i2 => Some(ArcKind::IntraClique),
        (
            Original(g),
            Clique {
                edge, position: 1, ..
            },
        ) if g == edge.0 => Some(ArcKind::IntoFirst),
        (
            Clique {
                edge, position: 1, ..
            },
            Original(g),
        ) if g == edge.1 => Some(ArcKind::OutOfFirst),
        (
            Original(g),
            Clique {
                edge, position: 2, ..
            },
        ) if g == edge.1 => Some(ArcKind::IntoSecond),
        (
            Clique {
                edge, position: 2, ..
            },
            Original(g),
        ) if g == edge.0 => Some(ArcKind::OutOfSecond),
        _ => None,
    }
}

/// Builds the edge-clique reduction of `g`.
pub fn build_edge_clique_reduction(
    g: &UGraph,
    params: &GadgetParams,
) -> Result<ReductionInstance, GadgetError> {
    let n = g.n();
    let resolved = params.resolve(n)?;
    if n < params.a {
        return Err(GadgetError::TooFewVertices { n, a: params.a });
    }
    // n >= a >= 3 here, so the connectivity check is defined
    let witness = is_2connected_undirected(g).map_err(|_| GadgetError::NotTwoConnected)?;
    if !witness.verdict {
        return Err(GadgetError::NotTwoConnected);
    }

    let (count, size) = (resolved.clique_count, resolved.clique_size);
    let total = n + g.edge_count() * count * size;
    let mut roles: Vec<VertexRole> = (1..=n).map(VertexRole::Original).collect();
    roles.reserve(total - n);
    let mut b = Digraph::builder(total);
    let mut next = n + 1;
    for &(u, v) in g.edges() {
        for index in 1..=count {
            let base = next;
            for position in 1..=size {
                roles.push(VertexRole::Clique {
                    edge: (u, v),
                    index,
                    position,
                });
            }
            next += size;
            for x in base..next {
                for y in base..next {
                    if x != y {
                        b.add_arc(x, y)?;
                    }
                }
            }
            let (u_prime, v_prime) = (base, base + 1);
            b.add_arc(u, u_prime)?;
            b.add_arc(u_prime, v)?;
            b.add_arc(v, v_prime)?;
            b.add_arc(v_prime, u)?;
        }
    }
    Ok(ReductionInstance {
        graph: b.try_build()?,
        source: g.clone(),
        roles,
        params: resolved,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeRange {
    pub min_in: usize,
    pub max_in: usize,
    pub min_out: usize,
    pub max_out: usize,
}

impl DegreeRange {
    fn point(indeg: usize, outdeg: usize) -> Self {
        Self {
            min_in: indeg,
            max_in: indeg,
            min_out: outdeg,
            max_out: outdeg,
        }
    }

    fn absorb(&mut self, indeg: usize, outdeg: usize) {
        self.min_in = self.min_in.min(indeg);
        self.max_in = self.max_in.max(indeg);
        self.min_out = self.min_out.min(outdeg);
        self.max_out = self.max_out.max(outdeg);
    }

    /// In- and out-degree are both exactly `d` for the whole class.
    pub fn is_exactly(&self, d: usize) -> bool {
        *self == Self::point(d, d)
    }
}

/// Exact degree ranges per vertex class. `None` marks an empty class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeReport {
    pub original: Option<DegreeRange>,
    pub chosen: Option<DegreeRange>,
    pub internal: Option<DegreeRange>,
}

pub fn degree_report(r: &ReductionInstance) -> DegreeReport {
    let mut report = DegreeReport {
        original: None,
        chosen: None,
        internal: None,
    };
    let h = r.graph();
    for v in h.vertices() {
        let slot = match r.role(v).class() {
            VertexClass::Original => &mut report.original,
            VertexClass::CliqueChosen => &mut report.chosen,
            VertexClass::CliqueInternal => &mut report.internal,
        };
        let (i, o) = (h.indeg(v), h.outdeg(v));
        match slot {
            Some(range) => range.absorb(i, o),
            None => *slot = Some(DegreeRange::point(i, o)),
        }
    }
    report
}

/// The decision threshold `2n`, checked against `mindeg(H) + a`. Only
/// meaningful at canonical parameters.
pub fn decision_threshold(r: &ReductionInstance) -> Result<usize, GadgetError> {
    let p = r.params();
    if !p.canonical {
        return Err(GadgetError::NonCanonicalParams);
    }
    let threshold = r.threshold();
    let mindeg = r.graph().mindeg()?;
    if mindeg + p.a != threshold {
        return Err(GadgetError::DegreeMismatch {
            found: mindeg,
            expected: threshold - p.a,
        });
    }
    Ok(threshold)
}

/// Maps a Hamiltonian cycle `v1 .. vn` of `G` to the cycle of `H` that
/// visits, between `v_i` and `v_{i+1}`, the attachment vertex of the first
/// clique on that edge. The result has length exactly `2n`.
pub fn lift_hamiltonian_cycle(r: &ReductionInstance, c: &Cycle) -> Result<Cycle, GadgetError> {
    let g = r.source();
    if c.len() != g.n() {
        return Err(GadgetError::NotHamiltonian(format!(
            "length {} but the graph has {} vertices",
            c.len(),
            g.n()
        )));
    }
    validate_cycle(g, c.vertices()).map_err(|e| GadgetError::NotHamiltonian(e.to_string()))?;
    let vs = c.vertices();
    let mut lifted = Vec::with_capacity(2 * vs.len());
    for (i, &x) in vs.iter().enumerate() {
        let y = vs[(i + 1) % vs.len()];
        let edge_idx = g.edge_index(x, y).expect("validated edge");
        let position = if x < y { 1 } else { 2 };
        lifted.push(x);
        lifted.push(r.clique_vertex(edge_idx, 1, position));
    }
    Ok(validate_cycle(r.graph(), &lifted)?)
}

/// Maps a cycle of `H` of length at least `2n` back to `G` by deleting the
/// clique vertices; each one sat between the two ends of its edge. Relies
/// only on the role table, so a corrupted table is caught here.
pub fn project_long_cycle(r: &ReductionInstance, c: &Cycle) -> Result<Cycle, GadgetError> {
    let threshold = r.threshold();
    if c.len() < threshold {
        return Err(GadgetError::TooShort {
            len: c.len(),
            threshold,
        });
    }
    validate_cycle(r.graph(), c.vertices())?;
    let vs = c.vertices();
    let len = vs.len();
    if !len.is_multiple_of(2) {
        return Err(GadgetError::NotAlternating { position: len });
    }
    // rotate so that an original vertex comes first
    let Some(start) = vs
        .iter()
        .position(|&v| matches!(r.role(v), VertexRole::Original(_)))
    else {
        return Err(GadgetError::NotAlternating { position: 1 });
    };
    let mut projected = Vec::with_capacity(len / 2);
    let mut used_cliques = std::collections::HashSet::new();
    for k in 0..len {
        let i = (start + k) % len;
        let prev = r.role(vs[(i + len - 1) % len]);
        let next = r.role(vs[(i + 1) % len]);
        match r.role(vs[i]) {
            VertexRole::Original(g) => {
                if k % 2 != 0 {
                    return Err(GadgetError::NotAlternating { position: i + 1 });
                }
                projected.push(g);
            }
            VertexRole::Clique { edge, index, .. } => {
                let ends = match (prev, next) {
                    (VertexRole::Original(p), VertexRole::Original(q)) => (p.min(q), p.max(q)),
                    _ => return Err(GadgetError::NotAlternating { position: i + 1 }),
                };
                if k % 2 != 1 || ends != edge || !used_cliques.insert((edge, index)) {
                    return Err(GadgetError::NotAlternating { position: i + 1 });
                }
            }
        }
    }
    let cycle =
        validate_cycle(r.source(), &projected).map_err(|_| GadgetError::NotAlternating {
            position: start + 1,
        })?;
    if cycle.len() < r.source_n() {
        return Err(GadgetError::TooShort {
            len: cycle.len(),
            threshold: r.source_n(),
        });
    }
    Ok(cycle)
}

/// Role of a vertex in the vertex-clique construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AttachedRole {
    Original(Vertex),
    /// Extra vertex `position` (1-based) of the clique attached to `owner`.
    Attached {
        owner: Vertex,
        position: usize,
    },
}

/// Result of the vertex-clique construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexCliqueInstance {
    graph: Digraph,
    roles: Vec<AttachedRole>,
    source_n: usize,
}

impl VertexCliqueInstance {
    pub fn graph(&self) -> &Digraph {
        &self.graph
    }

    pub fn roles(&self) -> &[AttachedRole] {
        &self.roles
    }

    pub fn source_n(&self) -> usize {
        self.source_n
    }

    /// A cycle of at least this length exists iff the source is Hamiltonian.
    pub fn threshold(&self) -> usize {
        self.source_n
    }
}

/// Attaches to every vertex `v` of `d` a bidirected clique on `n - 1`
/// vertices containing `v`. The extra vertices of `v`'s clique get ids
/// `n + (v - 1)(n - 2) + 1 ..= n + v(n - 2)`.
pub fn build_vertex_clique_construction(d: &Digraph) -> Result<VertexCliqueInstance, GadgetError> {
    let n = d.n();
    if n < 3 {
        return Err(GadgetError::TooSmall(n));
    }
    let extra = n - 2;
    let total = n + n * extra;
    let mut b = Digraph::builder(total);
    for (u, v) in d.arcs() {
        b.add_arc(u, v)?;
    }
    let mut roles: Vec<AttachedRole> = (1..=n).map(AttachedRole::Original).collect();
    for owner in 1..=n {
        let base = n + (owner - 1) * extra;
        let members: Vec<Vertex> = std::iter::once(owner)
            .chain(base + 1..=base + extra)
            .collect();
        roles.extend((1..=extra).map(|position| AttachedRole::Attached { owner, position }));
        for &x in &members {
            for &y in &members {
                if x != y {
                    b.add_arc(x, y)?;
                }
            }
        }
    }
    Ok(VertexCliqueInstance {
        graph: b.try_build()?,
        roles,
        source_n: n,
    })
}
