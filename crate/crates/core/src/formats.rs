//! Text formats.
//!
//! Graph files are DIMACS-style:
//!
//! ```text
//! c optional comments
//! p edge <n> <m>      (or: p arc <n> <m>)
//! e <u> <v>           (or: a <u> <v>), m lines, 1-indexed
//! ```
//!
//! Cycle files hold one line of space-separated vertex ids in traversal
//! order, without repeating the start. Reduction instances additionally get
//! a JSON sidecar describing the role of every vertex of `H`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gadgets::{ReductionInstance, ResolvedParams, VertexRole};
use crate::graph::{Digraph, GraphError, UGraph, Vertex};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing `p edge` or `p arc` header")]
    MissingHeader,
    #[error("header declares {declared} edges but {found} were listed")]
    CountMismatch { declared: usize, found: usize },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("expected {expected} graph, found {found}")]
    WrongKind {
        expected: &'static str,
        found: &'static str,
    },
    #[error("bad mapping file: {0}")]
    Json(#[from] serde_json::Error),
}

/// A parsed graph file of either kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyGraph {
    Undirected(UGraph),
    Directed(Digraph),
}

impl AnyGraph {
    pub fn kind(&self) -> &'static str {
        match self {
            AnyGraph::Undirected(_) => "undirected",
            AnyGraph::Directed(_) => "directed",
        }
    }

    pub fn into_undirected(self) -> Result<UGraph, FormatError> {
        match self {
            AnyGraph::Undirected(g) => Ok(g),
            other => Err(FormatError::WrongKind {
                expected: "undirected",
                found: other.kind(),
            }),
        }
    }

    pub fn into_directed(self) -> Result<Digraph, FormatError> {
        match self {
            AnyGraph::Directed(d) => Ok(d),
            other => Err(FormatError::WrongKind {
                expected: "directed",
                found: other.kind(),
            }),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            AnyGraph::Undirected(g) => write_ugraph(g),
            AnyGraph::Directed(d) => write_digraph(d),
        }
    }
}

fn syntax(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        msg: msg.into(),
    }
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize, FormatError> {
    let tok = tok.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| syntax(line, format!("{what} `{tok}` is not a nonnegative integer")))
}

/// Parses a graph file. Duplicate edges, self-loops and a wrong edge count
/// are errors.
pub fn parse_graph(text: &str) -> Result<AnyGraph, FormatError> {
    enum Partial {
        U(crate::graph::UGraphBuilder),
        D(crate::graph::DigraphBuilder),
    }
    let mut state: Option<(Partial, usize)> = None;
    let mut listed = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut toks = raw.split_whitespace();
        let Some(tag) = toks.next() else { continue };
        match (tag, &mut state) {
            ("c", _) => continue,
            ("p", None) => {
                let kind = toks.next();
                let n = parse_num(toks.next(), line, "vertex count")?;
                let m = parse_num(toks.next(), line, "edge count")?;
                let partial = match kind {
                    Some("edge") => Partial::U(UGraph::builder(n)),
                    Some("arc") => Partial::D(Digraph::builder(n)),
                    _ => return Err(syntax(line, "header must be `p edge n m` or `p arc n m`")),
                };
                state = Some((partial, m));
            }
            ("p", Some(_)) => return Err(syntax(line, "second header line")),
            (_, None) => return Err(FormatError::MissingHeader),
            (tag, Some((partial, _))) => {
                let u = parse_num(toks.next(), line, "endpoint")?;
                let v = parse_num(toks.next(), line, "endpoint")?;
                let graph_err = |source| FormatError::Graph { line, source };
                match (tag, partial) {
                    ("e", Partial::U(b)) => {
                        b.add_edge(u, v).map_err(graph_err)?;
                    }
                    ("a", Partial::D(b)) => {
                        b.add_arc(u, v).map_err(graph_err)?;
                    }
                    (t, _) => return Err(syntax(line, format!("unexpected line tag `{t}`"))),
                }
                listed += 1;
            }
        }
        if toks.next().is_some() {
            return Err(syntax(line, "trailing tokens"));
        }
    }
    let (partial, declared) = state.ok_or(FormatError::MissingHeader)?;
    if declared != listed {
        return Err(FormatError::CountMismatch {
            declared,
            found: listed,
        });
    }
    let graph_err = |source| FormatError::Graph { line: 0, source };
    Ok(match partial {
        Partial::U(b) => AnyGraph::Undirected(b.try_build().map_err(graph_err)?),
        Partial::D(b) => AnyGraph::Directed(b.try_build().map_err(graph_err)?),
    })
}

pub fn write_ugraph(g: &UGraph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

pub fn write_digraph(d: &Digraph) -> String {
    let mut out = format!("p arc {} {}\n", d.n(), d.arc_count());
    for (u, v) in d.arcs() {
        writeln!(out, "a {u} {v}").unwrap();
    }
    out
}

pub fn parse_cycle(text: &str) -> Result<Vec<Vertex>, FormatError> {
    let mut seq = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        for tok in raw.split_whitespace() {
            seq.push(parse_num(Some(tok), i + 1, "vertex")?);
        }
    }
    Ok(seq)
}

pub fn write_cycle(seq: &[Vertex]) -> String {
    let mut out = seq
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ");
    out.push('\n');
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RoleKind {
    Original,
    Clique,
}

/// One row of the mapping sidecar.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoleRecord {
    pub id: Vertex,
    pub kind: RoleKind,
    /// For originals, the vertex of `G` when it differs from `id`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<Vertex>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge: Option<[Vertex; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub position: Option<usize>,
}

/// The JSON sidecar accompanying a reduced graph file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mapping {
    pub source_n: usize,
    pub a: usize,
    pub clique_count: usize,
    pub clique_size: usize,
    pub canonical: bool,
    pub roles: Vec<RoleRecord>,
}

impl Mapping {
    pub fn of(r: &ReductionInstance) -> Self {
        let p = r.params();
        let roles = r
            .roles()
            .iter()
            .enumerate()
            .map(|(i, role)| match *role {
                VertexRole::Original(g) => RoleRecord {
                    id: i + 1,
                    kind: RoleKind::Original,
                    source: (g != i + 1).then_some(g),
                    edge: None,
                    index: None,
                    position: None,
                },
                VertexRole::Clique {
                    edge: (u, v),
                    index,
                    position,
                } => RoleRecord {
                    id: i + 1,
                    kind: RoleKind::Clique,
                    source: None,
                    edge: Some([u, v]),
                    index: Some(index),
                    position: Some(position),
                },
            })
            .collect();
        Self {
            source_n: r.source_n(),
            a: p.a,
            clique_count: p.clique_count,
            clique_size: p.clique_size,
            canonical: p.canonical,
            roles,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, FormatError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Role table in id order. Rows must cover ids `1..=len` exactly once.
    pub fn role_table(&self) -> Result<Vec<VertexRole>, String> {
        let mut table: Vec<Option<VertexRole>> = vec![None; self.roles.len()];
        for rec in &self.roles {
            let slot = rec
                .id
                .checked_sub(1)
                .and_then(|i| table.get_mut(i))
                .ok_or_else(|| format!("role id {} out of range", rec.id))?;
            if slot.is_some() {
                return Err(format!("role id {} listed twice", rec.id));
            }
            *slot = Some(match rec.kind {
                // originals keep their own id unless told otherwise
                RoleKind::Original => VertexRole::Original(rec.source.unwrap_or(rec.id)),
                RoleKind::Clique => VertexRole::Clique {
                    edge: rec
                        .edge
                        .map(|[u, v]| (u, v))
                        .ok_or_else(|| format!("clique role {} lacks an edge", rec.id))?,
                    index: rec
                        .index
                        .ok_or_else(|| format!("clique role {} lacks an index", rec.id))?,
                    position: rec
                        .position
                        .ok_or_else(|| format!("clique role {} lacks a position", rec.id))?,
                },
            });
        }
        Ok(table
            .into_iter()
            .map(|r| r.expect("every id filled"))
            .collect())
    }

    pub fn params(&self) -> ResolvedParams {
        ResolvedParams {
            a: self.a,
            clique_count: self.clique_count,
            clique_size: self.clique_size,
            canonical: self.canonical,
        }
    }
}
