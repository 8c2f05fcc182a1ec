//! Instance catalog, seeded generators and the end-to-end verification run.
//!
//! [`run_claim_roundtrip`] takes every graph of a [`Corpus`] through the
//! reduction and checks, per instance, that Hamiltonicity of `G` agrees with
//! the existence of a cycle of length `2n` in `H`, that Hamiltonian cycles
//! lift, and that long cycles of `H` project back to Hamiltonian cycles.

use std::fmt::Write as _;
use std::time::Instant;

use rand::seq::IndexedRandom;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::connectivity::{is_2connected_digraph, is_2connected_undirected};
use crate::formats::AnyGraph;
use crate::gadgets::{
    build_edge_clique_reduction, decision_threshold, degree_report, lift_hamiltonian_cycle,
    project_long_cycle, GadgetError, GadgetParams, ReductionInstance,
};
use crate::graph::{Digraph, UGraph};
use crate::solvers::{hamiltonian_cycle_exact, has_cycle_at_least, SearchBudget, SolveOutcome};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
    #[error("unknown corpus `{0}`")]
    UnknownCorpus(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

fn ring_edges(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).map(move |v| (v, v % n + 1))
}

pub fn cycle_graph(n: usize) -> UGraph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    UGraph::from_edges(n, ring_edges(n)).expect("simple")
}

pub fn path_graph(n: usize) -> UGraph {
    UGraph::from_edges(n, (1..n).map(|v| (v, v + 1))).expect("simple")
}

pub fn complete_graph(n: usize) -> UGraph {
    let mut b = UGraph::builder(n);
    for u in 1..=n {
        for v in u + 1..=n {
            b.add_edge(u, v).expect("in range");
        }
    }
    b.build()
}

/// `K_{p,q}` with sides `1..=p` and `p+1..=p+q`.
pub fn complete_bipartite(p: usize, q: usize) -> UGraph {
    let mut b = UGraph::builder(p + q);
    for u in 1..=p {
        for v in p + 1..=p + q {
            b.add_edge(u, v).expect("in range");
        }
    }
    b.build()
}

/// Outer 5-cycle `1..=5`, inner pentagram `6..=10`, spokes `i - (i+5)`.
pub fn petersen() -> UGraph {
    let outer = ring_edges(5);
    let inner = (0..5).map(|i| (6 + i, 6 + (i + 2) % 5));
    let spokes = (1..=5).map(|i| (i, i + 5));
    UGraph::from_edges(10, outer.chain(inner).chain(spokes)).expect("simple")
}

/// Three internally disjoint paths between 1 and 2 with 1, 2 and 2 inner
/// vertices. 2-connected but not Hamiltonian.
pub fn theta() -> UGraph {
    UGraph::from_edges(
        7,
        [
            (1, 3),
            (3, 2),
            (1, 4),
            (4, 5),
            (5, 2),
            (1, 6),
            (6, 7),
            (7, 2),
        ],
    )
    .expect("simple")
}

/// Triangular prism: triangles `1,2,3` and `4,5,6` joined by `i - (i+3)`.
pub fn prism() -> UGraph {
    UGraph::from_edges(
        6,
        [
            (1, 2),
            (2, 3),
            (1, 3),
            (4, 5),
            (5, 6),
            (4, 6),
            (1, 4),
            (2, 5),
            (3, 6),
        ],
    )
    .expect("simple")
}

pub fn directed_cycle(n: usize) -> Digraph {
    Digraph::from_arcs(n, ring_edges(n)).expect("simple")
}

/// Random tournament: each pair gets exactly one arc, oriented by a fair coin.
pub fn random_tournament(n: usize, seed: u64) -> Digraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = Digraph::builder(n);
    for u in 1..=n {
        for v in u + 1..=n {
            let (x, y) = if rng.random_bool(0.5) { (u, v) } else { (v, u) };
            b.add_arc(x, y).expect("in range");
        }
    }
    b.build()
}

/// Random digraph with every ordered pair present independently with
/// probability `p`.
pub fn random_digraph(n: usize, p: f64, seed: u64) -> Result<Digraph, HarnessError> {
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = Digraph::builder(n);
    for u in 1..=n {
        for v in 1..=n {
            if u != v && rng.random_bool(p) {
                b.add_arc(u, v).expect("in range");
            }
        }
    }
    Ok(b.build())
}

fn check_probability(p: f64) -> Result<(), HarnessError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(HarnessError::InvalidArgument(format!(
            "probability {p} outside [0, 1]"
        )))
    }
}

/// A 2-connected graph: the cycle `1 - 2 - ... - n - 1` plus every chord
/// independently with probability `p`, chords considered in lexicographic
/// order.
pub fn random_2connected_graph(n: usize, p: f64, seed: u64) -> Result<UGraph, HarnessError> {
    if n < 3 {
        return Err(HarnessError::InvalidArgument(format!("n = {n} below 3")));
    }
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = UGraph::builder(n);
    for (u, v) in ring_edges(n) {
        b.add_edge(u, v).expect("in range");
    }
    for u in 1..=n {
        for v in u + 2..=n {
            if (u, v) != (1, n) && rng.random_bool(p) {
                b.add_edge(u, v).expect("in range");
            }
        }
    }
    Ok(b.build())
}

fn numbers<const K: usize>(rest: &str) -> Option<[usize; K]> {
    let parts: Vec<usize> = rest
        .split('_')
        .map(str::parse)
        .collect::<Result<_, _>>()
        .ok()?;
    parts.try_into().ok()
}

/// Looks up a graph by catalog name.
///
/// Undirected: `cycle_N`, `path_N`, `complete_N`, `complete_bipartite_P_Q`,
/// `petersen`, `theta`, `prism`. Directed: `directed_cycle_N`,
/// `tournament_N_SEED`, and `bidirected_<undirected name>`.
pub fn named_graph(name: &str) -> Result<AnyGraph, HarnessError> {
    let unknown = || HarnessError::UnknownName(name.to_string());
    if let Some(inner) = name.strip_prefix("bidirected_") {
        return match named_graph(inner)? {
            AnyGraph::Undirected(g) => Ok(AnyGraph::Directed(g.bidirected())),
            AnyGraph::Directed(_) => Err(unknown()),
        };
    }
    let g = match name {
        "petersen" => petersen(),
        "theta" => theta(),
        "prism" => prism(),
        _ => {
            if let Some([n]) = name.strip_prefix("directed_cycle_").and_then(numbers) {
                return if n >= 2 {
                    Ok(AnyGraph::Directed(directed_cycle(n)))
                } else {
                    Err(unknown())
                };
            }
            if let Some([n, seed]) = name.strip_prefix("tournament_").and_then(numbers) {
                return Ok(AnyGraph::Directed(random_tournament(n, seed as u64)));
            }
            if let Some([p, q]) = name.strip_prefix("complete_bipartite_").and_then(numbers) {
                complete_bipartite(p, q)
            } else if let Some([n]) = name.strip_prefix("complete_").and_then(numbers) {
                complete_graph(n)
            } else if let Some([n]) = name.strip_prefix("cycle_").and_then(numbers) {
                if n < 3 {
                    return Err(unknown());
                }
                cycle_graph(n)
            } else if let Some([n]) = name.strip_prefix("path_").and_then(numbers) {
                path_graph(n)
            } else {
                return Err(unknown());
            }
        }
    };
    Ok(AnyGraph::Undirected(g))
}

fn named_undirected(name: &str) -> UGraph {
    named_graph(name)
        .and_then(|g| {
            g.into_undirected()
                .map_err(|_| HarnessError::UnknownName(name.into()))
        })
        .expect("catalog entry")
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorpusEntry {
    pub name: String,
    pub graph: UGraph,
    /// The builder is expected to refuse this graph.
    pub expect_reject: bool,
}

impl CorpusEntry {
    pub fn new(name: impl Into<String>, graph: UGraph) -> Self {
        Self {
            name: name.into(),
            graph,
            expect_reject: false,
        }
    }

    pub fn rejected(name: impl Into<String>, graph: UGraph) -> Self {
        Self {
            expect_reject: true,
            ..Self::new(name, graph)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RandomSpec {
    pub count: usize,
    pub n_min: usize,
    pub n_max: usize,
    pub p_values: Vec<f64>,
    pub seed: u64,
}

impl RandomSpec {
    /// `count` graphs with `n` in `[4, 8]` and `p` in `{0.1, ..., 0.9}`.
    pub fn desk(count: usize, seed: u64) -> Self {
        Self {
            count,
            n_min: 4,
            n_max: 8,
            p_values: (1..=9).map(|k| k as f64 / 10.0).collect(),
            seed,
        }
    }

    pub fn generate(&self) -> Vec<CorpusEntry> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        (0..self.count)
            .map(|i| {
                let n = rng.random_range(self.n_min..=self.n_max);
                let p = *self.p_values.choose(&mut rng).expect("nonempty p_values");
                let seed = rng.next_u64();
                let g = random_2connected_graph(n, p, seed).expect("validated spec");
                CorpusEntry::new(format!("random-{i:03}-n{n}-p{p:.2}"), g)
            })
            .collect()
    }
}

/// Undirected instances for the reduction: named graphs plus an optional
/// seeded random population.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Corpus {
    pub named: Vec<CorpusEntry>,
    pub random: Option<RandomSpec>,
}

pub const CORPUS_PRESETS: &[&str] = &["named-small", "named-nonham", "random", "acceptance"];

impl Corpus {
    /// Built-in corpora:
    ///
    /// * `named-small`: small Hamiltonian and non-Hamiltonian catalog graphs,
    ///   plus `path_3`, which the builder must reject.
    /// * `named-nonham`: `K_{2,3}`, Petersen and theta.
    /// * `random`: 200 random 2-connected graphs on 4 to 8 vertices.
    /// * `acceptance`: `named-nonham` and `random` together.
    pub fn preset(name: &str, seed: u64) -> Result<Self, HarnessError> {
        let nonham = || {
            ["complete_bipartite_2_3", "petersen", "theta"]
                .into_iter()
                .map(|n| CorpusEntry::new(n, named_undirected(n)))
                .collect::<Vec<_>>()
        };
        Ok(match name {
            "named-small" => {
                let mut named: Vec<_> = ["complete_3", "cycle_4", "complete_4", "cycle_5", "prism"]
                    .into_iter()
                    .map(|n| CorpusEntry::new(n, named_undirected(n)))
                    .collect();
                named.extend(nonham());
                named.push(CorpusEntry::rejected("path_3", path_graph(3)));
                Corpus {
                    named,
                    random: None,
                }
            }
            "named-nonham" => Corpus {
                named: nonham(),
                random: None,
            },
            "random" => Corpus {
                named: Vec::new(),
                random: Some(RandomSpec::desk(200, seed)),
            },
            "acceptance" => Corpus {
                named: nonham(),
                random: Some(RandomSpec::desk(200, seed)),
            },
            _ => return Err(HarnessError::UnknownCorpus(name.to_string())),
        })
    }

    pub fn instances(&self) -> Vec<CorpusEntry> {
        let mut all = self.named.clone();
        if let Some(spec) = &self.random {
            all.extend(spec.generate());
        }
        all
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

impl From<&SolveOutcome> for Verdict {
    fn from(o: &SolveOutcome) -> Self {
        match o.verdict() {
            Some(true) => Verdict::Yes,
            Some(false) => Verdict::No,
            None => Verdict::Unknown,
        }
    }
}

impl Verdict {
    fn as_str(self) -> &'static str {
        match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Unknown => "unknown",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// Fully processed; see the individual checks.
    Checked,
    /// One of the two solvers ran out of budget.
    Inconclusive,
    /// The builder refused the input as expected.
    Rejected,
    /// Something contradicted an invariant; see `detail`.
    Failed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStats {
    pub vertices: usize,
    pub arcs: usize,
    pub mindeg: usize,
    pub threshold: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timings {
    pub source_ms: u64,
    pub reduced_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceRecord {
    pub id: usize,
    pub name: String,
    pub n: usize,
    pub m: usize,
    pub two_connected: bool,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    pub hamiltonian: Option<Verdict>,
    pub stats: Option<ReductionStats>,
    pub reduced_verdict: Option<Verdict>,
    pub lift_ok: Option<bool>,
    pub projection_ok: Option<bool>,
    pub degrees_ok: Option<bool>,
    pub reduced_two_connected: Option<bool>,
    pub equivalence_ok: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

impl InstanceRecord {
    pub fn is_conclusive(&self) -> bool {
        self.status != Status::Inconclusive
    }

    /// No check failed on this instance.
    pub fn ok(&self) -> bool {
        self.status != Status::Failed
            && [
                self.lift_ok,
                self.projection_ok,
                self.degrees_ok,
                self.reduced_two_connected,
                self.equivalence_ok,
            ]
            .iter()
            .all(|c| *c != Some(false))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportSummary {
    pub instances: usize,
    pub conclusive: usize,
    pub violations: usize,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub seed: Option<u64>,
    pub a: usize,
    pub clique_count: Option<usize>,
    pub clique_size: Option<usize>,
    pub node_limit: Option<u64>,
    pub records: Vec<InstanceRecord>,
    pub summary: ReportSummary,
}

impl VerificationReport {
    fn new(
        params: &GadgetParams,
        budget: &SearchBudget,
        seed: Option<u64>,
        records: Vec<InstanceRecord>,
    ) -> Self {
        let violations = records.iter().filter(|r| !r.ok()).count();
        let summary = ReportSummary {
            instances: records.len(),
            conclusive: records.iter().filter(|r| r.is_conclusive()).count(),
            violations,
            ok: violations == 0,
        };
        Self {
            seed,
            a: params.a,
            clique_count: params.clique_count,
            clique_size: params.clique_size,
            node_limit: budget.node_limit,
            records,
            summary,
        }
    }

    pub fn all_ok(&self) -> bool {
        self.summary.ok
    }

    pub fn conclusive_fraction(&self) -> f64 {
        if self.records.is_empty() {
            1.0
        } else {
            self.summary.conclusive as f64 / self.records.len() as f64
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &InstanceRecord> {
        self.records.iter().filter(|r| !r.ok())
    }

    /// Copy with wall-clock timings removed, for byte-reproducible output.
    pub fn without_timings(&self) -> Self {
        let mut out = self.clone();
        out.records.iter_mut().for_each(|r| r.timings = None);
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data");
        s.push('\n');
        s
    }

    /// Tab-separated, one header line then one line per instance. Missing
    /// values are `-`. Timing columns appear only when timings are present.
    pub fn to_tsv(&self) -> String {
        let with_timings = self.records.iter().any(|r| r.timings.is_some());
        let mut out = String::from(
            "id\tname\tn\tm\ttwo_connected\tstatus\thamiltonian\th_vertices\th_arcs\th_mindeg\tthreshold\th_verdict\tlift_ok\tprojection_ok\tdegrees_ok\th_two_connected\tequivalence_ok",
        );
        if with_timings {
            out.push_str("\tsource_ms\treduced_ms");
        }
        out.push('\n');
        fn opt<T: ToString>(v: Option<T>) -> String {
            v.map_or_else(|| "-".to_string(), |v| v.to_string())
        }
        for r in &self.records {
            let status = match r.status {
                Status::Checked => "checked",
                Status::Inconclusive => "inconclusive",
                Status::Rejected => "rejected",
                Status::Failed => "failed",
            };
            let s = r.stats;
            write!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.id,
                r.name,
                r.n,
                r.m,
                r.two_connected,
                status,
                opt(r.hamiltonian.map(Verdict::as_str)),
                opt(s.map(|s| s.vertices)),
                opt(s.map(|s| s.arcs)),
                opt(s.map(|s| s.mindeg)),
                opt(s.map(|s| s.threshold)),
                opt(r.reduced_verdict.map(Verdict::as_str)),
                opt(r.lift_ok),
                opt(r.projection_ok),
                opt(r.degrees_ok),
                opt(r.reduced_two_connected),
                opt(r.equivalence_ok),
            )
            .unwrap();
            if with_timings {
                let t = r.timings;
                write!(
                    out,
                    "\t{}\t{}",
                    opt(t.map(|t| t.source_ms)),
                    opt(t.map(|t| t.reduced_ms))
                )
                .unwrap();
            }
            out.push('\n');
        }
        out
    }
}

/// Exact degree accounting at canonical parameters: clique-internal vertices
/// have in/out-degree `2n - a`, attachment vertices `2n - a + 1`, originals
/// `deg_G(v) * 2n`; hence `mindeg(H) = 2n - a` and the threshold is
/// `mindeg(H) + a = 2n`.
pub fn check_canonical_degrees(r: &ReductionInstance) -> Result<(), String> {
    let n = r.source_n();
    let a = r.params().a;
    let rep = degree_report(r);
    let (internal, chosen) = (2 * n - a, 2 * n - a + 1);
    match rep.internal {
        Some(d) if d.is_exactly(internal) => {}
        other => {
            return Err(format!(
                "clique-internal degrees {other:?}, expected {internal}"
            ))
        }
    }
    match rep.chosen {
        Some(d) if d.is_exactly(chosen) => {}
        other => return Err(format!("attachment degrees {other:?}, expected {chosen}")),
    }
    let h = r.graph();
    for v in r.source().vertices() {
        let want = r.source().degree(v) * r.params().clique_count;
        if h.indeg(v) != want || h.outdeg(v) != want {
            return Err(format!(
                "original {v} has in/out {}/{}, expected {want}",
                h.indeg(v),
                h.outdeg(v)
            ));
        }
    }
    let mindeg = h.mindeg().map_err(|e| e.to_string())?;
    if mindeg != internal {
        return Err(format!("mindeg(H) = {mindeg}, expected {internal}"));
    }
    let threshold = decision_threshold(r).map_err(|e| e.to_string())?;
    if threshold != mindeg + a || threshold != 2 * n {
        return Err(format!("threshold {threshold} is not mindeg + a = 2n"));
    }
    Ok(())
}

fn millis(since: Instant) -> u64 {
    since.elapsed().as_millis() as u64
}

fn verify_instance(
    id: usize,
    entry: &CorpusEntry,
    params: &GadgetParams,
    budget: &SearchBudget,
) -> InstanceRecord {
    let g = &entry.graph;
    let two_connected = g.n() >= 3 && is_2connected_undirected(g).is_ok_and(|w| w.verdict);
    let mut rec = InstanceRecord {
        id,
        name: entry.name.clone(),
        n: g.n(),
        m: g.edge_count(),
        two_connected,
        status: Status::Checked,
        detail: None,
        hamiltonian: None,
        stats: None,
        reduced_verdict: None,
        lift_ok: None,
        projection_ok: None,
        degrees_ok: None,
        reduced_two_connected: None,
        equivalence_ok: None,
        timings: None,
    };
    let fail = |mut rec: InstanceRecord, detail: String| {
        rec.status = Status::Failed;
        rec.detail = Some(detail);
        rec
    };

    let r = match build_edge_clique_reduction(g, params) {
        Ok(_) if entry.expect_reject => {
            return fail(rec, "builder accepted an expect-reject instance".into())
        }
        Ok(r) => r,
        Err(e @ (GadgetError::NotTwoConnected | GadgetError::TooFewVertices { .. }))
            if entry.expect_reject =>
        {
            rec.status = Status::Rejected;
            rec.detail = Some(e.to_string());
            return rec;
        }
        Err(e) => return fail(rec, e.to_string()),
    };
    let h = r.graph();
    let threshold = r.threshold();
    rec.stats = Some(ReductionStats {
        vertices: h.n(),
        arcs: h.arc_count(),
        mindeg: h.mindeg().unwrap_or(0),
        threshold,
    });
    if r.params().canonical {
        rec.degrees_ok = Some(check_canonical_degrees(&r).is_ok());
    }
    rec.reduced_two_connected = Some(is_2connected_digraph(h).is_ok_and(|w| w.verdict));

    let t0 = Instant::now();
    let ham = hamiltonian_cycle_exact(g, *budget);
    let source_ms = millis(t0);
    let t1 = Instant::now();
    let long = has_cycle_at_least(h, threshold, *budget);
    let reduced_ms = millis(t1);
    rec.timings = Some(Timings {
        source_ms,
        reduced_ms,
    });
    rec.hamiltonian = Some(Verdict::from(&ham));
    rec.reduced_verdict = Some(Verdict::from(&long));

    if let Some(c) = ham.cycle() {
        rec.lift_ok = Some(
            lift_hamiltonian_cycle(&r, c)
                .and_then(|lifted| {
                    let back = project_long_cycle(&r, &lifted)?;
                    Ok(lifted.len() == threshold && back.same_up_to_rotation(c))
                })
                .unwrap_or(false),
        );
    }
    if let Some(c) = long.cycle() {
        rec.projection_ok = Some(project_long_cycle(&r, c).is_ok_and(|p| p.len() == g.n()));
    }
    match (ham.verdict(), long.verdict()) {
        (Some(x), Some(y)) => rec.equivalence_ok = Some(x == y),
        _ => rec.status = Status::Inconclusive,
    }
    if !rec.ok() {
        rec.status = Status::Failed;
    }
    rec
}

/// Runs the reduction pipeline on every corpus instance. Instances are
/// processed in parallel; records come back in corpus order.
pub fn run_claim_roundtrip(
    corpus: &Corpus,
    params: &GadgetParams,
    budget: &SearchBudget,
) -> VerificationReport {
    let entries = corpus.instances();
    let records: Vec<_> = entries
        .par_iter()
        .enumerate()
        .map(|(i, e)| verify_instance(i + 1, e, params, budget))
        .collect();
    VerificationReport::new(
        params,
        budget,
        corpus.random.as_ref().map(|s| s.seed),
        records,
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeAuditRecord {
    pub name: String,
    pub n: usize,
    pub a: usize,
    pub mindeg: usize,
    pub threshold: usize,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Builds every entry at canonical parameters for each `a` (skipping
/// entries with fewer than `a` vertices or flagged expect-reject) and checks
/// the exact degree accounting.
pub fn degree_audit(entries: &[CorpusEntry], a_values: &[usize]) -> Vec<DegreeAuditRecord> {
    let jobs: Vec<(&CorpusEntry, usize)> = entries
        .iter()
        .filter(|e| !e.expect_reject)
        .flat_map(|e| a_values.iter().map(move |&a| (e, a)))
        .filter(|(e, a)| e.graph.n() >= *a)
        .collect();
    jobs.par_iter()
        .map(|&(e, a)| {
            let built = build_edge_clique_reduction(&e.graph, &GadgetParams::canonical(a));
            let (mindeg, threshold, result) = match &built {
                Ok(r) => (
                    r.graph().mindeg().unwrap_or(0),
                    r.threshold(),
                    check_canonical_degrees(r),
                ),
                Err(err) => (0, 0, Err(err.to_string())),
            };
            DegreeAuditRecord {
                name: e.name.clone(),
                n: e.graph.n(),
                a,
                mindeg,
                threshold,
                ok: result.is_ok(),
                detail: result.err(),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_examples() {
        let k23 = named_graph("complete_bipartite_2_3")
            .unwrap()
            .into_undirected()
            .unwrap();
        assert_eq!((k23.n(), k23.edge_count()), (5, 6));
        let p = named_graph("petersen").unwrap().into_undirected().unwrap();
        assert_eq!((p.n(), p.edge_count()), (10, 15));
        assert!(p.vertices().all(|v| p.degree(v) == 3));
        assert_eq!(
            named_graph("cycle_4").unwrap().into_undirected().unwrap(),
            cycle_graph(4)
        );
        let t = named_graph("tournament_7_3")
            .unwrap()
            .into_directed()
            .unwrap();
        assert_eq!(t.arc_count(), 21);
        assert_eq!(
            named_graph("bidirected_complete_3")
                .unwrap()
                .into_directed()
                .unwrap()
                .arc_count(),
            6
        );
        assert!(matches!(
            named_graph("dodecahedron"),
            Err(HarnessError::UnknownName(_))
        ));
        assert!(matches!(
            named_graph("cycle_x"),
            Err(HarnessError::UnknownName(_))
        ));
        assert!(matches!(
            named_graph("cycle_2"),
            Err(HarnessError::UnknownName(_))
        ));
    }

    #[test]
    fn generator_extremes() {
        assert_eq!(random_2connected_graph(5, 0.0, 9).unwrap(), cycle_graph(5));
        assert_eq!(
            random_2connected_graph(5, 1.0, 9).unwrap(),
            complete_graph(5)
        );
        let g = random_2connected_graph(8, 0.3, 42).unwrap();
        assert!(is_2connected_undirected(&g).unwrap().verdict);
        assert!(random_2connected_graph(2, 0.5, 1).is_err());
        assert!(random_2connected_graph(5, 1.5, 1).is_err());
    }

    #[test]
    fn generators_are_seeded() {
        assert_eq!(
            random_2connected_graph(8, 0.5, 7).unwrap(),
            random_2connected_graph(8, 0.5, 7).unwrap()
        );
        assert_eq!(random_tournament(6, 1), random_tournament(6, 1));
        assert_eq!(
            RandomSpec::desk(10, 5).generate(),
            RandomSpec::desk(10, 5).generate()
        );
    }

    #[test]
    fn named_small_roundtrip() {
        let corpus = Corpus::preset("named-small", 42).unwrap();
        let report =
            run_claim_roundtrip(&corpus, &GadgetParams::test(3), &SearchBudget::unlimited());
        assert!(report.all_ok(), "{}", report.to_tsv());
        let by_name = |n: &str| report.records.iter().find(|r| r.name == n).unwrap();
        assert_eq!(by_name("path_3").status, Status::Rejected);
        assert_eq!(by_name("petersen").hamiltonian, Some(Verdict::No));
        assert_eq!(by_name("petersen").reduced_verdict, Some(Verdict::No));
        assert_eq!(by_name("cycle_5").lift_ok, Some(true));
        assert_eq!(by_name("cycle_5").projection_ok, Some(true));
    }

    #[test]
    fn tsv_shape() {
        let corpus = Corpus {
            named: vec![CorpusEntry::new("cycle_4", cycle_graph(4))],
            random: None,
        };
        let report =
            run_claim_roundtrip(&corpus, &GadgetParams::test(3), &SearchBudget::unlimited())
                .without_timings();
        let tsv = report.to_tsv();
        let lines: Vec<_> = tsv.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(
            lines[1],
            "1\tcycle_4\t4\t4\ttrue\tchecked\tyes\t16\t40\t2\t8\tyes\ttrue\ttrue\t-\ttrue\ttrue"
        );
    }

    #[test]
    fn canonical_degree_audit() {
        let entries = vec![
            CorpusEntry::new("cycle_4", cycle_graph(4)),
            CorpusEntry::new("complete_5", complete_graph(5)),
        ];
        let audit = degree_audit(&entries, &[3, 4]);
        assert_eq!(audit.len(), 4);
        assert!(audit.iter().all(|r| r.ok), "{audit:?}");
    }
}
