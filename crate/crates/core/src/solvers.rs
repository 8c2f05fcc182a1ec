//! Exact cycle solvers.
//!
//! Everything here is exhaustive search with cheap pruning, meant for
//! desk-scale instances. Neighbors are always tried in increasing id order,
//! so witnesses are reproducible. Running out of budget produces
//! [`SolveOutcome::Unknown`], never a wrong verdict.

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::graph::{validate_cycle, Cycle, CycleHost, Digraph, UGraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("Held-Karp supports at most {max} vertices, got {n}")]
    TooLarge { n: usize, max: usize },
    #[error("minimum degree is zero; no cycle is guaranteed")]
    MindegZero,
}

/// Limits on a search. Exceeding either yields [`SolveOutcome::Unknown`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchBudget {
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn nodes(limit: u64) -> Self {
        Self {
            node_limit: Some(limit),
            time_limit: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Found(Cycle),
    NotFound,
    Unknown,
}

impl SolveOutcome {
    pub fn cycle(&self) -> Option<&Cycle> {
        match self {
            SolveOutcome::Found(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SolveOutcome::Found(_))
    }

    pub fn is_conclusive(&self) -> bool {
        !matches!(self, SolveOutcome::Unknown)
    }

    /// `Some(true)` for Found, `Some(false)` for NotFound, `None` otherwise.
    pub fn verdict(&self) -> Option<bool> {
        match self {
            SolveOutcome::Found(_) => Some(true),
            SolveOutcome::NotFound => Some(false),
            SolveOutcome::Unknown => None,
        }
    }
}

struct Exhausted;

/// Search-node counter enforcing a [`SearchBudget`].
struct Meter {
    budget: SearchBudget,
    started: Instant,
    nodes: u64,
}

impl Meter {
    fn new(budget: SearchBudget) -> Self {
        Self {
            budget,
            started: Instant::now(),
            nodes: 0,
        }
    }

    fn tick(&mut self) -> Result<(), Exhausted> {
        self.nodes += 1;
        if self
            .budget
            .node_limit
            .is_some_and(|limit| self.nodes > limit)
        {
            return Err(Exhausted);
        }
        if self.nodes.is_multiple_of(1024)
            && self
                .budget
                .time_limit
                .is_some_and(|limit| self.started.elapsed() > limit)
        {
            return Err(Exhausted);
        }
        Ok(())
    }
}

fn found<H: CycleHost>(host: &H, seq: &[Vertex]) -> SolveOutcome {
    SolveOutcome::Found(validate_cycle(host, seq).expect("solver produced an invalid cycle"))
}

struct HamSearch<'a> {
    g: &'a UGraph,
    on_path: Vec<bool>,
    path: Vec<Vertex>,
    meter: Meter,
}

impl HamSearch<'_> {
    /// Neighbors of unvisited `w` that a completion could still use: other
    /// unvisited vertices, the path tail, and the start (for the closing edge).
    fn available_degree(&self, w: Vertex, tail: Vertex, start: Vertex) -> usize {
        self.g
            .neighbors(w)
            .iter()
            .filter(|&&x| !self.on_path[x] || x == tail || x == start)
            .count()
    }

    /// Returns the vertices the tail is forced to step to next, or `None`
    /// when the partial path provably cannot be completed.
    fn feasible_next(&self) -> Option<Vec<Vertex>> {
        let n = self.g.n();
        let tail = *self.path.last().unwrap();
        let start = self.path[0];
        let mut forced = Vec::new();
        for w in 1..=n {
            if self.on_path[w] {
                continue;
            }
            let deg = self.available_degree(w, tail, start);
            if deg < 2 {
                return None;
            }
            // w must use both its remaining edges; if one goes to the tail,
            // the tail's only free edge is spoken for
            if deg == 2 && self.path.len() > 1 && self.g.has_edge(w, tail) {
                forced.push(w);
            }
        }
        if forced.len() > 1 {
            return None;
        }
        // unvisited vertices must all be reachable from the tail through
        // unvisited vertices
        let mut seen = self.on_path.clone();
        let mut stack = vec![tail];
        let mut reached = 0;
        while let Some(v) = stack.pop() {
            for &w in self.g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        if reached != n - self.path.len() {
            return None;
        }
        Some(forced)
    }

    fn extend(&mut self) -> Result<bool, Exhausted> {
        self.meter.tick()?;
        let n = self.g.n();
        let tail = *self.path.last().unwrap();
        if self.path.len() == n {
            return Ok(self.g.has_edge(tail, self.path[0]));
        }
        let Some(forced) = self.feasible_next() else {
            return Ok(false);
        };
        let candidates: Vec<Vertex> = if forced.is_empty() {
            self.g
                .neighbors(tail)
                .iter()
                .copied()
                .filter(|&w| !self.on_path[w])
                .collect()
        } else {
            forced
        };
        for w in candidates {
            self.on_path[w] = true;
            self.path.push(w);
            if self.extend()? {
                return Ok(true);
            }
            self.path.pop();
            self.on_path[w] = false;
        }
        Ok(false)
    }
}

/// Decides Hamiltonicity of an undirected graph by backtracking from vertex
/// 1, pruning on vertices left with fewer than two usable edges, on edges
/// forced by degree-2 vertices, and on a disconnected unvisited region.
pub fn hamiltonian_cycle_exact(g: &UGraph, budget: SearchBudget) -> SolveOutcome {
    let n = g.n();
    if n < 3 {
        return SolveOutcome::NotFound;
    }
    let mut search = HamSearch {
        g,
        on_path: vec![false; n + 1],
        path: vec![1],
        meter: Meter::new(budget),
    };
    search.on_path[1] = true;
    match search.extend() {
        Ok(true) => found(g, &search.path),
        Ok(false) => SolveOutcome::NotFound,
        Err(Exhausted) => SolveOutcome::Unknown,
    }
}

pub const HELD_KARP_MAX: usize = 20;

/// Held-Karp subset dynamic program. `reach[mask]` is the set of endpoints
/// `v` such that some path starts at vertex 1, visits exactly `mask`, and
/// ends at `v`. Vertex `i` is bit `i - 1`.
pub fn hamiltonian_cycle_heldkarp(g: &UGraph) -> Result<SolveOutcome, SolverError> {
    let n = g.n();
    if n > HELD_KARP_MAX {
        return Err(SolverError::TooLarge {
            n,
            max: HELD_KARP_MAX,
        });
    }
    if n < 3 {
        return Ok(SolveOutcome::NotFound);
    }
    let adj: Vec<u32> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << (w - 1)))
        .collect();
    let full = (1u32 << n) - 1;
    let mut reach = vec![0u32; 1 << n];
    reach[1] = 1;
    for mask in 1..=full {
        if mask & 1 == 0 {
            continue;
        }
        let ends = reach[mask as usize];
        if ends == 0 {
            continue;
        }
        let mut rest = ends;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut next = adj[v] & !mask;
            while next != 0 {
                let w = next.trailing_zeros();
                next &= next - 1;
                reach[(mask | 1 << w) as usize] |= 1 << w;
            }
        }
    }
    let closing = reach[full as usize] & adj[0];
    if closing == 0 {
        return Ok(SolveOutcome::NotFound);
    }
    // walk back from the smallest closing endpoint
    let mut path = Vec::with_capacity(n);
    let mut mask = full;
    let mut end = closing.trailing_zeros();
    loop {
        path.push(end as usize + 1);
        if mask == 1 {
            break;
        }
        let prev_mask = mask & !(1 << end);
        let candidates = reach[prev_mask as usize] & adj[end as usize];
        end = candidates.trailing_zeros();
        mask = prev_mask;
    }
    path.reverse();
    Ok(found(g, &path))
}

/// Depth-first search over simple directed paths rooted at `root`, visiting
/// only vertices with id greater than `root`, so every cycle is explored
/// from its smallest vertex.
struct CycleSearch<'a> {
    d: &'a Digraph,
    root: Vertex,
    on_path: Vec<bool>,
    path: Vec<Vertex>,
    meter: Meter,
    scratch: Vec<u64>,
    stamp: u64,
}

impl<'a> CycleSearch<'a> {
    fn new(d: &'a Digraph, meter: Meter) -> Self {
        Self {
            d,
            root: 0,
            on_path: vec![false; d.n() + 1],
            path: Vec::new(),
            meter,
            scratch: vec![0; d.n() + 1],
            stamp: 0,
        }
    }

    fn usable(&self, w: Vertex) -> bool {
        w > self.root && !self.on_path[w]
    }

    /// Upper bound on how many more vertices a cycle closing back at the
    /// root can pick up: unused vertices reachable from the tail that can
    /// also reach the root, both through unused vertices only.
    fn extension_bound(&mut self) -> usize {
        let tail = *self.path.last().unwrap();
        self.stamp += 2;
        let fwd = self.stamp - 1;
        let both = self.stamp;
        let mut stack = vec![tail];
        let mut forward_set = Vec::new();
        while let Some(v) = stack.pop() {
            for &w in self.d.out_neighbors(v) {
                if self.usable(w) && self.scratch[w] < fwd {
                    self.scratch[w] = fwd;
                    forward_set.push(w);
                    stack.push(w);
                }
            }
        }
        // backward from the root, restricted to the forward set
        let mut count = 0;
        stack.push(self.root);
        while let Some(v) = stack.pop() {
            for &w in self.d.in_neighbors(v) {
                if self.scratch[w] == fwd {
                    self.scratch[w] = both;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count
    }

    fn closes(&self) -> bool {
        let tail = *self.path.last().unwrap();
        self.path.len() >= 2 && self.d.has_arc(tail, self.root)
    }

    /// Looks for a cycle through the root of length at least `target`.
    fn find_at_least(&mut self, target: usize) -> Result<bool, Exhausted> {
        self.meter.tick()?;
        if self.path.len() >= target && self.closes() {
            return Ok(true);
        }
        if self.path.len() + self.extension_bound() < target {
            return Ok(false);
        }
        let tail = *self.path.last().unwrap();
        let d = self.d;
        for &w in d.out_neighbors(tail) {
            if !self.usable(w) {
                continue;
            }
            self.on_path[w] = true;
            self.path.push(w);
            if self.find_at_least(target)? {
                return Ok(true);
            }
            self.path.pop();
            self.on_path[w] = false;
        }
        Ok(false)
    }

    /// Records in `best` every strictly longer cycle through the root.
    fn find_longest(&mut self, best: &mut Option<Vec<Vertex>>) -> Result<(), Exhausted> {
        self.meter.tick()?;
        let best_len = best.as_ref().map_or(1, Vec::len);
        if self.path.len() > best_len && self.closes() {
            *best = Some(self.path.clone());
        }
        let best_len = best.as_ref().map_or(1, Vec::len);
        if self.path.len() + self.extension_bound() <= best_len {
            return Ok(());
        }
        let tail = *self.path.last().unwrap();
        let d = self.d;
        for &w in d.out_neighbors(tail) {
            if !self.usable(w) {
                continue;
            }
            self.on_path[w] = true;
            self.path.push(w);
            self.find_longest(best)?;
            self.path.pop();
            self.on_path[w] = false;
        }
        Ok(())
    }

    fn reset_root(&mut self, root: Vertex) {
        self.root = root;
        self.path.clear();
        self.path.push(root);
        self.on_path.iter_mut().for_each(|b| *b = false);
        self.on_path[root] = true;
    }
}

/// Decides whether `d` has a simple cycle of length at least `min_len`.
///
/// Cycles are enumerated by their smallest vertex; a branch is cut as soon as
/// the current path plus [`CycleSearch::extension_bound`] falls short.
pub fn has_cycle_at_least(d: &Digraph, min_len: usize, budget: SearchBudget) -> SolveOutcome {
    let min_len = min_len.max(2);
    let n = d.n();
    if min_len > n {
        return SolveOutcome::NotFound;
    }
    let mut search = CycleSearch::new(d, Meter::new(budget));
    for root in 1..=n {
        // the cycle uses only ids root..=n
        if n - root + 1 < min_len {
            break;
        }
        search.reset_root(root);
        match search.find_at_least(min_len) {
            Ok(true) => return found(d, &search.path),
            Ok(false) => {}
            Err(Exhausted) => return SolveOutcome::Unknown,
        }
    }
    SolveOutcome::NotFound
}

/// Finds a longest simple cycle of `d` by branch and bound.
/// `NotFound` means `d` is acyclic.
pub fn longest_cycle_exact(d: &Digraph, budget: SearchBudget) -> SolveOutcome {
    let n = d.n();
    let mut search = CycleSearch::new(d, Meter::new(budget));
    let mut best: Option<Vec<Vertex>> = None;
    for root in 1..=n {
        let best_len = best.as_ref().map_or(1, Vec::len);
        if n - root < best_len {
            break;
        }
        search.reset_root(root);
        if search.find_longest(&mut best).is_err() {
            return SolveOutcome::Unknown;
        }
    }
    match best {
        Some(c) => found(d, &c),
        None => SolveOutcome::NotFound,
    }
}

/// Returns a cycle of length at least `mindeg(d) + 1` in linear time.
///
/// Grows a path from vertex 1, always stepping to the smallest out-neighbor
/// not yet on the path. Once the tail has no such neighbor, all of its
/// out-neighbors lie on the path; closing at the earliest of them yields a
/// cycle holding the tail and every one of its out-neighbors.
pub fn mindeg_plus_one_cycle(d: &Digraph) -> Result<Cycle, SolverError> {
    if d.n() == 0 || d.mindeg().unwrap_or(0) == 0 {
        return Err(SolverError::MindegZero);
    }
    let mut position = vec![usize::MAX; d.n() + 1];
    let mut path = vec![1];
    position[1] = 0;
    loop {
        let tail = *path.last().unwrap();
        let outs = d.out_neighbors(tail);
        match outs.iter().find(|&&w| position[w] == usize::MAX) {
            Some(&w) => {
                position[w] = path.len();
                path.push(w);
            }
            None => {
                let first = outs
                    .iter()
                    .map(|&w| position[w])
                    .min()
                    .expect("outdeg >= 1");
                return Ok(validate_cycle(d, &path[first..]).expect("closing arc exists"));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn directed_cycle(n: usize) -> Digraph {
        Digraph::from_arcs(n, (1..=n).map(|v| (v, v % n + 1))).unwrap()
    }

    fn cycle_graph(n: usize) -> UGraph {
        UGraph::from_edges(n, (1..=n).map(|v| (v, v % n + 1))).unwrap()
    }

    fn k23() -> UGraph {
        UGraph::from_edges(5, [(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]).unwrap()
    }

    fn complete(n: usize) -> UGraph {
        let mut b = UGraph::builder(n);
        for u in 1..=n {
            for v in u + 1..=n {
                b.add_edge(u, v).unwrap();
            }
        }
        b.build()
    }

    #[test]
    fn hamiltonian_examples() {
        let out = hamiltonian_cycle_exact(&cycle_graph(5), SearchBudget::unlimited());
        assert_eq!(out.cycle().unwrap().vertices(), &[1, 2, 3, 4, 5]);
        assert_eq!(
            hamiltonian_cycle_exact(&k23(), SearchBudget::unlimited()),
            SolveOutcome::NotFound
        );
        assert!(hamiltonian_cycle_exact(&complete(6), SearchBudget::unlimited()).is_found());
    }

    #[test]
    fn held_karp_examples() {
        assert!(hamiltonian_cycle_heldkarp(&complete(4)).unwrap().is_found());
        assert_eq!(
            hamiltonian_cycle_heldkarp(&k23()),
            Ok(SolveOutcome::NotFound)
        );
        let c21 = cycle_graph(21);
        assert_eq!(
            hamiltonian_cycle_heldkarp(&c21),
            Err(SolverError::TooLarge { n: 21, max: 20 })
        );
        let c = hamiltonian_cycle_heldkarp(&cycle_graph(7)).unwrap();
        assert_eq!(c.cycle().unwrap().len(), 7);
    }

    #[test]
    fn threshold_search_on_directed_cycle() {
        let c6 = directed_cycle(6);
        let out = has_cycle_at_least(&c6, 6, SearchBudget::unlimited());
        assert_eq!(out.cycle().unwrap().len(), 6);
        assert_eq!(
            has_cycle_at_least(&c6, 7, SearchBudget::unlimited()),
            SolveOutcome::NotFound
        );
    }

    #[test]
    fn budget_exhaustion_is_unknown() {
        let d = complete(12).bidirected();
        // no cycle longer than n exists, but proving it takes more than 5 nodes
        assert_eq!(
            has_cycle_at_least(&d, 12, SearchBudget::nodes(5)),
            SolveOutcome::Unknown
        );
        let petersen_like = k23().bidirected();
        assert_eq!(
            longest_cycle_exact(&petersen_like, SearchBudget::nodes(1)),
            SolveOutcome::Unknown
        );
    }

    #[test]
    fn longest_cycle_examples() {
        let out = longest_cycle_exact(&directed_cycle(5), SearchBudget::unlimited());
        assert_eq!(out.cycle().unwrap().len(), 5);
        let out = longest_cycle_exact(&k23().bidirected(), SearchBudget::unlimited());
        assert_eq!(out.cycle().unwrap().len(), 4);
        let dag = Digraph::from_arcs(3, [(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(
            longest_cycle_exact(&dag, SearchBudget::unlimited()),
            SolveOutcome::NotFound
        );
        let two = Digraph::from_arcs(3, [(1, 2), (2, 1), (2, 3)]).unwrap();
        assert_eq!(
            longest_cycle_exact(&two, SearchBudget::unlimited())
                .cycle()
                .unwrap()
                .vertices(),
            &[1, 2]
        );
    }

    #[test]
    fn mindeg_cycle_examples() {
        let k5 = complete(5).bidirected();
        assert!(mindeg_plus_one_cycle(&k5).unwrap().len() >= 5);
        let c = mindeg_plus_one_cycle(&directed_cycle(7)).unwrap();
        assert_eq!(c.len(), 7);
        let sink = Digraph::from_arcs(3, [(1, 2), (2, 3), (3, 1), (1, 3)]).unwrap();
        assert_eq!(mindeg_plus_one_cycle(&sink).unwrap().len(), 3);
        let dead_end = Digraph::from_arcs(3, [(1, 2), (2, 1), (2, 3)]).unwrap();
        assert_eq!(
            mindeg_plus_one_cycle(&dead_end),
            Err(SolverError::MindegZero)
        );
    }
}
