//! Strong connectivity and 2-connectivity.
//!
//! A digraph is 2-connected when every ordered pair of vertices is joined by
//! two internally vertex-disjoint directed paths. By Menger this is the same
//! as being strongly connected with no single vertex whose removal breaks
//! strong connectivity, which is what [`is_2connected_digraph`] tests.
//! Such vertices (strong articulation points) are found with dominator trees:
//! apart from the root `r`, they are exactly the non-trivial dominators of the
//! flow graphs rooted at `r` in the digraph and in its reverse.
//! [`menger_count`] computes the path count directly by max-flow and is kept
//! as an independent cross-check.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::{Digraph, UGraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConnectivityError {
    #[error("2-connectivity needs at least 3 vertices, got {0}")]
    TooSmall(usize),
    #[error("source and target are the same vertex {0}")]
    SameVertex(Vertex),
    #[error("vertex {vertex} is out of range 1..={n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
}

/// Evidence that a graph is not 2-connected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Counterexample {
    /// Removing this vertex disconnects the graph (or, for digraphs, breaks
    /// strong connectivity).
    CutVertex(Vertex),
    /// An ordered pair joined by fewer than two disjoint paths.
    Pair {
        from: Vertex,
        to: Vertex,
        paths: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConnectivityWitness {
    pub verdict: bool,
    pub counterexample: Option<Counterexample>,
}

impl ConnectivityWitness {
    fn yes() -> Self {
        Self {
            verdict: true,
            counterexample: None,
        }
    }

    fn no(c: Counterexample) -> Self {
        Self {
            verdict: false,
            counterexample: Some(c),
        }
    }
}

impl Counterexample {
    /// Re-derives the counterexample from scratch on a digraph.
    pub fn recheck_digraph(&self, d: &Digraph) -> bool {
        match *self {
            Counterexample::CutVertex(w) => !strongly_connected_avoiding(d, Some(w)),
            Counterexample::Pair { from, to, paths } => {
                menger_count(d, from, to).is_ok_and(|k| k == paths && k < 2)
            }
        }
    }

    /// Re-derives the counterexample from scratch on an undirected graph.
    pub fn recheck_undirected(&self, g: &UGraph) -> bool {
        match *self {
            Counterexample::CutVertex(w) => !is_connected(&g.without_vertex(w)),
            Counterexample::Pair { from, to, .. } => !reachable_undirected(g, from)[to],
        }
    }
}

/// Marks the vertices reachable from `start` along arcs (`forward`) or
/// against them, never entering `avoid`.
fn reach(d: &Digraph, start: Vertex, avoid: Option<Vertex>, forward: bool) -> Vec<bool> {
    let mut seen = vec![false; d.n() + 1];
    if let Some(w) = avoid {
        seen[w] = true;
    }
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        let next = if forward {
            d.out_neighbors(v)
        } else {
            d.in_neighbors(v)
        };
        for &w in next {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    if let Some(w) = avoid {
        seen[w] = false;
    }
    seen
}

/// First vertex (other than `avoid`) missing from `seen`.
fn first_unmarked(seen: &[bool], avoid: Option<Vertex>) -> Option<Vertex> {
    (1..seen.len()).find(|&v| !seen[v] && Some(v) != avoid)
}

fn strongly_connected_avoiding(d: &Digraph, avoid: Option<Vertex>) -> bool {
    let Some(root) = d.vertices().find(|&v| Some(v) != avoid) else {
        return true;
    };
    first_unmarked(&reach(d, root, avoid, true), avoid).is_none()
        && first_unmarked(&reach(d, root, avoid, false), avoid).is_none()
}

/// Whether every ordered pair of vertices is joined by a directed path.
/// The empty graph is not considered strongly connected.
pub fn is_strongly_connected(d: &Digraph) -> bool {
    d.n() > 0 && strongly_connected_avoiding(d, None)
}

/// Checks digraph 2-connectivity by deleting each vertex in turn.
///
/// A failing verdict reports either an ordered pair with no path at all (when
/// the digraph is not strongly connected) or the smallest-id vertex whose
/// removal breaks strong connectivity.
pub fn is_2connected_digraph(d: &Digraph) -> Result<ConnectivityWitness, ConnectivityError> {
    if d.n() < 3 {
        return Err(ConnectivityError::TooSmall(d.n()));
    }
    let fwd = reach(d, 1, None, true);
    if let Some(v) = first_unmarked(&fwd, None) {
        return Ok(ConnectivityWitness::no(Counterexample::Pair {
            from: 1,
            to: v,
            paths: 0,
        }));
    }
    let bwd = reach(d, 1, None, false);
    if let Some(v) = first_unmarked(&bwd, None) {
        return Ok(ConnectivityWitness::no(Counterexample::Pair {
            from: v,
            to: 1,
            paths: 0,
        }));
    }
    let mut cut = vec![false; d.n() + 1];
    cut[1] = !strongly_connected_avoiding(d, Some(1));
    mark_nontrivial_dominators(d, 1, true, &mut cut);
    mark_nontrivial_dominators(d, 1, false, &mut cut);
    Ok(match (1..=d.n()).find(|&w| cut[w]) {
        Some(w) => ConnectivityWitness::no(Counterexample::CutVertex(w)),
        None => ConnectivityWitness::yes(),
    })
}

/// Marks every vertex other than `root` that is the immediate dominator of
/// some vertex in the flow graph rooted at `root` (arcs reversed unless
/// `forward`). Assumes every vertex is reachable from `root`. Uses the
/// iterative Cooper-Harvey-Kennedy scheme over reverse postorder.
fn mark_nontrivial_dominators(d: &Digraph, root: Vertex, forward: bool, cut: &mut [bool]) {
    let n = d.n();
    let succ = |v: Vertex| {
        if forward {
            d.out_neighbors(v)
        } else {
            d.in_neighbors(v)
        }
    };
    let pred = |v: Vertex| {
        if forward {
            d.in_neighbors(v)
        } else {
            d.out_neighbors(v)
        }
    };

    // postorder numbers from an iterative DFS
    let mut post = vec![usize::MAX; n + 1];
    let mut order = Vec::with_capacity(n);
    let mut visited = vec![false; n + 1];
    visited[root] = true;
    let mut stack: Vec<(Vertex, usize)> = vec![(root, 0)];
    while let Some(&mut (v, ref mut next)) = stack.last_mut() {
        if let Some(&w) = succ(v).get(*next) {
            *next += 1;
            if !visited[w] {
                visited[w] = true;
                stack.push((w, 0));
            }
        } else {
            post[v] = order.len();
            order.push(v);
            stack.pop();
        }
    }

    const UNSET: usize = usize::MAX;
    let mut idom = vec![UNSET; n + 1];
    idom[root] = root;
    let intersect = |idom: &[usize], mut a: Vertex, mut b: Vertex| {
        while a != b {
            while post[a] < post[b] {
                a = idom[a];
            }
            while post[b] < post[a] {
                b = idom[b];
            }
        }
        a
    };
    let mut changed = true;
    while changed {
        changed = false;
        for &v in order.iter().rev().skip(1) {
            let mut new = UNSET;
            for &p in pred(v) {
                if idom[p] == UNSET {
                    continue;
                }
                new = if new == UNSET {
                    p
                } else {
                    intersect(&idom, p, new)
                };
            }
            if new != idom[v] {
                idom[v] = new;
                changed = true;
            }
        }
    }
    for &v in &order {
        if v != root && idom[v] != root {
            cut[idom[v]] = true;
        }
    }
}

fn reachable_undirected(g: &UGraph, start: Vertex) -> Vec<bool> {
    let mut seen = vec![false; g.n() + 1];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen
}

fn is_connected(g: &UGraph) -> bool {
    g.n() == 0 || first_unmarked(&reachable_undirected(g, 1), None).is_none()
}

/// Articulation vertices of a connected graph, via DFS low-points.
fn articulation_points(g: &UGraph) -> Vec<Vertex> {
    let n = g.n();
    let mut disc = vec![0usize; n + 1];
    let mut low = vec![0usize; n + 1];
    let mut is_cut = vec![false; n + 1];
    let mut timer = 1;
    // (vertex, parent, next neighbor index)
    let mut stack: Vec<(Vertex, Vertex, usize)> = vec![(1, 0, 0)];
    disc[1] = timer;
    low[1] = timer;
    let mut root_children = 0;
    while let Some(&mut (v, parent, ref mut next)) = stack.last_mut() {
        if let Some(&w) = g.neighbors(v).get(*next) {
            *next += 1;
            if disc[w] == 0 {
                timer += 1;
                disc[w] = timer;
                low[w] = timer;
                if v == 1 {
                    root_children += 1;
                }
                stack.push((w, v, 0));
            } else if w != parent {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if parent != 0 {
                low[parent] = low[parent].min(low[v]);
                if parent != 1 && low[v] >= disc[parent] {
                    is_cut[parent] = true;
                }
            }
        }
    }
    if root_children > 1 {
        is_cut[1] = true;
    }
    (1..=n).filter(|&v| is_cut[v]).collect()
}

/// Undirected 2-connectivity: connected and free of articulation vertices.
pub fn is_2connected_undirected(g: &UGraph) -> Result<ConnectivityWitness, ConnectivityError> {
    if g.n() < 3 {
        return Err(ConnectivityError::TooSmall(g.n()));
    }
    if let Some(v) = first_unmarked(&reachable_undirected(g, 1), None) {
        return Ok(ConnectivityWitness::no(Counterexample::Pair {
            from: 1,
            to: v,
            paths: 0,
        }));
    }
    Ok(match articulation_points(g).first() {
        Some(&w) => ConnectivityWitness::no(Counterexample::CutVertex(w)),
        None => ConnectivityWitness::yes(),
    })
}

/// Unit-capacity residual network used by [`menger_count`], stored as a
/// flat adjacency array. Edge `2i` is the `i`-th input edge and `2i + 1` its
/// reverse.
struct FlowNetwork {
    head: Vec<usize>,
    cap: Vec<u32>,
    start: Vec<usize>,
    adj: Vec<usize>,
}

impl FlowNetwork {
    fn new(nodes: usize, edges: &[(usize, usize)]) -> Self {
        let mut head = Vec::with_capacity(2 * edges.len());
        let mut cap = Vec::with_capacity(2 * edges.len());
        let mut start = vec![0usize; nodes + 1];
        for &(from, to) in edges {
            head.extend([to, from]);
            cap.extend([1, 0]);
            start[from + 1] += 1;
            start[to + 1] += 1;
        }
        for i in 0..nodes {
            start[i + 1] += start[i];
        }
        let mut fill = start.clone();
        let mut adj = vec![0usize; 2 * edges.len()];
        for (i, &(from, to)) in edges.iter().enumerate() {
            adj[fill[from]] = 2 * i;
            fill[from] += 1;
            adj[fill[to]] = 2 * i + 1;
            fill[to] += 1;
        }
        Self {
            head,
            cap,
            start,
            adj,
        }
    }

    fn nodes(&self) -> usize {
        self.start.len() - 1
    }

    /// One BFS augmentation of a single unit; false when none exists.
    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let mut via = vec![usize::MAX; self.nodes()];
        let mut seen = vec![false; self.nodes()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            for &e in &self.adj[self.start[x]..self.start[x + 1]] {
                let y = self.head[e];
                if self.cap[e] > 0 && !seen[y] {
                    seen[y] = true;
                    via[y] = e;
                    queue.push_back(y);
                }
            }
        }
        if !seen[sink] {
            return false;
        }
        let mut x = sink;
        while x != source {
            let e = via[x];
            self.cap[e] -= 1;
            self.cap[e ^ 1] += 1;
            x = self.head[e ^ 1];
        }
        true
    }
}

/// Maximum number of internally vertex-disjoint directed paths from `u` to
/// `v`. Each vertex is split into an in-node and an out-node joined by a
/// unit-capacity edge; an arc `(u, v)` itself counts as one path.
pub fn menger_count(d: &Digraph, u: Vertex, v: Vertex) -> Result<usize, ConnectivityError> {
    menger_count_up_to(d, u, v, usize::MAX)
}

/// [`menger_count`] that stops once `cap` disjoint paths are found. Deciding
/// "at least two paths" on large graphs needs only two augmentations.
pub fn menger_count_up_to(
    d: &Digraph,
    u: Vertex,
    v: Vertex,
    cap: usize,
) -> Result<usize, ConnectivityError> {
    let n = d.n();
    for w in [u, v] {
        if w == 0 || w > n {
            return Err(ConnectivityError::VertexOutOfRange { vertex: w, n });
        }
    }
    if u == v {
        return Err(ConnectivityError::SameVertex(u));
    }
    let node_in = |x: Vertex| 2 * (x - 1);
    let node_out = |x: Vertex| 2 * (x - 1) + 1;
    let edges: Vec<(usize, usize)> = d
        .vertices()
        .filter(|&x| x != u && x != v)
        .map(|x| (node_in(x), node_out(x)))
        .chain(d.arcs().map(|(x, y)| (node_out(x), node_in(y))))
        .collect();
    let mut net = FlowNetwork::new(2 * n, &edges);
    let (source, sink) = (node_out(u), node_in(v));
    let mut flow = 0;
    while flow < cap && net.augment(source, sink) {
        flow += 1;
    }
    Ok(flow)
}
