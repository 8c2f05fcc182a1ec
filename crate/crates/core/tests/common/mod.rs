//! Brute-force oracles shared by the integration tests. None of them call
//! into the library's solvers or connectivity code.
#![allow(dead_code)]

use longcycle::{Digraph, UGraph};

/// Heap's algorithm over vertices 2..=n with vertex 1 fixed first.
pub fn brute_force_hamiltonian(g: &UGraph) -> bool {
    let n = g.n();
    if n < 3 {
        return false;
    }
    let mut rest: Vec<usize> = (2..=n).collect();
    let check = |perm: &[usize]| {
        let mut prev = 1;
        for &v in perm {
            if !g.has_edge(prev, v) {
                return false;
            }
            prev = v;
        }
        g.has_edge(prev, 1)
    };
    let k = rest.len();
    let mut c = vec![0; k];
    if check(&rest) {
        return true;
    }
    let mut i = 0;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                rest.swap(0, i);
            } else {
                rest.swap(c[i], i);
            }
            if check(&rest) {
                return true;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    false
}

/// Length of the longest directed cycle: the largest subset `S` whose
/// induced subgraph has a Hamiltonian cycle, decided per subset by a path DP
/// anchored at the smallest member of `S`.
pub fn brute_force_longest_cycle(d: &Digraph) -> usize {
    let n = d.n();
    assert!(n <= 12);
    // paths[mask][v]: a path from lowest(mask) through exactly mask ending at v
    let mut paths = vec![0u16; 1 << n];
    for s in 0..n {
        paths[1 << s] = 1 << s;
    }
    let mut best = 0;
    for mask in 1usize..1 << n {
        let low = mask.trailing_zeros() as usize;
        let ends = paths[mask];
        for v in 0..n {
            if ends & (1 << v) == 0 {
                continue;
            }
            let size = mask.count_ones() as usize;
            if size >= 2 && d.has_arc(v + 1, low + 1) {
                best = best.max(size);
            }
            for w in low + 1..n {
                if mask & (1 << w) == 0 && d.has_arc(v + 1, w + 1) {
                    paths[mask | 1 << w] |= 1 << w;
                }
            }
        }
    }
    best
}

pub fn reachable_all(d: &Digraph, removed: Option<usize>) -> bool {
    let alive: Vec<usize> = d.vertices().filter(|&v| Some(v) != removed).collect();
    alive.iter().all(|&s| {
        let mut seen = vec![false; d.n() + 1];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in d.out_neighbors(v) {
                if Some(w) != removed && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        alive.iter().all(|&t| seen[t])
    })
}

pub fn brute_force_2connected_digraph(d: &Digraph) -> bool {
    reachable_all(d, None) && d.vertices().all(|w| reachable_all(d, Some(w)))
}

pub fn brute_force_2connected_undirected(g: &UGraph) -> bool {
    brute_force_2connected_digraph(&g.bidirected())
}

/// Whether `d` has a simple cycle of length at least `min_len`, by plain
/// depth-first enumeration of simple paths from each root through larger
/// vertices only.
pub fn brute_force_has_cycle_at_least(d: &Digraph, min_len: usize) -> bool {
    fn extend(
        d: &Digraph,
        root: usize,
        v: usize,
        len: usize,
        min_len: usize,
        on: &mut [bool],
    ) -> bool {
        for &w in d.out_neighbors(v) {
            if w == root && len >= min_len {
                return true;
            }
            if w > root && !on[w] {
                on[w] = true;
                let hit = extend(d, root, w, len + 1, min_len, on);
                on[w] = false;
                if hit {
                    return true;
                }
            }
        }
        false
    }
    let mut on = vec![false; d.n() + 1];
    d.vertices().any(|root| {
        on[root] = true;
        let hit = extend(d, root, root, 1, min_len, &mut on);
        on[root] = false;
        hit
    })
}
