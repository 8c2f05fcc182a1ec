//! Long cycles above the minimum degree in directed graphs.
//!
//! Every digraph with minimum in/out-degree `d` has a cycle of length at
//! least `d + 1`, and [`solvers::mindeg_plus_one_cycle`] finds one in linear
//! time. Asking for `d + 3` is already NP-hard, even on 2-connected
//! digraphs: [`gadgets::build_edge_clique_reduction`] maps Undirected
//! Hamiltonian Cycle onto that question. This crate implements the
//! reduction, the maps that carry cycles across it in both directions, and
//! exact solvers and connectivity checks that verify it on small instances.
//!
//! Modules:
//!
//! * [`graph`]: directed and undirected graphs, minimum degree, cycle validation
//! * [`connectivity`]: strong connectivity, 2-connectivity, Menger path counts
//! * [`gadgets`]: the edge-clique and vertex-clique constructions, lifting and projection
//! * [`solvers`]: Hamiltonicity, threshold and longest-cycle search
//! * [`harness`]: graph catalog, seeded generators, corpus verification
//! * [`formats`]: graph files, cycle files, mapping sidecars
//! * [`cli`]: the `longcycle` command

pub mod cli;
pub mod connectivity;
pub mod formats;
pub mod gadgets;
pub mod graph;
pub mod harness;
pub mod solvers;

pub use connectivity::{
    is_2connected_digraph, is_2connected_undirected, is_strongly_connected, menger_count,
    menger_count_up_to,
};
pub use gadgets::{
    build_edge_clique_reduction, build_vertex_clique_construction, decision_threshold,
    degree_report, lift_hamiltonian_cycle, project_long_cycle, GadgetError, GadgetParams,
    ReductionInstance,
};
pub use graph::{validate_cycle, Cycle, CycleError, Digraph, GraphError, UGraph, Vertex};
pub use solvers::{
    hamiltonian_cycle_exact, hamiltonian_cycle_heldkarp, has_cycle_at_least, longest_cycle_exact,
    mindeg_plus_one_cycle, SearchBudget, SolveOutcome,
};
