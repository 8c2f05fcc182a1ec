//! Compares the backtracking and Held-Karp Hamiltonicity solvers and finds
//! longest cycles of small bidirected graphs.

use longcycle::harness::{complete_bipartite, named_graph, petersen};
use longcycle::{
    hamiltonian_cycle_exact, hamiltonian_cycle_heldkarp, has_cycle_at_least, longest_cycle_exact,
    SearchBudget,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for name in [
        "petersen",
        "theta",
        "prism",
        "complete_bipartite_3_4",
        "cycle_9",
    ] {
        let g = named_graph(name)?.into_undirected()?;
        let bt = hamiltonian_cycle_exact(&g, SearchBudget::unlimited());
        let hk = hamiltonian_cycle_heldkarp(&g)?;
        println!(
            "{name}: backtracking={:?} held-karp={:?}",
            bt.verdict(),
            hk.verdict()
        );
    }
    for (name, d) in [
        ("bidirected Petersen", petersen().bidirected()),
        ("bidirected K_{2,3}", complete_bipartite(2, 3).bidirected()),
    ] {
        let longest = longest_cycle_exact(&d, SearchBudget::unlimited());
        let len = longest.cycle().map_or(0, |c| c.len());
        let next = has_cycle_at_least(&d, len + 1, SearchBudget::unlimited());
        println!(
            "{name}: longest cycle {len}, any cycle >= {}: {:?}",
            len + 1,
            next.verdict()
        );
    }
    Ok(())
}
