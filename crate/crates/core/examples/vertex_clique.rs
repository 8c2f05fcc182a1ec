//! The vertex-clique construction: a digraph is Hamiltonian iff the
//! construction has a cycle of length at least n.

use longcycle::harness::directed_cycle;
use longcycle::{build_vertex_clique_construction, has_cycle_at_least, Digraph, SearchBudget};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let two_way_path = Digraph::from_arcs(5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 4), (2, 1)])?;
    for (name, d) in [
        ("directed C5", directed_cycle(5)),
        ("two-way path", two_way_path),
    ] {
        let h2 = build_vertex_clique_construction(&d)?;
        let g = h2.graph();
        let long = has_cycle_at_least(g, h2.threshold(), SearchBudget::unlimited());
        println!(
            "{name}: |V(H2)|={} mindeg={} cycle >= {}: {:?}",
            g.n(),
            g.mindeg()?,
            h2.threshold(),
            long.verdict()
        );
    }
    Ok(())
}
