//! Digraph 2-connectivity with counterexamples, cross-checked by Menger
//! path counts.

use longcycle::harness::{complete_bipartite, directed_cycle};
use longcycle::{
    build_edge_clique_reduction, is_2connected_digraph, menger_count, Digraph, GadgetParams,
};

fn show(name: &str, d: &Digraph) -> Result<(), Box<dyn std::error::Error>> {
    let w = is_2connected_digraph(d)?;
    println!(
        "{name}: 2-connected={} counterexample={:?}",
        w.verdict, w.counterexample
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    show("directed C3", &directed_cycle(3))?;
    show("bidirected K_{2,3}", &complete_bipartite(2, 3).bidirected())?;

    let r = build_edge_clique_reduction(&complete_bipartite(2, 3), &GadgetParams::canonical(3))?;
    let h = r.graph();
    show("H(K_{2,3})", h)?;
    for (u, v) in [(1, 2), (3, h.n()), (h.n(), 1)] {
        println!("  disjoint paths {u} -> {v}: {}", menger_count(h, u, v)?);
    }
    Ok(())
}
