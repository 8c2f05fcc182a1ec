//! Builds the edge-clique reduction of the 4-cycle at canonical parameters
//! and prints its size, degree classes and arc classification.

use longcycle::harness::cycle_graph;
use longcycle::{build_edge_clique_reduction, decision_threshold, degree_report, GadgetParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = cycle_graph(4);
    let r = build_edge_clique_reduction(&g, &GadgetParams::canonical(3))?;
    let h = r.graph();
    println!("G: n={} m={}", g.n(), g.edge_count());
    println!(
        "H: |V|={} |A|={} mindeg={} threshold={}",
        h.n(),
        h.arc_count(),
        h.mindeg()?,
        decision_threshold(&r)?
    );
    let report = degree_report(&r);
    println!("original vertices: {:?}", report.original);
    println!("attachment vertices: {:?}", report.chosen);
    println!("clique-internal vertices: {:?}", report.internal);
    for (kind, count) in r.classify_arcs()? {
        println!("{kind:?}: {count}");
    }
    Ok(())
}
