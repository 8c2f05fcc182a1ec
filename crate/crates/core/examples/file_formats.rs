//! Graph files, cycle files and the mapping sidecar.

use longcycle::formats::{parse_cycle, parse_graph, write_cycle, write_ugraph, Mapping};
use longcycle::harness::cycle_graph;
use longcycle::{build_edge_clique_reduction, GadgetParams, ReductionInstance};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = cycle_graph(4);
    let text = write_ugraph(&g);
    print!("{text}");
    let back = parse_graph(&text)?.into_undirected()?;
    println!("round trip equal: {}", back == g);

    let cycle = write_cycle(&[1, 2, 3, 4]);
    println!("cycle file: {}", cycle.trim_end());
    println!("parsed: {:?}", parse_cycle(&cycle)?);

    let r = build_edge_clique_reduction(&g, &GadgetParams::test(3))?;
    let json = Mapping::of(&r).to_json();
    println!("{}", json.lines().take(12).collect::<Vec<_>>().join("\n"));
    let m = Mapping::from_json(&json)?;
    let rebuilt =
        ReductionInstance::from_parts(r.graph().clone(), m.role_table()?, m.source_n, m.params())?;
    println!("sidecar rebuilds the instance: {}", rebuilt == r);
    Ok(())
}
