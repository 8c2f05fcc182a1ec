//! Lifts a Hamiltonian cycle of the prism into the reduced digraph, then
//! projects it back.

use longcycle::harness::prism;
use longcycle::{
    build_edge_clique_reduction, hamiltonian_cycle_exact, lift_hamiltonian_cycle,
    project_long_cycle, validate_cycle, GadgetParams, SearchBudget,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = prism();
    let r = build_edge_clique_reduction(&g, &GadgetParams::canonical(3))?;
    let ham = hamiltonian_cycle_exact(&g, SearchBudget::unlimited());
    let c = ham.cycle().ok_or("the prism is Hamiltonian")?;
    println!("Hamiltonian cycle of G: {c}");

    let lifted = lift_hamiltonian_cycle(&r, c)?;
    validate_cycle(r.graph(), lifted.vertices())?;
    println!("lifted cycle in H (length {} = 2n): {lifted}", lifted.len());

    let back = project_long_cycle(&r, &lifted)?;
    println!("projected back: {back}");
    println!("same up to rotation: {}", back.same_up_to_rotation(c));
    Ok(())
}
