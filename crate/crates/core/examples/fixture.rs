//! Walk the five-qubit example through every stage: decomposition,
//! interaction graph, placement, routing and verification.

use topocnot::arch::{all_pairs_distances, parse_architecture};
use topocnot::placer::{exhaustive_place, interaction_graph, DEFAULT_EXHAUSTIVE_BOUND};
use topocnot::rewrite::{decompose, verify_decomposition};
use topocnot::router::{route_circuit, verify_routed};

fn main() -> topocnot::Result<()> {
    let a: topocnot::gf2::BitMatrix = include_str!("../data/fixture.matrix").parse()?;
    let arch = parse_architecture(include_str!("../data/t_graph.arch"))?;
    let t = all_pairs_distances(&arch)?;

    let d = decompose(&a)?;
    assert!(verify_decomposition(&a, &d)?);
    println!("decomposition ({} row additions):\n{d}", d.seq.len());

    let ig = interaction_graph(&d)?;
    for ((u, v), w) in ig.pairs() {
        println!("interaction {}-{} x{w}", u + 1, v + 1);
    }

    let (p, cost) = exhaustive_place(&ig, &t, DEFAULT_EXHAUSTIVE_BOUND)?;
    println!("\noptimal placement (objective {cost}):\n{p}");

    let routed = route_circuit(&d, &p, &t, false)?;
    println!(
        "routed: {} gates, depth {}, verified {}",
        routed.gate_count(),
        routed.depth(),
        verify_routed(&routed, &a, &t)?
    );
    print!("{}", routed.to_circuit());
    Ok(())
}
