//! Export the placement model in LP format and read a solution back.
//!
//! `cargo run --example milp -- model.lp` writes the model; feed it to any
//! MILP solver and pass the solver's variable listing to `--place import`.

use std::env;
use std::fs;

use topocnot::arch::{all_pairs_distances, parse_architecture};
use topocnot::placer::{
    exhaustive_place, export_milp, import_solution, interaction_graph, objective, DEFAULT_EXHAUSTIVE_BOUND,
};
use topocnot::rewrite::decompose;

fn main() -> topocnot::Result<()> {
    let a: topocnot::gf2::BitMatrix = include_str!("../data/fixture.matrix").parse()?;
    let t = all_pairs_distances(&parse_architecture(include_str!("../data/t_graph.arch"))?)?;
    let ig = interaction_graph(&decompose(&a)?)?;

    let model = export_milp(&ig, &t)?;
    println!(
        "{} assignment variables, {} link variables, {} constraints",
        model.num_y(),
        model.num_z(),
        model.constraints.len()
    );
    if let Some(path) = env::args().nth(1) {
        fs::write(&path, model.to_lp_string())?;
        println!("wrote {path}");
    }

    // Stand in for a solver: list the y variables of the exhaustive optimum.
    let (best, cost) = exhaustive_place(&ig, &t, DEFAULT_EXHAUSTIVE_BOUND)?;
    let listing: String = (0..ig.n())
        .flat_map(|v| (0..t.n()).map(move |p| (v, p)))
        .map(|(v, p)| format!("y_{}_{} {}\n", v + 1, p + 1, u8::from(best.get(v) == p)))
        .collect();
    let imported = import_solution(&listing, &ig, &t)?;
    println!("imported placement objective {} (optimum {cost})", objective(&imported, &ig, &t)?);
    Ok(())
}
