//! Builtin devices, their distance tables and shortest paths.

use topocnot::arch::{all_pairs_distances, builtin_architecture, BUILTIN_NAMES};

fn main() -> topocnot::Result<()> {
    for name in BUILTIN_NAMES.iter().copied().chain(["line-11", "grid-4x8"]) {
        let g = builtin_architecture(name)?;
        let t = all_pairs_distances(&g)?;
        println!("{name:>14}: {:>2} qubits, {:>2} couplings, diameter {}", g.n(), g.num_edges(), t.max_distance());
    }

    let g = builtin_architecture("16q-square")?;
    let t = all_pairs_distances(&g)?;
    println!("\n16q-square distances from qubit 1:");
    for r in 0..4 {
        let row: Vec<String> = (0..4).map(|c| t.dist(0, 4 * r + c).to_string()).collect();
        println!("  {}", row.join(" "));
    }
    let path: Vec<String> = t.shortest_path(0, 15)?.iter().map(|v| (v + 1).to_string()).collect();
    println!("path 1 -> 16: {}", path.join(" - "));

    print!("\nibm-q20-tokyo in file form:\n{}", builtin_architecture("ibm-q20-tokyo")?);
    Ok(())
}
