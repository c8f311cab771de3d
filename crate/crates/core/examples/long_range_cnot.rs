//! Long-range CNOTs along a line: gate counts, depth and net effect.

use topocnot::arch::{all_pairs_distances, builtin_architecture};
use topocnot::gf2::circuit_matrix;
use topocnot::placer::cost_s;
use topocnot::router::{circuit_depth, expand_long_cnot};

fn main() -> topocnot::Result<()> {
    let t = all_pairs_distances(&builtin_architecture("line-11")?)?;
    for d in 1..=10 {
        let gates = expand_long_cnot(&t.shortest_path(0, d)?, &t)?;
        let m = circuit_matrix(&gates, 11)?;
        let changed: Vec<usize> = (0..11).filter(|&r| m.row_weight(r) != 1 || !m.get(r, r)).map(|r| r + 1).collect();
        println!(
            "d={d:>2}: {:>2} gates (cost {:>2}), depth {:>2}, rows changed {:?}",
            gates.len(),
            cost_s(d)?,
            circuit_depth(&gates, 11),
            changed
        );
    }
    let gates = expand_long_cnot(&t.shortest_path(0, 3)?, &t)?;
    let shown: Vec<String> = gates.iter().map(ToString::to_string).collect();
    println!("\ndistance 3: {}", shown.join(", "));
    Ok(())
}
