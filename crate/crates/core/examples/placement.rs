//! Local search against the exhaustive optimum on random interaction graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use topocnot::arch::{all_pairs_distances, builtin_architecture};
use topocnot::placer::{
    exhaustive_place, local_search_place, InteractionGraph, LocalSearchParams, DEFAULT_EXHAUSTIVE_BOUND,
};

fn main() -> topocnot::Result<()> {
    let t = all_pairs_distances(&builtin_architecture("9q-square")?)?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let params = LocalSearchParams { k: 3, restarts: 10, ..Default::default() };
    let mut hits = 0;
    let trials = 20;
    for trial in 0..trials {
        let m = rng.gen_range(3..=6);
        let mut ig = InteractionGraph::new(m);
        for _ in 0..rng.gen_range(m..3 * m) {
            let u = rng.gen_range(0..m);
            let v = (u + rng.gen_range(1..m)) % m;
            ig.add(u, v)?;
        }
        let local = local_search_place(&ig, &t, &LocalSearchParams { seed: trial, ..params.clone() }, None)?;
        let local_cost = topocnot::placer::objective(&local, &ig, &t)?;
        let (_, best) = exhaustive_place(&ig, &t, DEFAULT_EXHAUSTIVE_BOUND)?;
        hits += usize::from(local_cost == best);
        println!("m={m} pairs={:>2} local={local_cost:>3} exhaustive={best:>3}", ig.num_pairs());
    }
    println!("local search optimal on {hits}/{trials}");
    Ok(())
}
