//! Gauss-Jordan elimination against greedy row/column synthesis on random
//! invertible matrices.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use topocnot::gf2::BitMatrix;
use topocnot::rewrite::decompose;
use topocnot::synth::{greedy_decompose, GreedyParams, Metric, Sides};

fn random_invertible(n: usize, rng: &mut ChaCha8Rng) -> BitMatrix {
    let mut m = BitMatrix::identity(n);
    for _ in 0..4 * n * n {
        let t = rng.gen_range(0..n);
        let s = (t + rng.gen_range(1..n)) % n;
        m.xor_row_into(t, s);
    }
    m
}

fn main() -> topocnot::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let unit = |_: usize, _: usize| 1;
    println!("  n  elimination  ones  log  square");
    for n in [4, 8, 12, 16, 24, 32] {
        let a = random_invertible(n, &mut rng);
        let gj = decompose(&a)?.seq.len();
        let mut lens = Vec::new();
        for metric in [Metric::Ones, Metric::Log, Metric::Square] {
            let (d, _) = greedy_decompose(&a, &GreedyParams::new(Sides::Both, metric, &unit), None)?;
            assert_eq!(d.product()?, a);
            lens.push(d.seq.len());
        }
        println!("{n:>3}  {gj:>11}  {:>4}  {:>3}  {:>6}", lens[0], lens[1], lens[2]);
    }
    Ok(())
}
