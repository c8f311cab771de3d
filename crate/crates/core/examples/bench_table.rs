//! Reproduce the random-circuit comparison table.
//!
//! `cargo run --release --example bench_table -- [arch] [per_count]`

use std::env;

use topocnot::pipeline::{bench_table, BenchConfig, ReferenceTable};

fn main() -> topocnot::Result<()> {
    let args: Vec<String> = env::args().skip(1).collect();
    let archs: Vec<String> = match args.first() {
        Some(a) => vec![a.clone()],
        None => vec!["9q-square".into(), "16q-square".into(), "ibm-q20-tokyo".into()],
    };
    let per_count = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(20);
    let reference = ReferenceTable::published();

    for arch in archs {
        let counts: Vec<usize> = reference.rows.keys().filter(|(a, _)| *a == arch).map(|(_, g)| *g).collect();
        let mut cfg = BenchConfig::new(arch, counts);
        cfg.per_count = per_count;
        let mut report = bench_table(&cfg)?;
        report.join_reference(&reference);
        print!("{}", report.to_csv());
    }
    Ok(())
}
