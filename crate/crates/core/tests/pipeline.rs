mod common;

use topocnot::arch::builtin_architecture;
use topocnot::pipeline::{
    bench_table, compile_pipeline, random_circuit, BenchConfig, CompileInput, CompileOptions, SynthesisOptions,
};
use topocnot::router::Circuit;

fn strip_runtime(cfg: &BenchConfig) -> Vec<(usize, String, usize, usize)> {
    bench_table(cfg).unwrap().rows.into_iter().map(|r| (r.gates, format!("{:.6}", r.mean), r.min, r.max)).collect()
}

#[test]
fn bench_is_reproducible() {
    let mut cfg = BenchConfig::new("ibm-q20-tokyo", vec![4, 16]);
    cfg.per_count = 5;
    cfg.seed = 9;
    assert_eq!(strip_runtime(&cfg), strip_runtime(&cfg));
    let mut other = cfg.clone();
    other.seed = 10;
    assert_ne!(strip_runtime(&cfg), strip_runtime(&other));
}

#[test]
fn bench_means_grow_with_gate_count() {
    let mut cfg = BenchConfig::new("9q-square", vec![3, 10, 30]);
    cfg.synthesis = Some(SynthesisOptions { refine_rounds: 8, ..Default::default() });
    let means: Vec<f64> = bench_table(&cfg).unwrap().rows.iter().map(|r| r.mean).collect();
    assert!(means.windows(2).all(|w| w[0] <= w[1]), "{means:?}");
}

#[test]
fn synthesis_search_never_loses_to_elimination() {
    let arch = builtin_architecture("16q-square").unwrap();
    for seed in 0..6 {
        let gates = random_circuit(12, 40, seed).unwrap();
        let input = CompileInput::Circuit(Circuit::new(12, gates));
        let mut base = CompileOptions::for_architecture(&arch);
        base.search.seed = seed;
        base.synthesis = SynthesisOptions::elimination_only();
        let mut full = base.clone();
        full.synthesis = SynthesisOptions { refine_rounds: 16, ..Default::default() };

        let a = compile_pipeline(&input, &arch, &base).unwrap();
        let b = compile_pipeline(&input, &arch, &full).unwrap();
        assert!(b.stats.gates <= a.stats.gates, "seed {seed}: {} > {}", b.stats.gates, a.stats.gates);
        assert!(common::routed_implements(&b.routed, &input.matrix().unwrap(), &arch));
    }
}

#[test]
fn compile_is_deterministic() {
    let arch = builtin_architecture("grid-3x4").unwrap();
    let input = CompileInput::Circuit(Circuit::new(10, random_circuit(10, 30, 4).unwrap()));
    let opts = CompileOptions {
        synthesis: SynthesisOptions { refine_rounds: 12, ..Default::default() },
        ..Default::default()
    };
    let a = compile_pipeline(&input, &arch, &opts).unwrap();
    let b = compile_pipeline(&input, &arch, &opts).unwrap();
    assert_eq!(a.routed, b.routed);
}

#[test]
fn fewer_logical_than_physical_qubits() {
    let arch = builtin_architecture("ibm-q20-tokyo").unwrap();
    let input = CompileInput::Circuit(Circuit::new(7, random_circuit(7, 25, 1).unwrap()));
    let out = compile_pipeline(&input, &arch, &CompileOptions::for_architecture(&arch)).unwrap();
    assert_eq!(out.routed.n_physical, 20);
    assert!(common::routed_implements(&out.routed, &input.matrix().unwrap(), &arch));
}
