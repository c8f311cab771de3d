//! End-to-end compilation and the seeded random-circuit benchmark.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arch::{all_pairs_distances, builtin_architecture, ArchitectureGraph, DistanceTable};
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, CnotGate, ElementaryOp};
use crate::placer::{
    cost_unchecked, exhaustive_place, import_solution, interaction_graph, local_search_place, objective,
    LocalSearchParams, Placement, DEFAULT_EXHAUSTIVE_BOUND,
};
use crate::rewrite::{decompose, rewrite_optimize, Decomposition, OpSequence};
use crate::router::{route_circuit, verify_routed, Circuit, RoutedCircuit};
use crate::synth::{greedy_decompose, GreedyParams, Metric, Sides};

const AES_MIXCOLUMNS: &str = include_str!("../data/aes_mixcolumns.matrix");
const REFERENCE_RESULTS: &str = include_str!("../data/reference_results.csv");

/// The 32×32 GF(2) matrix of the AES MixColumns layer.
pub fn aes_mixcolumns() -> BitMatrix {
    AES_MIXCOLUMNS.parse().expect("shipped MixColumns matrix parses")
}

/// `n_gates` CNOTs with uniformly random distinct control and target.
pub fn random_circuit(n_qubits: usize, n_gates: usize, seed: u64) -> Result<Vec<CnotGate>> {
    if n_qubits < 2 {
        return Err(Error::InvalidParams(format!("random circuits need at least 2 qubits, got {n_qubits}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..n_gates)
        .map(|_| {
            let control = rng.gen_range(0..n_qubits);
            let mut target = rng.gen_range(0..n_qubits - 1);
            if target >= control {
                target += 1;
            }
            CnotGate::new(control, target)
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CompileInput {
    Matrix(BitMatrix),
    Circuit(Circuit),
}

impl CompileInput {
    /// Accepts either the matrix or the circuit text format.
    pub fn parse(text: &str) -> Result<Self> {
        let first =
            text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).find(|l| !l.is_empty()).unwrap_or("");
        if first.starts_with("matrix") {
            Ok(CompileInput::Matrix(text.parse()?))
        } else {
            Ok(CompileInput::Circuit(text.parse()?))
        }
    }

    pub fn matrix(&self) -> Result<BitMatrix> {
        match self {
            CompileInput::Matrix(m) => Ok(m.clone()),
            CompileInput::Circuit(c) => {
                let m = c.matrix()?;
                match &c.relabel {
                    Some(r) => r.permute_rows(&m),
                    None => Ok(m),
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlaceStrategy {
    Local,
    Exhaustive,
    /// Solution text from an external solver.
    Import(String),
}

/// Search over decompositions beyond Gauss–Jordan elimination.
#[derive(Clone, Debug, PartialEq)]
pub struct SynthesisOptions {
    /// Add greedy decompositions (one per [`Metric`]) to the candidates.
    pub greedy: bool,
    /// Placement-guided greedy rounds run after the initial candidates are
    /// placed. Only used with [`PlaceStrategy::Local`].
    pub refine_rounds: usize,
    /// Stop refining after this many rounds without a new best.
    pub patience: usize,
    /// A round's result replaces the current state when its cost is below
    /// `current · (1 + t)`, with `t` decaying linearly from this value to 0.
    pub temperature: f64,
}

impl Default for SynthesisOptions {
    fn default() -> Self {
        Self { greedy: true, refine_rounds: 96, patience: 32, temperature: 0.03 }
    }
}

impl SynthesisOptions {
    /// Gauss–Jordan elimination (and the input gate list) only.
    pub fn elimination_only() -> Self {
        Self { greedy: false, refine_rounds: 0, ..Self::default() }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CompileOptions {
    pub place: PlaceStrategy,
    pub search: LocalSearchParams,
    pub synthesis: SynthesisOptions,
    pub warm_start: Option<Placement>,
    pub emit_swaps: bool,
    pub exhaustive_bound: u128,
}

impl Default for CompileOptions {
    fn default() -> Self {
        Self {
            place: PlaceStrategy::Local,
            search: LocalSearchParams::default(),
            synthesis: SynthesisOptions::default(),
            warm_start: None,
            emit_swaps: false,
            exhaustive_bound: DEFAULT_EXHAUSTIVE_BOUND,
        }
    }
}

impl CompileOptions {
    /// Default budget for a device: 10 extra random starts on devices with
    /// at least 16 vertices.
    pub fn for_architecture(arch: &ArchitectureGraph) -> Self {
        let mut opts = Self::default();
        if arch.n() >= 16 {
            opts.search.restarts = 10;
        }
        opts
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompileStats {
    pub qubits: usize,
    /// Row additions in the chosen decomposition (the unconstrained cost).
    pub decomposition_length: usize,
    /// Shortest decomposition among all candidates tried.
    pub shortest_decomposition: usize,
    pub objective: usize,
    pub gates: usize,
    pub depth: usize,
    pub wall_time: Duration,
}

impl CompileStats {
    /// `key value` lines.
    pub fn to_text(&self, placement: &Placement) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "qubits {}", self.qubits);
        let _ = writeln!(out, "decomposition {}", self.decomposition_length);
        let _ = writeln!(out, "shortest_decomposition {}", self.shortest_decomposition);
        let _ = writeln!(out, "gates {}", self.gates);
        let _ = writeln!(out, "depth {}", self.depth);
        let _ = writeln!(out, "objective {}", self.objective);
        let image: Vec<String> = placement.assignment().iter().map(|p| (p + 1).to_string()).collect();
        let _ = writeln!(out, "placement {}", image.join(" "));
        let _ = writeln!(out, "wall_ms {:.3}", self.wall_time.as_secs_f64() * 1e3);
        out
    }
}

#[derive(Clone, Debug)]
pub struct CompileOutput {
    pub routed: RoutedCircuit,
    pub decomposition: Decomposition,
    pub stats: CompileStats,
}

/// A decomposition with its placement and, for greedy ones, where its row
/// additions end up.
#[derive(Clone)]
struct Candidate {
    decomposition: Decomposition,
    placement: Placement,
    cost: usize,
    row_labels: Option<Vec<usize>>,
}

/// Elimination of the matrix itself and, for circuit inputs, the rewritten
/// gate list.
fn base_decompositions(input: &CompileInput, a: &BitMatrix) -> Result<Vec<Decomposition>> {
    let mut out = vec![decompose(a)?];
    if let CompileInput::Circuit(c) = input {
        let seq: OpSequence = circuit_ops(&c.gates).into_iter().collect();
        let mut d = rewrite_optimize(&seq, c.n);
        if let Some(r) = &c.relabel {
            d.perm = r.then_matrix(&d.perm);
        }
        out.push(d);
    }
    Ok(out)
}

fn place(
    d: &Decomposition,
    t: &DistanceTable,
    opts: &CompileOptions,
    warm_start: Option<&Placement>,
    seed: u64,
) -> Result<(Placement, usize)> {
    let ig = interaction_graph(d)?;
    let placement = match &opts.place {
        PlaceStrategy::Local => {
            let params = LocalSearchParams { seed, ..opts.search.clone() };
            local_search_place(&ig, t, &params, warm_start.or(opts.warm_start.as_ref()))?
        }
        PlaceStrategy::Exhaustive => exhaustive_place(&ig, t, opts.exhaustive_bound)?.0,
        PlaceStrategy::Import(text) => import_solution(text, &ig, t)?,
    };
    let cost = objective(&placement, &ig, t)?;
    Ok((placement, cost))
}

const GREEDY_METRICS: [Metric; 3] = [Metric::Ones, Metric::Log, Metric::Square];

/// Places every candidate decomposition, then refines the cheapest one by
/// resynthesizing with costs taken from its placement.
fn search(input: &CompileInput, a: &BitMatrix, t: &DistanceTable, opts: &CompileOptions) -> Result<(Candidate, usize)> {
    let n = a.n();
    let seed = opts.search.seed;
    let imported = matches!(opts.place, PlaceStrategy::Import(_));
    let syn = &opts.synthesis;

    let mut pool: Vec<(Decomposition, Option<Vec<usize>>)> =
        base_decompositions(input, a)?.into_iter().map(|d| (d, None)).collect();
    // an imported placement belongs to the elimination decomposition
    if imported {
        pool.truncate(1);
    } else if syn.greedy {
        let unit = |_: usize, _: usize| 1;
        for metric in GREEDY_METRICS {
            let (d, labels) = greedy_decompose(a, &GreedyParams::new(Sides::Both, metric, &unit), None)?;
            pool.push((d, Some(labels)));
        }
    }
    let shortest = pool.iter().map(|(d, _)| d.seq.len()).min().unwrap_or(0);

    let mut best: Option<Candidate> = None;
    for (d, row_labels) in pool {
        let (placement, cost) = place(&d, t, opts, None, seed)?;
        if best.as_ref().is_none_or(|b| cost < b.cost) {
            best = Some(Candidate { decomposition: d, placement, cost, row_labels });
        }
    }
    let mut best = best.expect("at least one candidate");
    if !matches!(opts.place, PlaceStrategy::Local) || syn.refine_rounds == 0 || best.cost == 0 {
        return Ok((best, shortest));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5EED_CAFE);
    let mut current = best.clone();
    let mut stale = 0;
    let mut shortest = shortest;
    for round in 0..syn.refine_rounds {
        let guide = &current.placement;
        let cost = |i: usize, j: usize| cost_unchecked(t.dist(guide.get(i), guide.get(j)));
        let params = GreedyParams {
            row_labels: current.row_labels.as_deref(),
            cost_power: if round % 2 == 0 { 0.5 } else { 0.25 },
            ..GreedyParams::new(Sides::Both, Metric::Ones, &cost)
        };
        let (d, labels) = greedy_decompose(a, &params, Some(&mut rng))?;
        shortest = shortest.min(d.seq.len());
        let round_seed = seed.wrapping_add(round as u64 + 1);
        let (placement, c) = place(&d, t, opts, Some(&current.placement), round_seed)?;
        let slack = syn.temperature * (1.0 - round as f64 / syn.refine_rounds as f64);
        let candidate = Candidate { decomposition: d, placement, cost: c, row_labels: Some(labels) };
        if c < best.cost {
            best = candidate.clone();
            stale = 0;
        } else {
            stale += 1;
        }
        if (c as f64) < current.cost as f64 * (1.0 + slack) {
            current = candidate;
        }
        if stale >= syn.patience {
            break;
        }
    }
    debug_assert_eq!(n, best.decomposition.n());
    Ok((best, shortest))
}

/// Matrix → decomposition → placement → routing → verification.
///
/// Candidate decompositions are placed and the cheapest wins (earlier
/// candidates win ties). The routed circuit is always checked against the
/// input matrix before it is returned.
pub fn compile_pipeline(
    input: &CompileInput,
    arch: &ArchitectureGraph,
    opts: &CompileOptions,
) -> Result<CompileOutput> {
    let start = Instant::now();
    let a = input.matrix()?;
    if a.n() > arch.n() {
        return Err(Error::TooManyQubits { logical: a.n(), physical: arch.n() });
    }
    let t = all_pairs_distances(arch)?;

    let (best, shortest) = search(input, &a, &t, opts)?;
    let Candidate { decomposition, placement, cost: objective, .. } = best;

    let routed = route_circuit(&decomposition, &placement, &t, opts.emit_swaps)?;
    if !verify_routed(&routed, &a, &t)? {
        return Err(Error::VerificationFailed("routed circuit does not implement the input matrix".into()));
    }
    if !opts.emit_swaps && routed.gate_count() != objective {
        return Err(Error::VerificationFailed(format!(
            "gate count {} differs from placement objective {objective}",
            routed.gate_count()
        )));
    }
    let stats = CompileStats {
        qubits: a.n(),
        decomposition_length: decomposition.seq.len(),
        shortest_decomposition: shortest,
        objective,
        gates: routed.gate_count(),
        depth: routed.depth(),
        wall_time: start.elapsed(),
    };
    Ok(CompileOutput { routed, decomposition, stats })
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchConfig {
    pub architecture: String,
    pub counts: Vec<usize>,
    pub per_count: usize,
    pub seed: u64,
    /// Placement parameters; `None` uses [`CompileOptions::for_architecture`].
    pub search: Option<LocalSearchParams>,
    /// Decomposition search; `None` uses the default.
    pub synthesis: Option<SynthesisOptions>,
}

impl BenchConfig {
    pub fn new(architecture: impl Into<String>, counts: Vec<usize>) -> Self {
        Self { architecture: architecture.into(), counts, per_count: 20, seed: 0, search: None, synthesis: None }
    }

    fn validate(&self) -> Result<()> {
        if self.per_count == 0 {
            return Err(Error::InvalidParams("circuits per count must be at least 1".into()));
        }
        Ok(())
    }
}

/// Seed of circuit `index` in the `gates`-gate group.
pub fn circuit_seed(base: u64, gates: usize, index: usize) -> u64 {
    base.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add((gates as u64) << 20).wrapping_add(index as u64)
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub architecture: String,
    pub gates: usize,
    pub mean: f64,
    pub min: usize,
    pub max: usize,
    pub runtime_ms: f64,
    /// Joined reference columns, by column name.
    pub reference: BTreeMap<String, f64>,
}

impl BenchRow {
    /// `(steiner − mean) / steiner` in percent, when a steiner column is joined.
    pub fn pct_below_steiner(&self) -> Option<f64> {
        self.reference.get("steiner").map(|s| (s - self.mean) / s * 100.0)
    }
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

impl BenchReport {
    pub fn to_csv(&self) -> String {
        let ref_cols: Vec<String> = {
            let mut cols: Vec<String> = Vec::new();
            for row in &self.rows {
                for k in row.reference.keys() {
                    if !cols.contains(k) {
                        cols.push(k.clone());
                    }
                }
            }
            cols
        };
        let has_steiner = ref_cols.iter().any(|c| c == "steiner");
        let mut out = String::from("architecture,gates,mean,min,max,runtime_ms");
        for c in &ref_cols {
            out.push(',');
            out.push_str(c);
        }
        if has_steiner {
            out.push_str(",pct_below_steiner");
        }
        out.push('\n');
        for row in &self.rows {
            let _ = write!(
                out,
                "{},{},{:.2},{},{},{:.1}",
                row.architecture, row.gates, row.mean, row.min, row.max, row.runtime_ms
            );
            for c in &ref_cols {
                match row.reference.get(c) {
                    Some(v) => {
                        let _ = write!(out, ",{v}");
                    }
                    None => out.push(','),
                }
            }
            if has_steiner {
                match row.pct_below_steiner() {
                    Some(p) => {
                        let _ = write!(out, ",{p:.1}");
                    }
                    None => out.push(','),
                }
            }
            out.push('\n');
        }
        out
    }

    /// Joins reference values keyed by `(architecture, gates)`.
    pub fn join_reference(&mut self, reference: &ReferenceTable) {
        for row in &mut self.rows {
            if let Some(values) = reference.rows.get(&(row.architecture.clone(), row.gates)) {
                row.reference = values.clone();
            }
        }
    }
}

/// Published comparison numbers: `architecture,gates,<column>...` CSV.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ReferenceTable {
    pub columns: Vec<String>,
    pub rows: BTreeMap<(String, usize), BTreeMap<String, f64>>,
}

impl ReferenceTable {
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or_else(|| Error::parse(1, "empty reference table"))?;
        let header: Vec<String> = header.split(',').map(|s| s.trim().to_string()).collect();
        if header.len() < 2 || header[0] != "architecture" || header[1] != "gates" {
            return Err(Error::parse(1, "reference header must start with `architecture,gates`"));
        }
        let columns = header[2..].to_vec();
        let mut rows = BTreeMap::new();
        for (idx, line) in lines {
            let lineno = idx + 1;
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            if fields.len() != header.len() {
                return Err(Error::parse(lineno, format!("expected {} fields", header.len())));
            }
            let gates = fields[1].parse::<usize>().map_err(|_| Error::parse(lineno, "bad gate count"))?;
            let mut values = BTreeMap::new();
            for (name, field) in columns.iter().zip(&fields[2..]) {
                if field.is_empty() {
                    continue;
                }
                let v = field.parse::<f64>().map_err(|_| Error::parse(lineno, format!("bad value `{field}`")))?;
                values.insert(name.clone(), v);
            }
            rows.insert((fields[0].to_string(), gates), values);
        }
        Ok(Self { columns, rows })
    }

    /// The published comparison table shipped with the crate.
    pub fn published() -> Self {
        Self::parse(REFERENCE_RESULTS).expect("shipped reference table parses")
    }

    pub fn get(&self, architecture: &str, gates: usize, column: &str) -> Option<f64> {
        self.rows.get(&(architecture.to_string(), gates))?.get(column).copied()
    }
}

/// Compiles `per_count` seeded random circuits for every gate count and
/// aggregates routed gate counts. Circuits compile in parallel; results are
/// reduced in `(count, index)` order so the report does not depend on
/// scheduling.
pub fn bench_table(cfg: &BenchConfig) -> Result<BenchReport> {
    cfg.validate()?;
    let arch = builtin_architecture(&cfg.architecture)?;
    let mut opts = CompileOptions::for_architecture(&arch);
    if let Some(search) = &cfg.search {
        opts.search = search.clone();
    }
    if let Some(synthesis) = &cfg.synthesis {
        opts.synthesis = synthesis.clone();
    }
    let n = arch.n();

    let jobs: Vec<(usize, usize)> = cfg.counts.iter().flat_map(|&g| (0..cfg.per_count).map(move |i| (g, i))).collect();
    let results: Vec<Result<(usize, Duration)>> = jobs
        .par_iter()
        .map(|&(gates, index)| {
            let seed = circuit_seed(cfg.seed, gates, index);
            let run = || -> Result<(usize, Duration)> {
                let circuit = Circuit::new(n, random_circuit(n, gates, seed)?);
                let mut job_opts = opts.clone();
                job_opts.search.seed = seed;
                let out = compile_pipeline(&CompileInput::Circuit(circuit), &arch, &job_opts)?;
                Ok((out.stats.gates, out.stats.wall_time))
            };
            run().map_err(|e| Error::BenchCircuit { seed, source: Box::new(e) })
        })
        .collect();

    let mut rows = Vec::new();
    let mut it = results.into_iter();
    for &gates in &cfg.counts {
        let mut counts = Vec::with_capacity(cfg.per_count);
        let mut total_time = Duration::ZERO;
        for _ in 0..cfg.per_count {
            let (c, dt) = it.next().expect("one result per job")?;
            counts.push(c);
            total_time += dt;
        }
        rows.push(BenchRow {
            architecture: cfg.architecture.clone(),
            gates,
            mean: counts.iter().sum::<usize>() as f64 / counts.len() as f64,
            min: *counts.iter().min().unwrap(),
            max: *counts.iter().max().unwrap(),
            runtime_ms: total_time.as_secs_f64() * 1e3 / counts.len() as f64,
            reference: BTreeMap::new(),
        });
    }
    Ok(BenchReport { rows })
}

/// Elementary ops of a circuit in product order.
pub fn circuit_ops(gates: &[CnotGate]) -> Vec<ElementaryOp> {
    gates.iter().rev().map(CnotGate::as_op).collect()
}
