use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use topocnot::arch::{all_pairs_distances, builtin_architecture, parse_architecture, ArchitectureGraph};
use topocnot::pipeline::{
    bench_table, compile_pipeline, random_circuit, BenchConfig, CompileInput, CompileOptions, PlaceStrategy,
    ReferenceTable,
};
use topocnot::placer::{export_milp, import_solution, interaction_graph, InteractionGraph};
use topocnot::rewrite::decompose;
use topocnot::router::Circuit;
use topocnot::{Error, Result};

#[derive(Parser)]
#[command(name = "topocnot", version, about = "Compile CNOT circuits onto constrained coupling graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compile a matrix or circuit file for a device.
    Compile(CompileArgs),
    /// Compile seeded random circuits and report mean routed gate counts.
    Bench(BenchArgs),
    /// Print a seeded random CNOT circuit.
    Random(RandomArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Place {
    Local,
    Exhaustive,
    Import,
}

#[derive(Args)]
#[group(id = "device", required = true, multiple = false)]
struct Device {
    /// Builtin device: 9q-square, 16q-square, ibm-q20-tokyo, line-<n>, grid-<r>x<c>.
    #[arg(long, group = "device")]
    arch: Option<String>,
    /// Device file (`qubits n` then `edge u v` lines).
    #[arg(long, group = "device")]
    arch_file: Option<PathBuf>,
}

#[derive(Args)]
struct CompileArgs {
    #[command(flatten)]
    device: Device,
    /// Matrix (`matrix n`) or circuit (`qubits n`) file.
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "local")]
    place: Place,
    /// Solver output to read with `--place import`.
    #[arg(long, required_if_eq("place", "import"))]
    solution: Option<PathBuf>,
    /// Vertices permuted together per local-search move.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Extra random local-search starts.
    #[arg(long)]
    restarts: Option<usize>,
    /// Starting placement (`assign <logical> <physical>` lines).
    #[arg(long)]
    warm_start: Option<PathBuf>,
    /// Realise the output permutation with gates instead of relabelling.
    #[arg(long)]
    emit_swaps: bool,
    /// Placement-guided resynthesis rounds (0 disables).
    #[arg(long)]
    refine_rounds: Option<usize>,
    /// Write the placement model of the elimination decomposition in LP format.
    #[arg(long)]
    export_milp: Option<PathBuf>,
    /// Output circuit file; stdout when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Write `key value` statistics here instead of stderr.
    #[arg(long)]
    stats: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long)]
    arch: String,
    /// Comma-separated gate counts; defaults to the reference rows for the device.
    #[arg(long, value_delimiter = ',')]
    counts: Vec<usize>,
    #[arg(long, default_value_t = 20)]
    per_count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Reference CSV to join; the bundled published numbers otherwise.
    #[arg(long)]
    reference: Option<PathBuf>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct RandomArgs {
    #[arg(long)]
    qubits: usize,
    #[arg(long)]
    gates: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn device(d: &Device) -> Result<ArchitectureGraph> {
    match (&d.arch, &d.arch_file) {
        (Some(name), _) => builtin_architecture(name),
        (_, Some(path)) => parse_architecture(&read(path)?),
        _ => unreachable!("clap requires one device"),
    }
}

fn compile(args: CompileArgs) -> Result<()> {
    let arch = device(&args.device)?;
    let input = CompileInput::parse(&read(&args.input)?)?;
    let mut opts = CompileOptions::for_architecture(&arch);
    opts.search.seed = args.seed;
    if let Some(k) = args.k {
        opts.search.k = k;
    }
    if let Some(r) = args.restarts {
        opts.search.restarts = r;
    }
    if let Some(r) = args.refine_rounds {
        opts.synthesis.refine_rounds = r;
    }
    opts.emit_swaps = args.emit_swaps;
    opts.place = match args.place {
        Place::Local => PlaceStrategy::Local,
        Place::Exhaustive => PlaceStrategy::Exhaustive,
        Place::Import => PlaceStrategy::Import(read(args.solution.as_deref().expect("required by clap"))?),
    };

    let needs_table = args.warm_start.is_some() || args.export_milp.is_some();
    if needs_table {
        let t = all_pairs_distances(&arch)?;
        let a = input.matrix()?;
        if let Some(path) = &args.warm_start {
            opts.warm_start = Some(import_solution(&read(path)?, &InteractionGraph::new(a.n()), &t)?);
        }
        if let Some(path) = &args.export_milp {
            let model = export_milp(&interaction_graph(&decompose(&a)?)?, &t)?;
            emit(Some(path), &model.to_lp_string())?;
        }
    }

    let out = compile_pipeline(&input, &arch, &opts)?;
    emit(args.output.as_deref(), &out.routed.to_circuit().to_string())?;
    let stats = out.stats.to_text(&out.routed.placement);
    match &args.stats {
        Some(path) => emit(Some(path), &stats),
        None => {
            eprint!("{stats}");
            Ok(())
        }
    }
}

fn bench(args: BenchArgs) -> Result<()> {
    let reference = match &args.reference {
        Some(path) => ReferenceTable::parse(&read(path)?)?,
        None => ReferenceTable::published(),
    };
    let counts = if args.counts.is_empty() {
        reference.rows.keys().filter(|(a, _)| *a == args.arch).map(|(_, g)| *g).collect()
    } else {
        args.counts
    };
    if counts.is_empty() {
        return Err(Error::InvalidParams(format!("no gate counts given for `{}`", args.arch)));
    }
    let mut cfg = BenchConfig::new(args.arch, counts);
    cfg.per_count = args.per_count;
    cfg.seed = args.seed;
    let mut report = bench_table(&cfg)?;
    report.join_reference(&reference);
    emit(args.output.as_deref(), &report.to_csv())
}

fn random(args: RandomArgs) -> Result<()> {
    let gates = random_circuit(args.qubits, args.gates, args.seed)?;
    emit(args.output.as_deref(), &Circuit::new(args.qubits, gates).to_string())
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::VerificationFailed(_) => 3,
        Error::BenchCircuit { source, .. } => exit_code(source),
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Compile(args) => compile(args),
        Command::Bench(args) => bench(args),
        Command::Random(args) => random(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
