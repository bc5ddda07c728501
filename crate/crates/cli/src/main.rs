//! `ramsey`: graph lists that are mostly k-Ramsey, adjacency oracles on
//! polynomial indices, lexicographic products, and van der Waerden
//! 2-colorings, all from the command line.
//!
//! Reports go to stdout as single JSON documents; graphs and colorings use
//! their text formats. stderr carries diagnostics only. Graph vertices are
//! 0-based; van der Waerden colorings live on the 1-based set {1..n}.
//!
//! Exit codes: 0 success / property holds; 1 property fails (not Ramsey,
//! invalid coloring, sweep or resampling exhausted); 2 usage or parse
//! error; 3 resource cap exceeded.

use clap::{Args, Parser, Subcommand};
use ramsey_core::io::GraphForm;
use ramsey_core::list::ListMode;
use ramsey_core::sampler::PolyIndex;
use ramsey_core::vdw::PModel;
use ramsey_core::{Error, Graph};
use serde_json::json;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "ramsey",
    version,
    about = "Lists of mostly k-Ramsey graphs and friends"
)]
struct Cli {
    /// Worker threads for parallel stages (0 = available parallelism)
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Materialize one graph from the polynomial sample space
    SampleGraph(SampleGraphArgs),
    /// Check whether a graph file is k-Ramsey
    Check(CheckArgs),
    /// Build a list of graphs and check every item
    BuildList(BuildListArgs),
    /// Answer one adjacency query from an index without materializing
    Oracle(OracleArgs),
    /// Lexicographic product of graph files
    Product(ProductArgs),
    /// Van der Waerden colorings
    #[command(subcommand)]
    Vdw(VdwCommand),
    /// Print the derived parameters for an (n, k) pair
    Params(ParamsArgs),
}

#[derive(Args)]
struct SampleGraphArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// Derive the index from this seed's expansion
    #[arg(long, conflicts_with = "index", required_unless_present = "index")]
    seed: Option<u64>,
    /// Use this exact index (lowercase hex)
    #[arg(long)]
    index: Option<String>,
    /// Write the graph here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output form: bits or edges
    #[arg(long, default_value = "bits")]
    form: String,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long)]
    k: usize,
    /// Graph file to check
    #[arg(long)]
    graph: PathBuf,
}

#[derive(Args)]
struct BuildListArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// poly-exhaustive, poly-sampled, smallbias, or expander
    #[arg(long)]
    mode: String,
    #[arg(long)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Omit per-item records from the report
    #[arg(long)]
    summary: bool,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    index: String,
    #[arg(long)]
    u: usize,
    #[arg(long)]
    v: usize,
}

#[derive(Args)]
struct ProductArgs {
    /// Factor graph files, multiplied left to right
    #[arg(long, num_args = 1.., required = true)]
    graphs: Vec<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output form: bits or edges
    #[arg(long, default_value = "bits")]
    form: String,
}

#[derive(Subcommand)]
enum VdwCommand {
    /// Produce a 2-coloring of {1..n} with no monochromatic k-AP
    Color(VdwColorArgs),
    /// Try seeds 0,1,2,... and report the first that colors successfully
    Sweep(VdwSweepArgs),
    /// Verify a coloring file against k
    Verify(VdwVerifyArgs),
}

#[derive(Args)]
struct VdwColorArgs {
    #[arg(long)]
    k: usize,
    /// Domain size (defaults to the threshold for k)
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Resampling cap
    #[arg(long, default_value_t = 1_000_000)]
    cap: u64,
}

#[derive(Args)]
struct VdwSweepArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    max_seeds: u64,
    /// Resampling cap per seed
    #[arg(long, default_value_t = 1_000_000)]
    cap: u64,
}

#[derive(Args)]
struct VdwVerifyArgs {
    #[arg(long)]
    k: usize,
    /// Coloring file to verify
    #[arg(long)]
    file: PathBuf,
}

#[derive(Args)]
struct ParamsArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
}

/// Exit code 1: the checked property does not hold.
const EXIT_PROPERTY_FAILS: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_GUARD: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global()
        {
            eprintln!("ramsey: could not configure {} workers: {e}", cli.jobs);
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("ramsey: {err}");
            let code = match err {
                Error::Guard(_) => EXIT_GUARD,
                Error::Domain(_) | Error::Parse(_) => EXIT_USAGE,
            };
            ExitCode::from(code)
        }
    }
}

fn run(command: Command) -> Result<u8, Error> {
    match command {
        Command::SampleGraph(args) => sample_graph(args),
        Command::Check(args) => check(args),
        Command::BuildList(args) => build_list(args),
        Command::Oracle(args) => oracle(args),
        Command::Product(args) => product(args),
        Command::Vdw(VdwCommand::Color(args)) => vdw_color(args),
        Command::Vdw(VdwCommand::Sweep(args)) => vdw_sweep(args),
        Command::Vdw(VdwCommand::Verify(args)) => vdw_verify(args),
        Command::Params(args) => params(args),
    }
}

fn read_file(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

fn write_output(text: &str, out: Option<&Path>) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn sample_graph(args: SampleGraphArgs) -> Result<u8, Error> {
    let params = ramsey_core::params_for(args.n, args.k, None)?;
    let index = match (&args.index, args.seed) {
        (Some(hex), _) => PolyIndex::from_hex(hex, &params)?,
        (None, Some(seed)) => ramsey_core::index_from_bits(
            &ramsey_core::expand_seed(seed, params.index_bits()),
            &params,
        )?,
        (None, None) => unreachable!("clap enforces one of --seed/--index"),
    };
    eprintln!("index_hex: {}", index.to_hex(&params));
    let graph = ramsey_core::materialize(&index, &params)?;
    let form: GraphForm = args.form.parse()?;
    write_output(&ramsey_core::emit_graph(&graph, form), args.out.as_deref())?;
    Ok(0)
}

fn check(args: CheckArgs) -> Result<u8, Error> {
    let graph = ramsey_core::parse_graph(&read_file(&args.graph)?)?;
    let verdict = ramsey_core::is_k_ramsey(&graph, args.k)?;
    let doc = json!({
        "n": graph.n(),
        "k": args.k,
        "is_ramsey": verdict.is_ramsey,
        "witness_kind": verdict.witness_kind,
        "witness": verdict.witness,
    });
    println!("{doc}");
    Ok(if verdict.is_ramsey {
        0
    } else {
        EXIT_PROPERTY_FAILS
    })
}

fn build_list(args: BuildListArgs) -> Result<u8, Error> {
    let mode: ListMode = args.mode.parse()?;
    let mut report = ramsey_core::build_list(args.n, args.k, mode, args.count, args.seed)?;
    if args.summary {
        report = ramsey_core::list::summarize(report);
    }
    println!("{}", report.to_json());
    Ok(0)
}

fn oracle(args: OracleArgs) -> Result<u8, Error> {
    let params = ramsey_core::params_for(args.n, args.k, None)?;
    let index = PolyIndex::from_hex(&args.index, &params)?;
    let bit = ramsey_core::oracle_query(&index, &params, args.u, args.v)?;
    let doc = json!({
        "n": args.n,
        "k": args.k,
        "index_hex": args.index,
        "u": args.u,
        "v": args.v,
        "bit": if bit { 1 } else { 0 },
    });
    println!("{doc}");
    Ok(0)
}

fn product(args: ProductArgs) -> Result<u8, Error> {
    let factors = args
        .graphs
        .iter()
        .map(|p| ramsey_core::parse_graph(&read_file(p)?))
        .collect::<Result<Vec<Graph>, Error>>()?;
    let prod = ramsey_core::multi_product(&factors)?;
    let form: GraphForm = args.form.parse()?;
    write_output(&ramsey_core::emit_graph(&prod, form), args.out.as_deref())?;
    Ok(0)
}

fn vdw_domain(k: usize, n: Option<usize>) -> Result<usize, Error> {
    match n {
        Some(n) => Ok(n),
        None => ramsey_core::gh_threshold(k),
    }
}

fn vdw_color(args: VdwColorArgs) -> Result<u8, Error> {
    let n = vdw_domain(args.k, args.n)?;
    let (coloring, stats) = ramsey_core::moser_tardos(n, args.k, args.seed, args.cap)?;
    if stats.success {
        eprintln!("colored {{1..{n}}} after {} resamples", stats.resamples);
        print!("{}", ramsey_core::vdw::emit_coloring(&coloring, args.k));
        Ok(0)
    } else {
        eprintln!(
            "seed {} did not settle within {} resamples for n={n}, k={}",
            args.seed, args.cap, args.k
        );
        Ok(EXIT_PROPERTY_FAILS)
    }
}

fn vdw_sweep(args: VdwSweepArgs) -> Result<u8, Error> {
    let n = vdw_domain(args.k, args.n)?;
    match ramsey_core::seed_sweep(n, args.k, args.max_seeds, args.cap)? {
        Some((seed, coloring)) => {
            // deterministic re-run for the resample count
            let (_, stats) = ramsey_core::moser_tardos(n, args.k, seed, args.cap)?;
            let doc = json!({
                "found": true,
                "n": n,
                "k": args.k,
                "seed": seed,
                "resamples": stats.resamples,
                "coloring": coloring.to_bit_string(),
            });
            println!("{doc}");
            Ok(0)
        }
        None => {
            let doc = json!({
                "found": false,
                "n": n,
                "k": args.k,
                "seeds_tried": args.max_seeds,
            });
            println!("{doc}");
            Ok(EXIT_PROPERTY_FAILS)
        }
    }
}

fn vdw_verify(args: VdwVerifyArgs) -> Result<u8, Error> {
    let (coloring, _file_k) = ramsey_core::vdw::parse_coloring(&read_file(&args.file)?)?;
    let aps = ramsey_core::enumerate_aps(coloring.n, args.k)?;
    let violation = ramsey_core::find_mono_ap(&coloring, &aps)?;
    let doc = match violation {
        None => json!({ "n": coloring.n, "k": args.k, "valid": true }),
        Some(ap) => json!({
            "n": coloring.n,
            "k": args.k,
            "valid": false,
            "violating_ap": { "start": ap.start, "step": ap.step },
        }),
    };
    println!("{doc}");
    Ok(if violation.is_none() {
        0
    } else {
        EXIT_PROPERTY_FAILS
    })
}

fn params(args: ParamsArgs) -> Result<u8, Error> {
    let sampler = ramsey_core::params_for(args.n, args.k, None)?;
    let gh = ramsey_core::gh_threshold(args.k).ok();
    let mut table = Vec::new();
    let alpha_small = 1.0 / (args.n as f64).log2();
    for m in 1..=4usize {
        for alpha in [0.0, alpha_small] {
            table.push(ramsey_core::product_params(args.n, args.k, m, alpha)?);
        }
    }
    let doc = json!({
        "n": args.n,
        "k": args.k,
        "union_bound_log2": ramsey_core::union_bound_log2(args.n, args.k)?,
        "sampler": {
            "q": sampler.q,
            "t": sampler.t,
            "index_bits": sampler.index_bits(),
            "reduction": format!("{:#x}", sampler.ctx.reduction()),
        },
        "gh_threshold": gh,
        "lll_check_uniform": ramsey_core::lll_check(args.n, args.k, PModel::Uniform)?,
        "lll_check_almost_kwise": ramsey_core::lll_check(args.n, args.k, PModel::AlmostKwise)?,
        "product_params": table,
    });
    println!("{doc}");
    Ok(0)
}
