//! `latmax`: solve, simulate and generate influence-maximization instances.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use latmax::bench::{path_lambda_series, path_n_series, tree_budget_series, Series};
use latmax::generate::{random_instance, Caps, Shape};
use latmax::io::{instance_to_json, parse_instance, solution_to_json, trace_to_json};
use latmax::oracle::brute_force;
use latmax::pipeline::solve_with_report;
use latmax::reductions::{graph_to_weighted_complete, knapsack_to_star, Item};
use latmax::solver::min_cost_for_coverage;
use latmax::{diffuse, normalize_zero_cost, Error, ProblemInstance, SolverChoice};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "latmax", version, about = "Exact solvers for latency-bounded budgeted influence maximization")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find an optimal target set.
    Solve(SolveArgs),
    /// Run the diffusion from a given seed set.
    Simulate(SimulateArgs),
    /// Exhaustive search (at most 25 nodes).
    Oracle(FileArgs),
    /// Write a generated instance.
    Gen(GenArgs),
    /// Least cost activating at least `alpha` nodes of a path.
    QueryMinCost(QueryArgs),
    /// Time the path and tree solvers on doubling grids.
    Bench(BenchArgs),
}

#[derive(Args)]
struct FileArgs {
    /// Instance JSON file.
    instance: PathBuf,
    /// Write the result here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum TopologyArg {
    Auto,
    Complete,
    Tree,
    Path,
    Cycle,
    Brute,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    file: FileArgs,
    #[arg(long, value_enum, default_value = "auto")]
    topology: TopologyArg,
    /// Write the tree solver's MIS table to this file.
    #[arg(long)]
    dump_tables: Option<PathBuf>,
}

#[derive(Args)]
struct SimulateArgs {
    #[command(flatten)]
    file: FileArgs,
    /// Comma-separated seed ids.
    #[arg(long, value_delimiter = ',', default_value = "")]
    seeds: Vec<String>,
    /// Overrides the instance's lambda.
    #[arg(long)]
    lambda: Option<u32>,
}

#[derive(Args)]
struct QueryArgs {
    #[command(flatten)]
    file: FileArgs,
    #[arg(long)]
    alpha: usize,
}

#[derive(Args)]
struct GenArgs {
    #[command(subcommand)]
    kind: GenKind,
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ShapeArg {
    Path,
    Cycle,
    Tree,
    Complete,
    Graph,
}

#[derive(Subcommand)]
enum GenKind {
    /// Random instance of a given shape.
    Random {
        #[arg(long, value_enum)]
        shape: ShapeArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        max_weight: i64,
        #[arg(long, default_value_t = 5)]
        max_threshold: i64,
        #[arg(long, default_value_t = 1)]
        min_cost: i64,
        #[arg(long, default_value_t = 3)]
        max_cost: i64,
        #[arg(long, default_value_t = 4)]
        max_lambda: u32,
        #[arg(long, default_value_t = 6)]
        max_budget: i64,
    },
    /// Star built from knapsack items given as `profit:weight`.
    KnapsackStar {
        #[arg(long, value_delimiter = ',')]
        items: Vec<String>,
        #[arg(long)]
        capacity: i64,
        #[arg(long)]
        bound: i64,
    },
    /// Weighted complete network with the same diffusion as a graph file
    /// `{"n": int, "edges": [[u, v], ...], "thresholds": [int, ...]}`.
    CliqueEmbed {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 1)]
        lambda: u32,
        #[arg(long, default_value_t = 1)]
        budget: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GridArg {
    PathN,
    PathLambda,
    TreeBudget,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_enum)]
    grid: GridArg,
    /// Doubling grid of the varied parameter.
    #[arg(long, value_delimiter = ',')]
    sizes: Vec<u64>,
    /// Fixed path or tree size.
    #[arg(long, default_value_t = 256)]
    n: usize,
    /// Fixed lambda.
    #[arg(long, default_value_t = 2)]
    lambda: u32,
    #[arg(long, default_value_t = 3)]
    reps: usize,
}

/// Error plus the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::InvalidNetwork(_) | Error::InvalidInstance(_) => 2,
            Error::Precondition(_) | Error::UnknownNode(_) | Error::TooLarge { .. } => 3,
            Error::UnsupportedTopology(_) => 4,
        };
        Failure { code, message: e.to_string() }
    }
}

fn other(message: impl Into<String>) -> Failure {
    Failure { code: 1, message: message.into() }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| other(format!("{}: {e}", path.display())))
}

fn read_instance(path: &Path) -> Result<ProblemInstance, Failure> {
    Ok(parse_instance(&read(path)?)?)
}

fn emit(value: &Value, out: Option<&Path>) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).expect("JSON values serialize");
    match out {
        Some(p) => fs::write(p, text + "\n").map_err(|e| other(format!("{}: {e}", p.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn parse_usize(s: &str) -> Result<usize, Failure> {
    s.trim().parse().map_err(|_| Failure { code: 2, message: format!("bad node id {s:?}") })
}

fn cmd_solve(a: SolveArgs) -> Result<(), Failure> {
    let inst = read_instance(&a.file.instance)?;
    let choice = match a.topology {
        TopologyArg::Auto => SolverChoice::Auto,
        TopologyArg::Complete => SolverChoice::Complete,
        TopologyArg::Tree => SolverChoice::Tree,
        TopologyArg::Path => SolverChoice::Path,
        TopologyArg::Cycle => SolverChoice::Cycle,
        TopologyArg::Brute => SolverChoice::Brute,
    };
    let report = solve_with_report(&inst, choice, a.dump_tables.is_some())?;
    if let Some(p) = &a.dump_tables {
        let tables = report.tree_tables.clone().unwrap_or(Value::Null);
        emit(&tables, Some(p))?;
    }
    eprintln!("solver: {}, topology: {}", report.solver, report.topology.name());
    emit(&solution_to_json(&report.solution), a.file.out.as_deref())
}

fn cmd_simulate(a: SimulateArgs) -> Result<(), Failure> {
    let inst = read_instance(&a.file.instance)?;
    let seeds: Vec<usize> = a.seeds.iter().filter(|s| !s.trim().is_empty()).map(|s| parse_usize(s)).collect::<Result<_, _>>()?;
    let trace = diffuse(inst.network(), &seeds, a.lambda.unwrap_or(inst.lambda()))?;
    emit(&trace_to_json(&trace), a.file.out.as_deref())
}

fn cmd_oracle(a: FileArgs) -> Result<(), Failure> {
    let inst = read_instance(&a.instance)?;
    emit(&solution_to_json(&brute_force(&inst)?), a.out.as_deref())
}

fn cmd_query(a: QueryArgs) -> Result<(), Failure> {
    let inst = read_instance(&a.file.instance)?;
    let red = normalize_zero_cost(inst.network());
    let forced = red.forced_seeds.len();
    let cost = min_cost_for_coverage(&red.network, inst.lambda(), a.alpha.saturating_sub(forced))?;
    let cost = match cost.value() {
        Some(c) => json!(c),
        None => json!("inf"),
    };
    emit(&json!({ "alpha": a.alpha, "lambda": inst.lambda(), "min_cost": cost }), a.file.out.as_deref())
}

fn parse_item(s: &str) -> Result<Item, Failure> {
    let bad = || Failure { code: 2, message: format!("item {s:?} is not profit:weight") };
    let (p, w) = s.split_once(':').ok_or_else(bad)?;
    Ok(Item { profit: p.trim().parse().map_err(|_| bad())?, weight: w.trim().parse().map_err(|_| bad())? })
}

#[derive(serde::Deserialize)]
struct GraphFile {
    n: usize,
    edges: Vec<(usize, usize)>,
    thresholds: Vec<i64>,
}

fn cmd_gen(a: GenArgs) -> Result<(), Failure> {
    let (inst, meta) = match a.kind {
        GenKind::Random { shape, n, seed, max_weight, max_threshold, min_cost, max_cost, max_lambda, max_budget } => {
            let (shape, name) = match shape {
                ShapeArg::Path => (Shape::Path, "path"),
                ShapeArg::Cycle => (Shape::Cycle, "cycle"),
                ShapeArg::Tree => (Shape::Tree, "tree"),
                ShapeArg::Complete => (Shape::Complete, "complete"),
                ShapeArg::Graph => (Shape::Graph, "graph"),
            };
            let caps = Caps { max_weight, max_threshold, min_cost, max_cost, max_lambda, max_budget };
            if max_weight < 1 || max_threshold < 0 || min_cost < 0 || max_cost < min_cost || max_lambda < 1 || max_budget < 0 {
                return Err(Failure { code: 2, message: "inconsistent parameter caps".into() });
            }
            let inst = random_instance(shape, n, seed, &caps)?;
            (inst, json!({ "generator": "random", "shape": name, "n": n, "seed": seed }))
        }
        GenKind::KnapsackStar { items, capacity, bound } => {
            let items: Vec<Item> = items.iter().map(|s| parse_item(s)).collect::<Result<_, _>>()?;
            let inst = knapsack_to_star(&items, capacity, bound)?;
            (inst, json!({ "generator": "knapsack-star", "capacity": capacity, "bound": bound }))
        }
        GenKind::CliqueEmbed { graph, lambda, budget } => {
            let g: GraphFile = serde_json::from_str(&read(&graph)?).map_err(|e| Failure { code: 2, message: e.to_string() })?;
            let net = graph_to_weighted_complete(g.n, &g.edges, &g.thresholds)?;
            (ProblemInstance::new(net, lambda, budget)?, json!({ "generator": "clique-embed" }))
        }
    };
    emit(&instance_to_json(&inst, Some(meta)), a.out.as_deref())
}

fn series_json(s: &Series) -> Value {
    json!({
        "label": s.label,
        "x": s.xs,
        "seconds": s.seconds,
        "exponent": s.exponent(),
        "mean_doubling_ratio": s.mean_ratio(),
    })
}

fn cmd_bench(a: BenchArgs) -> Result<(), Failure> {
    if a.sizes.len() < 2 {
        return Err(Failure { code: 2, message: "--sizes needs at least two values".into() });
    }
    let s = match a.grid {
        GridArg::PathN => path_n_series(&a.sizes.iter().map(|&x| x as usize).collect::<Vec<_>>(), a.lambda, a.reps),
        GridArg::PathLambda => path_lambda_series(a.n, &a.sizes.iter().map(|&x| x as u32).collect::<Vec<_>>(), a.reps),
        GridArg::TreeBudget => tree_budget_series(a.n, a.lambda, &a.sizes.iter().map(|&x| x as i64).collect::<Vec<_>>(), a.reps),
    };
    emit(&series_json(&s), None)
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(v) = std::env::var("LATMAX_THREADS") else { return Ok(()) };
    let n: usize = v.trim().parse().map_err(|_| other(format!("LATMAX_THREADS={v:?} is not a number")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n.max(1))
        .build_global()
        .map_err(|e| other(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = configure_threads().and_then(|()| match cli.command {
        Command::Solve(a) => cmd_solve(a),
        Command::Simulate(a) => cmd_simulate(a),
        Command::Oracle(a) => cmd_oracle(a),
        Command::Gen(a) => cmd_gen(a),
        Command::QueryMinCost(a) => cmd_query(a),
        Command::Bench(a) => cmd_bench(a),
    });
    match run {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
