//! `sparing`: sparing numbers and weak set-labelings from the command line.
//!
//! Exit codes: 0 success, 2 input error, 3 budget exceeded (result is an
//! upper bound), 4 labeling verification failure.

mod format;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use sparing::compare::{compare_instance, to_csv, CompareRow, Summary};
use sparing::{
    build_labeling, parse_edge_list, replay_trace, run_greedy, serialize_edge_list, sparing_exact,
    to_dot, verify_wiasl, Error, ExactConfig, Family, Graph, Method, SparingResult, VertexId,
};

#[derive(Parser)]
#[command(
    name = "sparing",
    version,
    about = "Sparing numbers of finite simple graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the sparing number of one graph.
    Sparing(SparingArgs),
    /// Print a weak set-labeling realizing the computed independent set.
    Label(LabelArgs),
    /// Print the greedy round-by-round trace.
    Trace(TraceArgs),
    /// Write a generated graph as an edge list.
    Gen(GenArgs),
    /// Compare greedy against the exact optimum over a seeded batch.
    Compare(CompareArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Generator spec, e.g. `figure1`, `cycle:5`, `random:20,0.3,7`.
    #[arg(long = "gen", value_name = "SPEC")]
    generator: Option<String>,
    /// Edge-list file.
    #[arg(long = "in", value_name = "PATH")]
    path: Option<PathBuf>,
}

#[derive(Args)]
struct SparingArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long, value_enum, default_value_t = MethodArg::Greedy)]
    method: MethodArg,
    /// Seed for generator specs that omit one.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Time budget in seconds for the exact methods.
    #[arg(long, value_name = "SECONDS")]
    budget: Option<f64>,
    /// Also write an annotated DOT file.
    #[arg(long, value_name = "PATH")]
    dot: Option<PathBuf>,
    /// Print the greedy trace before the result line.
    #[arg(long)]
    trace: bool,
    /// Report elapsed time as 0 for byte-identical output.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Args)]
struct LabelArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long, value_enum, default_value_t = MethodArg::Greedy)]
    method: MethodArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_name = "SECONDS")]
    budget: Option<f64>,
    /// Write DOT with set-labels to PATH, or to stdout when PATH is `-`.
    #[arg(long, value_name = "PATH")]
    dot: Option<PathBuf>,
}

#[derive(Args)]
struct TraceArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Replay this comma-separated pick order instead of choosing by degree.
    #[arg(long, value_delimiter = ',')]
    picks: Option<Vec<VertexId>>,
}

#[derive(Args)]
struct GenArgs {
    spec: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write DOT instead of an edge list.
    #[arg(long)]
    dot: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum BatchFamily {
    Random,
    Bipartite,
}

#[derive(Args)]
struct CompareArgs {
    /// Compare a single instance instead of a random batch.
    #[arg(long = "gen", value_name = "SPEC", conflicts_with = "path")]
    generator: Option<String>,
    #[arg(long = "in", value_name = "PATH")]
    path: Option<PathBuf>,
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[arg(long, default_value_t = 4)]
    n_min: usize,
    #[arg(long, default_value_t = 12)]
    n_max: usize,
    #[arg(long, default_value_t = 0.1)]
    p_min: f64,
    #[arg(long, default_value_t = 0.6)]
    p_max: f64,
    #[arg(long, value_enum, default_value_t = BatchFamily::Random)]
    family: BatchFamily,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Exact method for the `phi_exact` column.
    #[arg(long, value_enum, default_value_t = MethodArg::Exact)]
    method: MethodArg,
    /// Write the CSV here instead of stdout.
    #[arg(long, value_name = "PATH")]
    csv: Option<PathBuf>,
    /// Write timings as 0 for byte-identical output.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Greedy,
    Exact,
    Brute,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Greedy => Method::Greedy,
            MethodArg::Exact => Method::Exact,
            MethodArg::Brute => Method::Brute,
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded { .. } => 3,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CliResult<T = ()> = Result<T, Failure>;

fn load(generator: Option<&str>, path: Option<&PathBuf>, seed: u64) -> CliResult<Graph> {
    match (generator, path) {
        (Some(spec), _) => Ok(Family::parse_with_seed(spec, seed)?.generate()?),
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
            parse_edge_list(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
        }
        (None, None) => Err(Failure::input("no input: pass --gen or --in")),
    }
}

fn load_input(input: &Input, seed: u64) -> CliResult<Graph> {
    load(input.generator.as_deref(), input.path.as_ref(), seed)
}

fn write_out(path: &PathBuf, text: &str) -> CliResult {
    if path.as_os_str() == "-" {
        print!("{text}");
        Ok(())
    } else {
        fs::write(path, text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
    }
}

/// Solves with the requested method. A blown budget still yields the best
/// bound found, flagged by `optimal == false`.
fn solve(g: &Graph, method: MethodArg, budget: Option<f64>) -> CliResult<SparingResult> {
    let method = Method::from(method);
    if method == Method::Greedy {
        return Ok(run_greedy(g));
    }
    let mut cfg = ExactConfig {
        method,
        ..Default::default()
    };
    if let Some(secs) = budget {
        let budget = Duration::try_from_secs_f64(secs)
            .map_err(|_| Failure::input(format!("invalid budget {secs}")))?;
        cfg = cfg.with_budget(budget);
    }
    match sparing_exact(g, &cfg) {
        Ok(r) => Ok(r),
        Err(Error::BudgetExceeded { best }) => Ok(*best),
        Err(e) => Err(e.into()),
    }
}

fn cmd_sparing(args: SparingArgs) -> CliResult {
    let g = load_input(&args.input, args.seed)?;
    let start = Instant::now();
    let result = solve(&g, args.method, args.budget)?;
    let elapsed = if args.no_timing {
        0.0
    } else {
        start.elapsed().as_secs_f64() * 1e3
    };

    if args.trace {
        let greedy = if result.method == Method::Greedy {
            result.clone()
        } else {
            run_greedy(&g)
        };
        for rec in &greedy.trace {
            println!("{}", format::iteration(rec));
        }
    }
    println!("{}", format::result_line(&result, elapsed));
    if let Some(path) = &args.dot {
        write_out(
            path,
            &to_dot(&g, &result.independent_set, &result.mono_edges, None),
        )?;
    }
    if result.optimal || result.method == Method::Greedy {
        Ok(())
    } else {
        Err(Failure {
            code: 3,
            message: format!("budget exceeded; phi <= {} is an upper bound", result.phi),
        })
    }
}

fn cmd_label(args: LabelArgs) -> CliResult {
    let g = load_input(&args.input, args.seed)?;
    let result = solve(&g, args.method, args.budget)?;
    let lab = build_labeling(&g, &result.independent_set)?;
    let report = verify_wiasl(&g, &lab);

    for (v, label) in lab.vertex_labels.iter().enumerate() {
        println!("v {v} {label}");
    }
    for (e, label) in &lab.edge_labels {
        println!(
            "e {} {} {label} mono={}",
            e.u(),
            e.v(),
            label.is_singleton() as u8
        );
    }
    if let Some(path) = &args.dot {
        let labels: Vec<String> = lab.vertex_labels.iter().map(ToString::to_string).collect();
        write_out(
            path,
            &to_dot(&g, &lab.independent_set, &result.mono_edges, Some(&labels)),
        )?;
    }
    if !report.is_valid() {
        return Err(Failure {
            code: 4,
            message: format!("labeling failed verification: {report:?}"),
        });
    }
    if !result.optimal && result.method != Method::Greedy {
        return Err(Failure {
            code: 3,
            message: "budget exceeded; labeling realizes an upper bound".into(),
        });
    }
    Ok(())
}

fn cmd_trace(args: TraceArgs) -> CliResult {
    let g = load_input(&args.input, args.seed)?;
    let result = match &args.picks {
        Some(picks) => replay_trace(&g, picks)?,
        None => run_greedy(&g),
    };
    print!("{}", format::trace(&result));
    Ok(())
}

fn cmd_gen(args: GenArgs) -> CliResult {
    let g = Family::parse_with_seed(&args.spec, args.seed)?.generate()?;
    if args.dot {
        print!(
            "{}",
            to_dot(&g, &Default::default(), &Default::default(), None)
        );
    } else {
        print!("{}", serialize_edge_list(&g));
    }
    Ok(())
}

fn batch_instances(args: &CompareArgs) -> CliResult<Vec<Graph>> {
    if args.generator.is_some() || args.path.is_some() {
        return Ok(vec![load(
            args.generator.as_deref(),
            args.path.as_ref(),
            args.seed,
        )?]);
    }
    if args.n_min == 0 || args.n_min > args.n_max {
        return Err(Failure::input("need 1 <= n-min <= n-max"));
    }
    if !(0.0..=1.0).contains(&args.p_min) || !(args.p_min..=1.0).contains(&args.p_max) {
        return Err(Failure::input("need 0 <= p-min <= p-max <= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    (0..args.count)
        .map(|_| {
            let n = rng.gen_range(args.n_min..=args.n_max);
            let p = rng.gen_range(args.p_min..=args.p_max);
            let seed = rng.gen();
            let family = match args.family {
                BatchFamily::Random => Family::Random { n, p, seed },
                BatchFamily::Bipartite => Family::RandomBipartite {
                    left: n / 2,
                    right: n - n / 2,
                    p,
                    seed,
                },
            };
            Ok(family.generate()?)
        })
        .collect()
}

fn cmd_compare(args: CompareArgs) -> CliResult {
    let method = Method::from(args.method);
    if method == Method::Greedy {
        return Err(Failure::input(
            "compare needs an exact method (exact or brute)",
        ));
    }
    let cfg = ExactConfig {
        method,
        ..Default::default()
    };
    let graphs = batch_instances(&args)?;
    let rows: Vec<CompareRow> = graphs
        .par_iter()
        .enumerate()
        .map(|(id, g)| compare_instance(id, g, &cfg))
        .collect::<Result<_, _>>()?;

    let csv = to_csv(&rows, !args.no_timing);
    let summary = Summary::from_rows(&rows);
    match &args.csv {
        Some(path) => {
            write_out(path, &csv)?;
            println!("{summary}");
        }
        None => {
            print!("{csv}");
            eprintln!("{summary}");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Sparing(a) => cmd_sparing(a),
        Command::Label(a) => cmd_label(a),
        Command::Trace(a) => cmd_trace(a),
        Command::Gen(a) => cmd_gen(a),
        Command::Compare(a) => cmd_compare(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
