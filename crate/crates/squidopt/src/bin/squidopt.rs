//! Thin CLI over the experiment harness.
//!
//! Exit codes: 0 success, 2 configuration error, 3 runtime abort
//! (non-finite objective value), 1 otherwise.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use squidopt::harness::{
    aggregate_summary, export_results_csv, export_results_json, export_trace, load_config,
    run_experiment, run_suite, run_traced, results_csv, results_json, summary_csv, write_file,
    Algo, ExperimentConfig, ExperimentReport, SummaryRow,
};
use squidopt::{registry, Error};

#[derive(Parser)]
#[command(name = "squidopt", about = "Swarm optimizer comparison harness", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run repeated seeded trials of one function and report statistics.
    Run(RunArgs),
    /// Record one traced run for path plotting.
    Trace(TraceArgs),
    /// Run the full multi-function protocol from a config file.
    Suite(SuiteArgs),
    /// Print the benchmark registry.
    ListFunctions,
}

#[derive(Args)]
struct RunArgs {
    /// Benchmark function name (see list-functions).
    #[arg(long)]
    function: String,
    /// Dimension for variable-dimensional functions.
    #[arg(long)]
    dim: Option<usize>,
    /// Algorithm to run: ssa, pso, ga or all.
    #[arg(long, default_value = "all")]
    algo: String,
    /// Number of seeded trials.
    #[arg(long, default_value_t = 100)]
    trials: usize,
    /// Base seed; trial k of algorithm a uses a seed derived from (seed, a, k).
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Evaluation budget per trial.
    #[arg(long, default_value_t = 50_000)]
    budget_evals: usize,
    /// Optional wall-clock cap per trial, in seconds.
    #[arg(long)]
    budget_secs: Option<f64>,
    /// Success tolerance against the known optimum.
    #[arg(long, default_value_t = 5e-7)]
    success_tolerance: f64,
    /// Write the results table as CSV.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write the full results document as JSON.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct TraceArgs {
    #[arg(long)]
    function: String,
    #[arg(long)]
    dim: Option<usize>,
    /// Algorithm to trace: ssa, pso or ga.
    #[arg(long)]
    algo: String,
    /// Seed for this single run.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 50_000)]
    budget_evals: usize,
    /// Trace CSV destination.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct SuiteArgs {
    /// Flat key-value config file.
    #[arg(long)]
    config: PathBuf,
    /// Directory for results.csv, results.json and summary.csv.
    #[arg(long)]
    out_dir: PathBuf,
}

fn parse_algorithms(spec: &str) -> Result<Vec<Algo>, Error> {
    if spec == "all" {
        return Ok(Algo::ALL.to_vec());
    }
    spec.split(',').map(|a| a.trim().parse()).collect()
}

fn print_report(report: &ExperimentReport) {
    println!(
        "function {} (dim {}), {} trials, budget {} evaluations",
        report.function(),
        report.dim,
        report.trials,
        report
            .config
            .budget_evals
            .map_or_else(|| "-".into(), |b| b.to_string()),
    );
    println!(
        "{:<6} {:>13} {:>13} {:>13} {:>13} {:>9} {:>5}",
        "algo", "best", "worst", "mean", "std_dev", "success", "rank"
    );
    for row in &report.algorithms {
        println!(
            "{:<6} {:>13.6e} {:>13.6e} {:>13.6e} {:>13.6e} {:>8.1}% {:>5}",
            row.algorithm.name(),
            row.stats.best,
            row.stats.worst,
            row.stats.mean,
            row.stats.std_dev,
            100.0 * row.stats.success_rate,
            row.rank,
        );
        for (trial, diag) in &row.failures {
            eprintln!("  trial {trial} failed: {diag}");
        }
    }
    if report.trials == 1 {
        eprintln!("note: single trial; std_dev reported as 0 by convention");
    }
}

fn print_summary(rows: &[SummaryRow]) {
    println!(
        "{:<6} {:>12} {:>10} {:>9} {:>14}",
        "algo", "avg_rank", "final", "success", "normal_approx"
    );
    for row in rows {
        println!(
            "{:<6} {:>12.2} {:>10} {:>8.2}% {:>13.2}%",
            row.algorithm.name(),
            row.average_rank,
            row.final_rank,
            100.0 * row.success_rate,
            100.0 * row.success_rate_normal_approx,
        );
    }
}

fn cmd_run(args: &RunArgs) -> Result<(), Error> {
    let mut config = ExperimentConfig::new(&args.function);
    config.dim = args.dim;
    config.algorithms = parse_algorithms(&args.algo)?;
    config.trials = args.trials;
    config.base_seed = args.seed;
    config.budget_evals = Some(args.budget_evals);
    config.budget_secs = args.budget_secs;
    config.success_tolerance = args.success_tolerance;
    config.out_csv = args.out.clone();
    config.out_json = args.json.clone();

    let report = run_experiment(&config)?;
    print_report(&report);
    let reports = [report];
    if let Some(path) = &args.out {
        export_results_csv(&reports, path)?;
        println!("wrote {}", path.display());
    }
    if let Some(path) = &args.json {
        export_results_json(&reports, path)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn cmd_trace(args: &TraceArgs) -> Result<(), Error> {
    let algo: Algo = args.algo.parse()?;
    let mut config = ExperimentConfig::new(&args.function);
    config.dim = args.dim;
    config.algorithms = vec![algo];
    config.trials = 1;
    config.budget_evals = Some(args.budget_evals);
    let result = run_traced(&config, algo, args.seed)?;
    export_trace(&result, &args.out)?;
    println!(
        "traced {} on {}: {} generations, {} evaluations, best {:.6e}; wrote {}",
        algo.name(),
        args.function,
        result.generations,
        result.evaluations,
        result.best_fitness,
        args.out.display(),
    );
    Ok(())
}

fn cmd_suite(args: &SuiteArgs) -> Result<(), Error> {
    let suite = load_config(&args.config)?;
    suite.template.validate()?;
    std::fs::create_dir_all(&args.out_dir).map_err(|e| Error::Io {
        path: args.out_dir.clone(),
        source: e,
    })?;
    let reports = run_suite(&suite)?;
    for report in &reports {
        print_report(report);
        println!();
    }
    let summary = aggregate_summary(&reports)?;
    print_summary(&summary);

    write_file(&args.out_dir.join("results.csv"), &results_csv(&reports)?)?;
    write_file(&args.out_dir.join("results.json"), &results_json(&reports)?)?;
    write_file(&args.out_dir.join("summary.csv"), &summary_csv(&summary))?;
    println!("wrote results.csv, results.json, summary.csv to {}", args.out_dir.display());
    Ok(())
}

fn cmd_list_functions() {
    println!(
        "{:<16} {:>9} {:>20} {:>16}",
        "name", "dim", "bounds", "optimum"
    );
    for spec in registry() {
        let dim = match spec.fixed_dim {
            Some(d) => format!("{d}"),
            None => format!("{}*", spec.default_dim),
        };
        let (_, value) = spec.optimum(spec.default_dim);
        println!(
            "{:<16} {:>9} {:>20} {:>16.5}",
            spec.name,
            dim,
            format!("[{}, {}]", spec.lower, spec.upper),
            value,
        );
    }
    println!("(* = variable dimension; shown value is the registered default)");
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Config(_)
        | Error::InvalidParameter(_)
        | Error::UnknownFunction(_)
        | Error::FixedDimension { .. } => 2,
        Error::NonFiniteObjective { .. } => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Run(args) => cmd_run(args),
        Command::Trace(args) => cmd_trace(args),
        Command::Suite(args) => cmd_suite(args),
        Command::ListFunctions => {
            cmd_list_functions();
            Ok(())
        }
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}
