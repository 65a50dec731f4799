//! Experiment harness: repeated seeded trials, trial statistics, ranking,
//! summary aggregation power and CSV/JSON export.
//!
//! Comparisons run at an equal evaluation budget per trial (default
//! 50,000), which keeps results hardware-independent; an optional
//! wall-clock cap is available for protocol emulation. Everything
//! downstream of an [`ExperimentConfig`] is deterministic: trial `k` of an
//! algorithm derives its seed from `(base_seed, algorithm, k)` and
//! aggregation folds in trial order, so identical configs produce
//! byte-identical output files at any parallelism degree.

mod config;
mod export;
mod runner;
mod stats;

pub use config::{
    comparison_protocol, default_suite_functions, load_config, parse_config_str, Algo,
    ExperimentConfig, SuiteConfig,
};
pub use export::{
    export_results_csv, export_results_json, export_trace, fmt17, results_csv, results_json,
    summary_csv, trace_csv, write_file,
};
pub use runner::{
    run_experiment, run_suite, run_traced, run_trial, AlgorithmReport, ExperimentReport,
};
pub use stats::{
    aggregate_summary, average_ranks, final_ranks, normal_cdf, ranks_from_means,
    success_rate_normal_approx, SummaryRow, TrialStats,
};
