//! Trial execution and per-function aggregation.

use rayon::prelude::*;

use crate::benchmarks::registry_lookup;
use crate::error::Result;
use crate::ga::ga_minimize;
use crate::objective::Objective;
use crate::pso::pso_minimize;
use crate::result::OptResult;
use crate::rng::RngStream;
use crate::ssa::ssa_minimize;

use super::config::{Algo, ExperimentConfig, SuiteConfig};
use super::stats::{ranks_from_means, success_rate_normal_approx, TrialStats};

/// Statistics for one algorithm within one experiment.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgorithmReport {
    pub algorithm: Algo,
    pub stats: TrialStats,
    pub success_rate_normal_approx: f64,
    pub rank: usize,
    pub successes: usize,
    /// Final fitness of every completed trial, in trial order.
    pub final_fitnesses: Vec<f64>,
    /// Aborted trials: `(trial index, diagnostic)`. Never dropped.
    pub failures: Vec<(usize, String)>,
}

/// Outcome of [`run_experiment`] for one function.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentReport {
    pub config: ExperimentConfig,
    /// Resolved dimension actually run.
    pub dim: usize,
    pub optimum_value: f64,
    pub trials: usize,
    pub algorithms: Vec<AlgorithmReport>,
}

impl ExperimentReport {
    pub fn function(&self) -> &str {
        &self.config.function
    }
}

/// Copies the per-algorithm tuning and applies the shared experiment
/// budget; the budget is the stop, not the generation cap.
fn run_algorithm(
    objective: &Objective,
    algo: Algo,
    config: &ExperimentConfig,
    rng: &mut RngStream,
    trace: bool,
) -> Result<OptResult> {
    match algo {
        Algo::Ssa => {
            let mut params = config.ssa.clone();
            params.max_generations = usize::MAX;
            params.max_evaluations = config.budget_evals;
            params.max_seconds = config.budget_secs;
            ssa_minimize(objective, &params, rng, trace)
        }
        Algo::Pso => {
            let mut params = config.pso.clone();
            params.max_generations = usize::MAX;
            params.max_evaluations = config.budget_evals;
            params.max_seconds = config.budget_secs;
            pso_minimize(objective, &params, rng, trace)
        }
        Algo::Ga => {
            let mut params = config.ga.clone();
            params.max_generations = usize::MAX;
            params.max_evaluations = config.budget_evals;
            params.max_seconds = config.budget_secs;
            ga_minimize(objective, &params, rng, trace)
        }
    }
}

/// Runs one seeded trial. Trial `k` of algorithm `a` always uses the seed
/// `RngStream::derive(base_seed, a.name(), k)`, so any single trial can be
/// reproduced in isolation.
pub fn run_trial(
    objective: &Objective,
    algo: Algo,
    config: &ExperimentConfig,
    trial: usize,
) -> Result<OptResult> {
    let seed = RngStream::derive(config.base_seed, algo.name(), trial as u64);
    let mut rng = RngStream::new(seed);
    run_algorithm(objective, algo, config, &mut rng, false)
}

/// One traced run with an explicit seed, for path plots.
pub fn run_traced(config: &ExperimentConfig, algo: Algo, seed: u64) -> Result<OptResult> {
    config.validate()?;
    let objective = registry_lookup(&config.function, config.dim)?;
    let mut rng = RngStream::new(seed);
    run_algorithm(&objective, algo, config, &mut rng, true)
}

/// Runs every algorithm in the config for `trials` seeded repetitions and
/// aggregates trial statistics, ranks and success rates.
///
/// Trials are independent work items; results are folded in trial-index
/// order, so the report is identical at any parallelism degree.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentReport> {
    config.validate()?;
    let objective = registry_lookup(&config.function, config.dim)?;
    let optimum_value = objective
        .known_optimum()
        .expect("registry objectives carry their optimum")
        .1;

    let mut algorithms = Vec::with_capacity(config.algorithms.len());
    for &algo in &config.algorithms {
        let outcomes: Vec<std::result::Result<f64, String>> = (0..config.trials)
            .into_par_iter()
            .map(|trial| {
                run_trial(&objective, algo, config, trial)
                    .map(|r| r.best_fitness)
                    .map_err(|e| e.to_string())
            })
            .collect();

        let mut final_fitnesses = Vec::with_capacity(config.trials);
        let mut failures = Vec::new();
        for (trial, outcome) in outcomes.into_iter().enumerate() {
            match outcome {
                Ok(f) => final_fitnesses.push(f),
                Err(diag) => failures.push((trial, diag)),
            }
        }
        let successes = final_fitnesses
            .iter()
            .filter(|&&f| f - optimum_value <= config.success_tolerance)
            .count();
        let stats = TrialStats::from_finals(&final_fitnesses, successes, config.trials);
        let normal = success_rate_normal_approx(&stats, optimum_value, config.success_tolerance);
        algorithms.push(AlgorithmReport {
            algorithm: algo,
            stats,
            success_rate_normal_approx: normal,
            rank: 0,
            successes,
            final_fitnesses,
            failures,
        });
    }

    let means: Vec<f64> = algorithms.iter().map(|a| a.stats.mean).collect();
    for (row, rank) in algorithms.iter_mut().zip(ranks_from_means(&means)) {
        row.rank = rank;
    }

    Ok(ExperimentReport {
        dim: objective.dim(),
        optimum_value,
        trials: config.trials,
        algorithms,
        config: config.clone(),
    })
}

/// Runs the whole suite, one experiment per function entry.
pub fn run_suite(suite: &SuiteConfig) -> Result<Vec<ExperimentReport>> {
    let mut reports = Vec::with_capacity(suite.functions.len());
    for (name, dim) in &suite.functions {
        let mut config = suite.template.clone();
        config.function = name.clone();
        config.dim = *dim;
        reports.push(run_experiment(&config)?);
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny_config() -> ExperimentConfig {
        let mut config = ExperimentConfig::new("sphere");
        config.dim = Some(2);
        config.trials = 5;
        config.budget_evals = Some(600);
        config
    }

    #[test]
    fn report_covers_every_algorithm_with_ranks() {
        let report = run_experiment(&tiny_config()).unwrap();
        assert_eq!(report.dim, 2);
        assert_eq!(report.algorithms.len(), 3);
        let mut ranks: Vec<usize> = report.algorithms.iter().map(|a| a.rank).collect();
        ranks.sort_unstable();
        assert_eq!(ranks, vec![1, 2, 3]);
        for row in &report.algorithms {
            assert_eq!(row.final_fitnesses.len(), 5);
            assert!(row.failures.is_empty());
            assert!(row.stats.best <= row.stats.mean);
        }
    }

    #[test]
    fn trials_are_individually_reproducible() {
        let config = tiny_config();
        let objective = registry_lookup("sphere", Some(2)).unwrap();
        let a = run_trial(&objective, Algo::Ssa, &config, 3).unwrap();
        let b = run_trial(&objective, Algo::Ssa, &config, 3).unwrap();
        assert_eq!(a, b);
        let c = run_trial(&objective, Algo::Ssa, &config, 4).unwrap();
        assert_ne!(a.best_fitness, c.best_fitness);
    }

    #[test]
    fn unknown_function_is_rejected() {
        let config = ExperimentConfig::new("not_a_function");
        assert!(run_experiment(&config).is_err());
    }

    #[test]
    fn traced_run_records_positions() {
        let mut config = ExperimentConfig::new("beale");
        config.trials = 1;
        config.budget_evals = Some(400);
        let result = run_traced(&config, Algo::Ssa, 7).unwrap();
        let trace = result.trace.expect("trace requested");
        assert!(!trace.is_empty());
        assert!(trace.iter().all(|r| r.position.len() == 2));
    }
}
