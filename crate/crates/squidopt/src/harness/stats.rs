//! Trial statistics, ranking and the cross-function summary.

use crate::error::{Error, Result};

use super::config::Algo;
use super::runner::ExperimentReport;

/// Best/worst/mean/sample-standard-deviation over a set of trial finals,
/// plus the empirical success rate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrialStats {
    pub best: f64,
    pub worst: f64,
    pub mean: f64,
    /// Sample standard deviation (n-1 denominator); 0 by convention for a
    /// single trial.
    pub std_dev: f64,
    /// Fraction of all trials (failed ones included) whose final fitness
    /// came within the tolerance of the known optimum.
    pub success_rate: f64,
}

impl TrialStats {
    /// Statistics over the completed trial finals. `successes` and
    /// `trials` count against the full trial set.
    pub fn from_finals(finals: &[f64], successes: usize, trials: usize) -> Self {
        if finals.is_empty() {
            return Self {
                best: f64::NAN,
                worst: f64::NAN,
                mean: f64::NAN,
                std_dev: f64::NAN,
                success_rate: 0.0,
            };
        }
        let n = finals.len() as f64;
        let best = finals.iter().copied().fold(f64::INFINITY, f64::min);
        let worst = finals.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let mean = finals.iter().sum::<f64>() / n;
        let std_dev = if finals.len() < 2 {
            0.0
        } else {
            let ss: f64 = finals.iter().map(|f| (f - mean) * (f - mean)).sum();
            (ss / (n - 1.0)).sqrt()
        };
        Self {
            best,
            worst,
            mean,
            std_dev,
            success_rate: successes as f64 / trials as f64,
        }
    }
}

/// Error function, Abramowitz-Stegun 7.1.26 rational approximation
/// (max absolute error 1.5e-7).
fn erf(x: f64) -> f64 {
    let sign = if x < 0.0 { -1.0 } else { 1.0 };
    let x = x.abs();
    let t = 1.0 / (1.0 + 0.3275911 * x);
    let poly = t
        * (0.254829592
            + t * (-0.284496736 + t * (1.421413741 + t * (-1.453152027 + t * 1.061405429))));
    sign * (1.0 - poly * (-x * x).exp())
}

pub fn normal_cdf(z: f64) -> f64 {
    0.5 * (1.0 + erf(z / std::f64::consts::SQRT_2))
}

/// Success probability under a normal fit to the trial finals: the mass
/// below `optimum + tolerance`. This mirrors the summary table's
/// approximation; the empirical rate remains authoritative.
pub fn success_rate_normal_approx(stats: &TrialStats, optimum: f64, tolerance: f64) -> f64 {
    let threshold = optimum + tolerance;
    if stats.mean.is_nan() {
        0.0
    } else if stats.std_dev == 0.0 {
        if stats.mean <= threshold {
            1.0
        } else {
            0.0
        }
    } else {
        normal_cdf((threshold - stats.mean) / stats.std_dev)
    }
}

/// Competition ranking by mean: rank 1 is the lowest mean; tied means
/// share the lower rank.
pub fn ranks_from_means(means: &[f64]) -> Vec<usize> {
    means
        .iter()
        .map(|m| {
            1 + means
                .iter()
                .filter(|other| other.total_cmp(m) == std::cmp::Ordering::Less)
                .count()
        })
        .collect()
}

/// Per-algorithm average of rank vectors across functions.
pub fn average_ranks(rank_vectors: &[Vec<usize>]) -> Vec<f64> {
    assert!(!rank_vectors.is_empty(), "no rank vectors to average");
    let width = rank_vectors[0].len();
    let mut sums = vec![0.0; width];
    for ranks in rank_vectors {
        assert_eq!(ranks.len(), width, "rank vectors must share a width");
        for (s, &r) in sums.iter_mut().zip(ranks) {
            *s += r as f64;
        }
    }
    sums.iter()
        .map(|s| s / rank_vectors.len() as f64)
        .collect()
}

/// Final ordering of the averaged ranks, same tie rule as
/// [`ranks_from_means`].
pub fn final_ranks(averages: &[f64]) -> Vec<usize> {
    ranks_from_means(averages)
}

/// One row of the cross-function summary table.
#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub algorithm: Algo,
    pub average_rank: f64,
    pub final_rank: usize,
    /// Pooled empirical success rate: total successes over total trials.
    pub success_rate: f64,
    /// Mean over functions of the per-function normal approximation.
    pub success_rate_normal_approx: f64,
}

/// Aggregates per-function reports into the summary table. All reports
/// must cover the same algorithms in the same order.
pub fn aggregate_summary(reports: &[ExperimentReport]) -> Result<Vec<SummaryRow>> {
    if reports.is_empty() {
        return Err(Error::Config("no experiment reports to summarize".into()));
    }
    let algorithms: Vec<Algo> = reports[0].algorithms.iter().map(|a| a.algorithm).collect();
    for report in reports {
        let found: Vec<Algo> = report.algorithms.iter().map(|a| a.algorithm).collect();
        if found != algorithms {
            return Err(Error::Config(
                "reports disagree on the algorithm set; cannot summarize".into(),
            ));
        }
    }

    let rank_vectors: Vec<Vec<usize>> = reports
        .iter()
        .map(|r| r.algorithms.iter().map(|a| a.rank).collect())
        .collect();
    let averages = average_ranks(&rank_vectors);
    let finals = final_ranks(&averages);

    let rows = algorithms
        .iter()
        .enumerate()
        .map(|(idx, &algorithm)| {
            let mut successes = 0usize;
            let mut trials = 0usize;
            let mut normal_sum = 0.0;
            for report in reports {
                let row = &report.algorithms[idx];
                successes += row.successes;
                trials += report.trials;
                normal_sum += row.success_rate_normal_approx;
            }
            SummaryRow {
                algorithm,
                average_rank: averages[idx],
                final_rank: finals[idx],
                success_rate: successes as f64 / trials as f64,
                success_rate_normal_approx: normal_sum / reports.len() as f64,
            }
        })
        .collect();
    Ok(rows)
}
