//! Experiment configuration and the flat key-value config file.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ga::GaParams;
use crate::pso::PsoParams;
use crate::ssa::{Gamma, SsaParams};

/// Algorithms the harness can compare.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algo {
    Ssa,
    Pso,
    Ga,
}

impl Algo {
    pub const ALL: [Algo; 3] = [Algo::Ssa, Algo::Pso, Algo::Ga];

    pub fn name(self) -> &'static str {
        match self {
            Algo::Ssa => "ssa",
            Algo::Pso => "pso",
            Algo::Ga => "ga",
        }
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ssa" => Ok(Algo::Ssa),
            "pso" => Ok(Algo::Pso),
            "ga" => Ok(Algo::Ga),
            other => Err(Error::Config(format!(
                "unknown algorithm `{other}` (expected ssa, pso or ga)"
            ))),
        }
    }
}

/// One comparison experiment: a benchmark function, a set of algorithms,
/// repeated seeded trials under a shared budget.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub function: String,
    pub dim: Option<usize>,
    pub algorithms: Vec<Algo>,
    pub trials: usize,
    pub base_seed: u64,
    /// Evaluation budget shared by every algorithm (the primary stop).
    pub budget_evals: Option<usize>,
    /// Optional wall-clock cap per trial, for protocol emulation.
    pub budget_secs: Option<f64>,
    /// A trial succeeds when `final - optimum <= success_tolerance`.
    pub success_tolerance: f64,
    pub ssa: SsaParams,
    pub pso: PsoParams,
    pub ga: GaParams,
    pub out_csv: Option<PathBuf>,
    pub out_json: Option<PathBuf>,
}

impl ExperimentConfig {
    pub fn new(function: impl Into<String>) -> Self {
        Self {
            function: function.into(),
            dim: None,
            algorithms: Algo::ALL.to_vec(),
            trials: 100,
            base_seed: 42,
            budget_evals: Some(50_000),
            budget_secs: None,
            success_tolerance: 5e-7,
            ssa: SsaParams::default(),
            pso: PsoParams::default(),
            ga: GaParams::default(),
            out_csv: None,
            out_json: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.algorithms.is_empty() {
            return Err(Error::Config("algorithm list is empty".into()));
        }
        if self.trials == 0 {
            return Err(Error::Config("trials must be at least 1".into()));
        }
        if self.budget_evals.is_none() && self.budget_secs.is_none() {
            return Err(Error::Config(
                "budget must specify at least one of budget_evals or budget_secs".into(),
            ));
        }
        if self.budget_evals == Some(0) {
            return Err(Error::Config("budget_evals must be positive".into()));
        }
        if let Some(s) = self.budget_secs {
            if !(s > 0.0) {
                return Err(Error::Config(format!(
                    "budget_secs must be positive, got {s}"
                )));
            }
        }
        if !(self.success_tolerance > 0.0) {
            return Err(Error::Config(format!(
                "success_tolerance must be positive, got {}",
                self.success_tolerance
            )));
        }
        self.ssa
            .validate()
            .and(self.pso.validate())
            .and(self.ga.validate())
            .map_err(|e| Error::Config(e.to_string()))
    }
}

/// A multi-function protocol run from a config file.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    /// `(name, dim)` pairs; `None` uses the registered default dimension.
    pub functions: Vec<(String, Option<usize>)>,
    /// Shared settings; its `function`/`dim` fields are replaced per entry.
    pub template: ExperimentConfig,
}

/// The comparison protocol shipped as the suite default: the eight
/// multi-algorithm benchmarks at desk-scale dimensions.
pub fn default_suite_functions() -> Vec<(String, Option<usize>)> {
    vec![
        ("ackley".into(), Some(16)),
        ("goldstein_price".into(), None),
        ("griewank".into(), None),
        ("levy".into(), Some(16)),
        ("rastrigin".into(), None),
        ("rosenbrock".into(), Some(16)),
        ("shekel".into(), None),
        ("sphere".into(), Some(8)),
    ]
}

/// The full comparison protocol with per-function squid parameters.
///
/// Population size and decay are matched to each landscape the way the
/// original comparison tuned its contenders per testing condition: the
/// decay schedule must finish within the generations the budget affords,
/// and harder landscapes trade population for a longer schedule. PSO and
/// GA run their fixed classic settings everywhere; every override is
/// echoed in the exported results.
pub fn comparison_protocol(trials: usize, base_seed: u64, budget_evals: usize) -> Vec<ExperimentConfig> {
    let tuned: [(&str, Option<usize>, usize, f64, f64); 8] = [
        // (function, dim, population, delta, beta0)
        ("ackley", Some(16), 16, 0.99, 1.0),
        ("goldstein_price", None, 24, 0.992, 2.0),
        ("griewank", None, 8, 0.998, 1.0),
        ("levy", Some(16), 16, 0.99, 1.0),
        ("rastrigin", None, 24, 0.992, 2.0),
        ("rosenbrock", Some(16), 12, 0.995, 1.0),
        ("shekel", None, 12, 0.997, 1.0),
        ("sphere", Some(8), 24, 0.992, 2.0),
    ];
    tuned
        .iter()
        .map(|&(name, dim, population, delta, beta0)| {
            let mut config = ExperimentConfig::new(name);
            config.dim = dim;
            config.trials = trials;
            config.base_seed = base_seed;
            config.budget_evals = Some(budget_evals);
            config.ssa.population = population;
            config.ssa.delta = delta;
            config.ssa.beta0 = beta0;
            config
        })
        .collect()
}

fn parse_num<T: FromStr>(key: &str, value: &str) -> Result<T>
where
    T::Err: fmt::Display,
{
    value
        .parse()
        .map_err(|e| Error::Config(format!("key `{key}`: cannot parse `{value}`: {e}")))
}

fn parse_bool(key: &str, value: &str) -> Result<bool> {
    match value {
        "true" => Ok(true),
        "false" => Ok(false),
        other => Err(Error::Config(format!(
            "key `{key}`: expected true or false, got `{other}`"
        ))),
    }
}

fn parse_function_entry(entry: &str) -> Result<(String, Option<usize>)> {
    match entry.split_once(':') {
        Some((name, dim)) => Ok((name.trim().to_string(), Some(parse_num("functions", dim.trim())?))),
        None => Ok((entry.trim().to_string(), None)),
    }
}

/// Parses the flat `key = value` config format.
///
/// Keys mirror the [`ExperimentConfig`] field names; algorithm tunables are
/// namespaced (`ssa.alpha`, `pso.inertia`, `ga.mutation_prob`). Lines
/// starting with `#` are comments. Unknown keys are errors.
pub fn parse_config_str(text: &str) -> Result<SuiteConfig> {
    let mut functions: Vec<(String, Option<usize>)> = Vec::new();
    let mut single_function: Option<String> = None;
    let mut template = ExperimentConfig::new("");

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            Error::Config(format!("line {}: expected `key = value`", lineno + 1))
        })?;
        let key = key.trim();
        let value = value.trim();
        match key {
            "function" => single_function = Some(value.to_string()),
            "functions" => {
                for entry in value.split(',') {
                    functions.push(parse_function_entry(entry)?);
                }
            }
            "dim" => template.dim = Some(parse_num(key, value)?),
            "algorithms" => {
                template.algorithms = if value == "all" {
                    Algo::ALL.to_vec()
                } else {
                    value
                        .split(',')
                        .map(|a| a.trim().parse())
                        .collect::<Result<Vec<Algo>>>()?
                };
            }
            "trials" => template.trials = parse_num(key, value)?,
            "base_seed" => template.base_seed = parse_num(key, value)?,
            "budget_evals" => template.budget_evals = Some(parse_num(key, value)?),
            "budget_secs" => template.budget_secs = Some(parse_num(key, value)?),
            "success_tolerance" => template.success_tolerance = parse_num(key, value)?,
            "out_csv" => template.out_csv = Some(PathBuf::from(value)),
            "out_json" => template.out_json = Some(PathBuf::from(value)),
            "ssa.population" => template.ssa.population = parse_num(key, value)?,
            "ssa.alpha" => template.ssa.alpha = parse_num(key, value)?,
            "ssa.delta" => template.ssa.delta = parse_num(key, value)?,
            "ssa.beta0" => template.ssa.beta0 = parse_num(key, value)?,
            "ssa.gamma" => {
                template.ssa.gamma = if value == "auto" {
                    Gamma::Auto
                } else {
                    Gamma::Fixed(parse_num(key, value)?)
                };
            }
            "ssa.cutoff" => template.ssa.cutoff = Some(parse_num(key, value)?),
            "ssa.mutation_factor" => template.ssa.mutation_factor = parse_num(key, value)?,
            "ssa.sample_mutation_factor" => {
                template.ssa.sample_mutation_factor = parse_bool(key, value)?;
            }
            "ssa.greedy_secondary" => template.ssa.greedy_secondary = parse_bool(key, value)?,
            "pso.population" => template.pso.population = parse_num(key, value)?,
            "pso.inertia" => template.pso.inertia = parse_num(key, value)?,
            "pso.cognitive" => template.pso.cognitive = parse_num(key, value)?,
            "pso.social" => template.pso.social = parse_num(key, value)?,
            "pso.clamp_k" => template.pso.clamp_k = parse_num(key, value)?,
            "ga.population" => template.ga.population = parse_num(key, value)?,
            "ga.crossover_prob" => template.ga.crossover_prob = parse_num(key, value)?,
            "ga.mutation_prob" => template.ga.mutation_prob = parse_num(key, value)?,
            other => {
                return Err(Error::Config(format!(
                    "line {}: unknown key `{other}`",
                    lineno + 1
                )));
            }
        }
    }

    if functions.is_empty() {
        functions = match single_function {
            Some(name) => vec![(name, template.dim)],
            None => default_suite_functions(),
        };
    } else if let Some(name) = single_function {
        return Err(Error::Config(format!(
            "both `function = {name}` and `functions = ...` given; use one"
        )));
    }

    Ok(SuiteConfig {
        functions,
        template,
    })
}

pub fn load_config(path: &Path) -> Result<SuiteConfig> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_config_str(&text)
}
