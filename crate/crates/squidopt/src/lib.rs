//! Global optimization with a dual-swarm squid heuristic, classic PSO and
//! GA baselines, an eleven-function benchmark suite, and a reproducible
//! trial-statistics harness.
//!
//! The squid optimizer sorts its population each generation and splits it
//! in half. The fitter primary swarm explores by mutual attraction with
//! distance-attenuated brightness; the secondary swarm exploits by jumping
//! around the current best with scaled difference vectors. Squid migrate
//! between the halves every generation as fortunes change.
//!
//! # Quick start
//!
//! ```
//! use squidopt::{registry_lookup, ssa_minimize, RngStream, SsaParams};
//!
//! let objective = registry_lookup("sphere", Some(4)).unwrap();
//! let params = SsaParams {
//!     max_evaluations: Some(20_000),
//!     max_generations: usize::MAX,
//!     ..SsaParams::default()
//! };
//! let mut rng = RngStream::new(42);
//! let result = ssa_minimize(&objective, &params, &mut rng, false).unwrap();
//! assert!(result.best_fitness < 1e-3);
//! ```
//!
//! # Examples
//!
//! Each major capability has a runnable example:
//!
//! ```text
//! cargo run --release --example minimize_sphere     # squid optimizer basics
//! cargo run --release --example custom_objective    # your own function
//! cargo run --release --example compare_algorithms  # squid vs PSO vs GA
//! cargo run --release --example trace_squid_paths   # per-generation traces
//! cargo run --release --example experiment_stats    # CSV/JSON exports
//! cargo run --release --example parameter_sweep     # tuning the randomness decay
//! ```
//!
//! The `squidopt` binary wraps the harness as a CLI
//! (`run`, `trace`, `suite`, `list-functions`).

pub mod benchmarks;
mod error;
mod evaluator;
pub mod ga;
pub mod harness;
mod objective;
pub mod pso;
mod result;
mod rng;
mod space;
mod squid;
pub mod ssa;

pub use benchmarks::{find_benchmark, registry, registry_lookup, BenchmarkSpec};
pub use error::{Error, Result};
pub use ga::{ga_minimize, GaParams};
pub use harness::{
    aggregate_summary, comparison_protocol, run_experiment, run_suite, run_traced, Algo,
    ExperimentConfig, ExperimentReport, SuiteConfig, SummaryRow, TrialStats,
};
pub use objective::Objective;
pub use pso::{pso_minimize, PsoParams};
pub use result::{OptResult, SwarmTag, TraceRecord};
pub use rng::{arcsine_from_uniform, RngStream};
pub use space::SearchSpace;
pub use squid::Squid;
pub use ssa::{ssa_minimize, Gamma, SsaParams};
