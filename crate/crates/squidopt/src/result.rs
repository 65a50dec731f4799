//! Run outcomes and per-generation trace records.

use std::fmt;

/// Which half of the population a squid was processed in during a
/// generation. PSO and GA traces use [`SwarmTag::None`] as a fixed
/// placeholder so all trace files share one schema.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SwarmTag {
    Primary,
    Secondary,
    None,
}

impl fmt::Display for SwarmTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SwarmTag::Primary => "primary",
            SwarmTag::Secondary => "secondary",
            SwarmTag::None => "none",
        })
    }
}

/// Snapshot of one population member at the end of one generation.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceRecord {
    pub generation: usize,
    pub squid_id: usize,
    pub swarm_tag: SwarmTag,
    pub position: Vec<f64>,
    pub fitness: f64,
}

/// Result of a single optimization run.
///
/// `best_position`/`best_fitness` are the incumbent: the best point among
/// every objective evaluation the run performed, so the fitness is exactly
/// non-increasing from generation to generation. `best_history` records the
/// incumbent after initialization and after each completed generation.
#[derive(Debug, Clone, PartialEq)]
pub struct OptResult {
    pub best_position: Vec<f64>,
    pub best_fitness: f64,
    pub evaluations: usize,
    pub generations: usize,
    pub best_history: Vec<f64>,
    pub trace: Option<Vec<TraceRecord>>,
}
