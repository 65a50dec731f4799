//! Particle swarm baseline in its original form.
//!
//! Velocity update `v <- w v + c1 r1 (pbest - x) + c2 r2 (gbest - x)` with
//! componentwise uniform `r1`, `r2`, a per-axis velocity clamp, and a hard
//! position clamp to the search box. Personal and global bests update
//! immediately after each particle's evaluation.

use crate::error::{Error, Result};
use crate::evaluator::{Evaluator, Stop};
use crate::objective::Objective;
use crate::result::{OptResult, SwarmTag, TraceRecord};
use crate::rng::RngStream;
use crate::space::SearchSpace;

#[derive(Debug, Clone, PartialEq)]
pub struct PsoParams {
    pub population: usize,
    /// Inertia weight `w`.
    pub inertia: f64,
    /// Cognitive acceleration `c1` toward the personal best.
    pub cognitive: f64,
    /// Social acceleration `c2` toward the global best.
    pub social: f64,
    /// Velocity clamp fraction `k` in `(0, 1]`: per-axis limit
    /// `k * span / 2`.
    pub clamp_k: f64,
    pub max_generations: usize,
    pub max_evaluations: Option<usize>,
    pub max_seconds: Option<f64>,
    pub target_fitness: Option<f64>,
}

impl Default for PsoParams {
    fn default() -> Self {
        Self {
            population: 40,
            inertia: 1.0,
            cognitive: 2.0,
            social: 2.0,
            clamp_k: 0.5,
            max_generations: 1000,
            max_evaluations: None,
            max_seconds: None,
            target_fitness: None,
        }
    }
}

impl PsoParams {
    pub fn validate(&self) -> Result<()> {
        if self.population < 2 {
            return Err(Error::InvalidParameter(format!(
                "population must be at least 2, got {}",
                self.population
            )));
        }
        if !(self.clamp_k > 0.0 && self.clamp_k <= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "clamp_k must be in (0, 1], got {}",
                self.clamp_k
            )));
        }
        for (name, v) in [
            ("inertia", self.inertia),
            ("cognitive", self.cognitive),
            ("social", self.social),
        ] {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be finite and non-negative, got {v}"
                )));
            }
        }
        if self.max_generations == 0 {
            return Err(Error::InvalidParameter(
                "max_generations must be positive".into(),
            ));
        }
        if self.max_evaluations == Some(0) {
            return Err(Error::InvalidParameter(
                "max_evaluations must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// Clamps each velocity component to `[-k span/2, +k span/2]` for its axis.
pub fn clamp_velocity(velocity: &mut [f64], space: &SearchSpace, k: f64) {
    for (axis, v) in velocity.iter_mut().enumerate() {
        let limit = k * space.span(axis) / 2.0;
        *v = v.clamp(-limit, limit);
    }
}

/// Runs the particle swarm baseline on `objective`.
pub fn pso_minimize(
    objective: &Objective,
    params: &PsoParams,
    rng: &mut RngStream,
    record_trace: bool,
) -> Result<OptResult> {
    params.validate()?;
    let space = objective.space();
    let dim = space.dim();
    let n = params.population;

    let mut ev = Evaluator::new(objective, params.max_evaluations, params.max_seconds);
    let mut positions: Vec<Vec<f64>> = Vec::with_capacity(n);
    let mut fitnesses: Vec<f64> = Vec::with_capacity(n);
    let mut halted = false;
    for _ in 0..n {
        let p = rng.uniform_point(space);
        match ev.eval(&p) {
            Ok(f) => {
                positions.push(p);
                fitnesses.push(f);
            }
            Err(stop) => {
                halted = note_stop(stop)?;
                break;
            }
        }
    }

    let mut velocities = vec![vec![0.0; dim]; positions.len()];
    let mut personal_best = positions.clone();
    let mut personal_best_fitness = fitnesses.clone();
    let (mut global_best, mut global_best_fitness) = match personal_best_fitness
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| a.total_cmp(b))
    {
        Some((idx, &f)) => (personal_best[idx].clone(), f),
        None => (Vec::new(), f64::INFINITY),
    };

    let mut history = vec![ev.best_fitness()];
    let mut trace = record_trace.then(Vec::new);
    let mut generations = 0usize;

    'outer: while !halted
        && positions.len() == n
        && generations < params.max_generations
        && !target_reached(ev.best_fitness(), params)
    {
        for i in 0..n {
            for k in 0..dim {
                let r1 = rng.next_f64();
                let r2 = rng.next_f64();
                velocities[i][k] = params.inertia * velocities[i][k]
                    + params.cognitive * r1 * (personal_best[i][k] - positions[i][k])
                    + params.social * r2 * (global_best[k] - positions[i][k]);
            }
            clamp_velocity(&mut velocities[i], space, params.clamp_k);
            for k in 0..dim {
                positions[i][k] += velocities[i][k];
            }
            space.clamp(&mut positions[i]);
            match ev.eval(&positions[i]) {
                Ok(f) => {
                    fitnesses[i] = f;
                    if f < personal_best_fitness[i] {
                        personal_best_fitness[i] = f;
                        personal_best[i].copy_from_slice(&positions[i]);
                    }
                    if f < global_best_fitness {
                        global_best_fitness = f;
                        global_best.copy_from_slice(&positions[i]);
                    }
                }
                Err(stop) => {
                    note_stop(stop)?;
                    break 'outer;
                }
            }
        }
        generations += 1;
        history.push(ev.best_fitness());
        if let Some(records) = trace.as_mut() {
            for (id, (pos, fit)) in positions.iter().zip(&fitnesses).enumerate() {
                records.push(TraceRecord {
                    generation: generations,
                    squid_id: id,
                    swarm_tag: SwarmTag::None,
                    position: pos.clone(),
                    fitness: *fit,
                });
            }
        }
    }

    let evaluations = ev.count();
    let (best_position, best_fitness) = ev.into_best();
    Ok(OptResult {
        best_position,
        best_fitness,
        evaluations,
        generations,
        best_history: history,
        trace,
    })
}

fn target_reached(best: f64, params: &PsoParams) -> bool {
    params.target_fitness.is_some_and(|t| best <= t)
}

fn note_stop(stop: Stop) -> Result<bool> {
    match stop {
        Stop::Budget | Stop::Deadline => Ok(true),
        Stop::NonFinite { position, value } => Err(Error::NonFiniteObjective { position, value }),
    }
}
