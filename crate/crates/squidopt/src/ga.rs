//! Real-coded genetic algorithm baseline in its original form.
//!
//! Generational replacement without elitism: fitness-proportional
//! selection on rescaled fitness, single-point crossover on the real
//! vector, per-gene Gaussian mutation, full replacement each generation.
//! The incumbent is tracked outside the population for reporting only.

use crate::error::{Error, Result};
use crate::evaluator::{Evaluator, Stop};
use crate::objective::Objective;
use crate::result::{OptResult, SwarmTag, TraceRecord};
use crate::rng::RngStream;
use crate::space::SearchSpace;

/// Minimization weights are `f_max - f_i + EPSILON`; the epsilon keeps the
/// total weight positive on flat landscapes.
const SELECTION_EPSILON: f64 = 1e-12;

/// Mutation standard deviation as a fraction of each axis span.
const MUTATION_SIGMA_FRACTION: f64 = 0.1;

#[derive(Debug, Clone, PartialEq)]
pub struct GaParams {
    pub population: usize,
    pub crossover_prob: f64,
    pub mutation_prob: f64,
    pub max_generations: usize,
    pub max_evaluations: Option<usize>,
    pub max_seconds: Option<f64>,
    pub target_fitness: Option<f64>,
}

impl Default for GaParams {
    fn default() -> Self {
        Self {
            population: 40,
            crossover_prob: 0.95,
            mutation_prob: 0.05,
            max_generations: 1000,
            max_evaluations: None,
            max_seconds: None,
            target_fitness: None,
        }
    }
}

impl GaParams {
    pub fn validate(&self) -> Result<()> {
        if self.population < 2 {
            return Err(Error::InvalidParameter(format!(
                "population must be at least 2, got {}",
                self.population
            )));
        }
        for (name, p) in [
            ("crossover_prob", self.crossover_prob),
            ("mutation_prob", self.mutation_prob),
        ] {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be in [0, 1], got {p}"
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

/// Roulette pick over cumulative weights; `total` is their sum.
fn roulette(cumulative: &[f64], total: f64, rng: &mut RngStream) -> usize {
    let target = rng.next_f64() * total;
    cumulative.partition_point(|&c| c <= target).min(cumulative.len() - 1)
}

/// Single-point crossover: children swap tails after a random cut.
/// With fewer than two genes there is no interior cut and the children
/// are plain copies.
fn crossover(
    parent_a: &[f64],
    parent_b: &[f64],
    rng: &mut RngStream,
) -> (Vec<f64>, Vec<f64>) {
    let dim = parent_a.len();
    if dim < 2 {
        return (parent_a.to_vec(), parent_b.to_vec());
    }
    let cut = 1 + rng.index(dim - 1);
    let mut child_a = parent_a.to_vec();
    let mut child_b = parent_b.to_vec();
    child_a[cut..].copy_from_slice(&parent_b[cut..]);
    child_b[cut..].copy_from_slice(&parent_a[cut..]);
    (child_a, child_b)
}

fn mutate(genes: &mut [f64], space: &SearchSpace, prob: f64, rng: &mut RngStream) {
    for (k, g) in genes.iter_mut().enumerate() {
        if rng.next_f64() < prob {
            *g += MUTATION_SIGMA_FRACTION * space.span(k) * rng.normal();
        }
    }
    space.clamp(genes);
}

/// Runs the generational GA baseline on `objective`.
pub fn ga_minimize(
    objective: &Objective,
    params: &GaParams,
    rng: &mut RngStream,
    record_trace: bool,
) -> Result<OptResult> {
    params.validate()?;
    let space = objective.space();
    let n = params.population;

    let mut ev = Evaluator::new(objective, params.max_evaluations, params.max_seconds);
    let mut population: Vec<Vec<f64>> = Vec::with_capacity(n);
    let mut fitnesses: Vec<f64> = Vec::with_capacity(n);
    let mut halted = false;
    for _ in 0..n {
        let p = rng.uniform_point(space);
        match ev.eval(&p) {
            Ok(f) => {
                population.push(p);
                fitnesses.push(f);
            }
            Err(stop) => {
                halted = note_stop(stop)?;
                break;
            }
        }
    }

    let mut history = vec![ev.best_fitness()];
    let mut trace = record_trace.then(Vec::new);
    let mut generations = 0usize;

    'outer: while !halted
        && population.len() == n
        && generations < params.max_generations
        && !target_reached(ev.best_fitness(), params)
    {
        let f_max = fitnesses.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let mut cumulative = Vec::with_capacity(n);
        let mut total = 0.0;
        for &f in &fitnesses {
            total += f_max - f + SELECTION_EPSILON;
            cumulative.push(total);
        }

        let mut next_population: Vec<Vec<f64>> = Vec::with_capacity(n);
        let mut next_fitnesses: Vec<f64> = Vec::with_capacity(n);
        while next_population.len() < n {
            let a = roulette(&cumulative, total, rng);
            let b = roulette(&cumulative, total, rng);
            let (mut child_a, child_b) = if rng.next_f64() < params.crossover_prob {
                crossover(&population[a], &population[b], rng)
            } else {
                (population[a].clone(), population[b].clone())
            };
            mutate(&mut child_a, space, params.mutation_prob, rng);
            match ev.eval(&child_a) {
                Ok(f) => {
                    next_population.push(child_a);
                    next_fitnesses.push(f);
                }
                Err(stop) => {
                    note_stop(stop)?;
                    break 'outer;
                }
            }
            if next_population.len() < n {
                let mut child_b = child_b;
                mutate(&mut child_b, space, params.mutation_prob, rng);
                match ev.eval(&child_b) {
                    Ok(f) => {
                        next_population.push(child_b);
                        next_fitnesses.push(f);
                    }
                    Err(stop) => {
                        note_stop(stop)?;
                        break 'outer;
                    }
                }
            }
        }
        population = next_population;
        fitnesses = next_fitnesses;

        generations += 1;
        history.push(ev.best_fitness());
        if let Some(records) = trace.as_mut() {
            for (id, (pos, fit)) in population.iter().zip(&fitnesses).enumerate() {
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

fn target_reached(best: f64, params: &GaParams) -> bool {
    params.target_fitness.is_some_and(|t| best <= t)
}

fn note_stop(stop: Stop) -> Result<bool> {
    match stop {
        Stop::Budget | Stop::Deadline => Ok(true),
        Stop::NonFinite { position, value } => Err(Error::NonFiniteObjective { position, value }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sphere(dim: usize, half: f64) -> Objective {
        let space = SearchSpace::continuous(dim, -half, half).unwrap();
        Objective::new(space, |x| x.iter().map(|v| v * v).sum())
    }

    #[test]
    fn no_variation_means_offspring_are_parent_copies() {
        let obj = sphere(3, 5.0);
        let params = GaParams {
            population: 6,
            crossover_prob: 0.0,
            mutation_prob: 0.0,
            max_generations: 4,
            ..GaParams::default()
        };
        let mut rng = RngStream::new(40);
        let result = ga_minimize(&obj, &params, &mut rng, true).unwrap();
        let trace = result.trace.unwrap();
        let initial: Vec<Vec<f64>> = trace
            .iter()
            .filter(|r| r.generation == 1)
            .map(|r| r.position.clone())
            .collect();
        for record in trace.iter().filter(|r| r.generation > 1) {
            assert!(
                initial.contains(&record.position),
                "offspring {:?} is not a copy of any generation-1 member",
                record.position
            );
        }
    }

    #[test]
    fn identical_population_without_mutation_is_invariant() {
        // crossover of identical parents yields identical children, so the
        // population can never change
        let obj = sphere(2, 5.0);
        let params = GaParams {
            population: 4,
            crossover_prob: 0.95,
            mutation_prob: 0.0,
            max_generations: 5,
            ..GaParams::default()
        };
        // seed a run, then verify all trace members per generation coincide
        // with each other when started from a single point: emulate by a
        // tiny space that collapses initialization
        let space = SearchSpace::continuous(2, 1.0 - 1e-12, 1.0 + 1e-12).unwrap();
        let obj2 = Objective::new(space, |x| x.iter().map(|v| v * v).sum());
        let result = ga_minimize(&obj2, &params, &mut RngStream::new(3), true).unwrap();
        let trace = result.trace.unwrap();
        for w in trace.windows(2) {
            assert!((w[0].fitness - w[1].fitness).abs() < 1e-9);
        }
        drop(obj);
    }

    #[test]
    fn population_size_is_constant_even_when_odd() {
        let obj = sphere(2, 5.0);
        let params = GaParams {
            population: 7,
            max_generations: 3,
            ..GaParams::default()
        };
        let result = ga_minimize(&obj, &params, &mut RngStream::new(5), true).unwrap();
        let trace = result.trace.unwrap();
        for g in 1..=result.generations {
            assert_eq!(trace.iter().filter(|r| r.generation == g).count(), 7);
        }
    }

    #[test]
    fn crossover_swaps_tails() {
        let mut rng = RngStream::new(2);
        let (a, b) = crossover(&[1.0, 1.0, 1.0], &[2.0, 2.0, 2.0], &mut rng);
        let ones = a.iter().filter(|&&x| x == 1.0).count();
        assert!(ones == 1 || ones == 2);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x + y, 3.0);
        }
    }

    #[test]
    fn crossover_on_one_gene_copies_parents() {
        let mut rng = RngStream::new(2);
        let (a, b) = crossover(&[1.0], &[2.0], &mut rng);
        assert_eq!(a, vec![1.0]);
        assert_eq!(b, vec![2.0]);
    }

    #[test]
    fn deterministic_under_fixed_seed() {
        let obj = sphere(3, 5.0);
        let params = GaParams {
            population: 10,
            max_generations: 20,
            ..GaParams::default()
        };
        let a = ga_minimize(&obj, &params, &mut RngStream::new(9), true).unwrap();
        let b = ga_minimize(&obj, &params, &mut RngStream::new(9), true).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn budget_is_hard_cap() {
        let obj = sphere(2, 5.0);
        let params = GaParams {
            population: 9,
            max_generations: usize::MAX,
            max_evaluations: Some(200),
            ..GaParams::default()
        };
        let result = ga_minimize(&obj, &params, &mut RngStream::new(1), false).unwrap();
        assert_eq!(result.evaluations, 200);
    }

    #[test]
    fn converges_on_small_sphere() {
        let obj = sphere(2, 5.12);
        let params = GaParams {
            population: 40,
            max_generations: usize::MAX,
            max_evaluations: Some(20_000),
            ..GaParams::default()
        };
        let result = ga_minimize(&obj, &params, &mut RngStream::new(7), false).unwrap();
        assert!(result.best_fitness < 1e-3, "got {}", result.best_fitness);
    }
}
