//! The dual-swarm squid optimizer.
//!
//! Each generation the population is sorted by fitness and split in half.
//! The fitter half (the primary swarm) evolves by mutual attraction: a
//! squid moves toward every brighter squid it can see, with brightness
//! derived from fitness and attenuated by distance. The less fit half (the
//! secondary swarm) hunts as a herd: each member jumps to the current best
//! position plus a scaled difference of two random colleagues, optionally
//! keeping the move only when it improves. Membership is re-decided every
//! generation, so squid migrate between the two swarms constantly.

use crate::error::{Error, Result};
use crate::evaluator::{Evaluator, Stop};
use crate::objective::Objective;
use crate::result::{OptResult, SwarmTag, TraceRecord};
use crate::rng::RngStream;
use crate::space::SearchSpace;
use crate::squid::Squid;

/// Absorption coefficient: explicit, or standardized from the search-space
/// scale at run start.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Gamma {
    /// `1 / (span^2 * (1 + ln beta0))` with `span` the mean axis width.
    Auto,
    Fixed(f64),
}

/// Tuning parameters for [`ssa_minimize`].
#[derive(Debug, Clone, PartialEq)]
pub struct SsaParams {
    /// Population size `n`; must be even so the swarm halves cleanly.
    pub population: usize,
    /// Randomness amplitude in `[0, 1]`.
    pub alpha: f64,
    /// Per-generation randomness-reduction factor in `(0, 1]`.
    pub delta: f64,
    /// Attraction scale assigned to the brightest squid of a generation.
    pub beta0: f64,
    /// Light absorption coefficient.
    pub gamma: Gamma,
    /// Light cutoff length; no attraction beyond it. Defaults to `1/gamma`.
    pub cutoff: Option<f64>,
    /// Mutation factor bound `F` in `[0, 2]` for the secondary swarm.
    pub mutation_factor: f64,
    /// Draw `F` uniformly from `[0, mutation_factor]` per squid per
    /// generation instead of using the fixed value.
    pub sample_mutation_factor: bool,
    /// Accept a secondary move only when it improves that squid.
    pub greedy_secondary: bool,
    pub max_generations: usize,
    pub max_evaluations: Option<usize>,
    pub max_seconds: Option<f64>,
    pub target_fitness: Option<f64>,
}

/// Defaults tuned on the benchmark suite at a 50,000-evaluation budget.
///
/// The small population buys several hundred generations per budget; the
/// full-amplitude kick with a slow decay anneals the swarm spread from
/// exploration to refinement; `beta0 > 1` lets attraction overshoot its
/// target, which helps escaping narrow valley traps; the non-greedy
/// secondary keeps the herd stirring instead of piling onto the incumbent.
/// Shorter budgets want a faster decay (see the `parameter_sweep` example).
impl Default for SsaParams {
    fn default() -> Self {
        Self {
            population: 24,
            alpha: 1.0,
            delta: 0.992,
            beta0: 2.0,
            gamma: Gamma::Auto,
            cutoff: None,
            mutation_factor: 2.0,
            sample_mutation_factor: true,
            greedy_secondary: false,
            max_generations: 1000,
            max_evaluations: None,
            max_seconds: None,
            target_fitness: None,
        }
    }
}

impl SsaParams {
    pub fn validate(&self) -> Result<()> {
        if self.population < 2 || self.population % 2 != 0 {
            return Err(Error::InvalidParameter(format!(
                "population must be even and at least 2, got {}",
                self.population
            )));
        }
        if !(0.0..=1.0).contains(&self.alpha) {
            return Err(Error::InvalidParameter(format!(
                "alpha must be in [0, 1], got {}",
                self.alpha
            )));
        }
        if !(self.delta > 0.0 && self.delta <= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "delta must be in (0, 1], got {}",
                self.delta
            )));
        }
        if !(self.beta0 > 0.0) || !self.beta0.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "beta0 must be positive, got {}",
                self.beta0
            )));
        }
        if let Gamma::Fixed(g) = self.gamma {
            if !(g > 0.0) || !g.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "gamma must be positive, got {g}"
                )));
            }
        }
        if let Some(c) = self.cutoff {
            if !(c > 0.0) {
                return Err(Error::InvalidParameter(format!(
                    "cutoff must be positive, got {c}"
                )));
            }
        }
        if !(0.0..=2.0).contains(&self.mutation_factor) {
            return Err(Error::InvalidParameter(format!(
                "mutation_factor must be in [0, 2], got {}",
                self.mutation_factor
            )));
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
        if let Some(s) = self.max_seconds {
            if !(s > 0.0) {
                return Err(Error::InvalidParameter(format!(
                    "max_seconds must be positive, got {s}"
                )));
            }
        }
        Ok(())
    }
}

/// Indices of the fitter half (`primary`) and the rest (`secondary`) after
/// a stable fitness sort.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwarmPartition {
    pub primary: Vec<usize>,
    pub secondary: Vec<usize>,
}

/// Light intensity at distance `r`: `i0 / (1 + gamma r^2)` up to the
/// cutoff length, zero beyond it.
pub fn light_intensity(r: f64, i0: f64, gamma: f64, cutoff: f64) -> f64 {
    assert!(r >= 0.0, "light_intensity: negative distance {r}");
    if r > cutoff {
        0.0
    } else {
        i0 / (1.0 + gamma * r * r)
    }
}

/// Attraction exerted over distance `r`; same falloff as the intensity.
pub fn attractiveness(beta_i0: f64, r: f64, gamma: f64, cutoff: f64) -> f64 {
    assert!(r >= 0.0, "attractiveness: negative distance {r}");
    if r > cutoff {
        0.0
    } else {
        beta_i0 / (1.0 + gamma * r * r)
    }
}

/// Standardized absorption coefficient `1 / (scale^2 (1 + ln beta0))`.
///
/// `avg_beta0` must exceed `1/e` so the coefficient stays positive.
pub fn default_gamma(avg_scale: f64, avg_beta0: f64) -> Result<f64> {
    if !(avg_scale > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "average scale must be positive, got {avg_scale}"
        )));
    }
    if avg_beta0 <= (-1.0f64).exp() {
        return Err(Error::InvalidParameter(format!(
            "average beta0 must exceed 1/e for a positive gamma, got {avg_beta0}"
        )));
    }
    Ok(1.0 / (avg_scale * avg_scale * (1.0 + avg_beta0.ln())))
}

/// Random displacement for generation `t`: each component is
/// `alpha * delta^t * (A - 1/2)` with `A` an arcsine draw, so the
/// per-component envelope is `alpha * delta^t / 2`.
pub fn random_step(t: usize, dim: usize, params: &SsaParams, rng: &mut RngStream) -> Vec<f64> {
    let mut step = vec![0.0; dim];
    random_step_into(&mut step, t, params.alpha, params.delta, rng);
    step
}

fn random_step_into(step: &mut [f64], t: usize, alpha: f64, delta: f64, rng: &mut RngStream) {
    let amplitude = alpha * delta.powi(t as i32);
    for s in step.iter_mut() {
        *s = amplitude * (rng.sample_arcsine() - 0.5);
    }
}

/// Per-squid attraction strengths: an affine rescale of the generation's
/// fitness range mapping the best squid to `beta0` and the worst to zero.
/// A flat generation gives every squid `beta0`.
pub fn brightness_scale(fitnesses: &[f64], beta0: f64) -> Result<Vec<f64>> {
    if fitnesses.is_empty() {
        return Err(Error::InvalidParameter(
            "brightness_scale requires at least one squid".into(),
        ));
    }
    let min = fitnesses.iter().copied().fold(f64::INFINITY, f64::min);
    let max = fitnesses.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if min == max {
        return Ok(vec![beta0; fitnesses.len()]);
    }
    Ok(fitnesses
        .iter()
        .map(|f| beta0 * (max - f) / (max - min))
        .collect())
}

/// Stable ascending fitness sort; the better half becomes the primary
/// swarm, the rest the secondary swarm.
pub fn split_population(swarm: &[Squid]) -> Result<SwarmPartition> {
    if swarm.is_empty() || swarm.len() % 2 != 0 {
        return Err(Error::InvalidParameter(format!(
            "population must be even and non-empty to split, got {}",
            swarm.len()
        )));
    }
    let mut order: Vec<usize> = (0..swarm.len()).collect();
    order.sort_by(|&a, &b| swarm[a].fitness.total_cmp(&swarm[b].fitness));
    let half = swarm.len() / 2;
    Ok(SwarmPartition {
        primary: order[..half].to_vec(),
        secondary: order[half..].to_vec(),
    })
}

/// The herd jump of the secondary swarm: `best + factor * (a - b)`,
/// before clamping.
pub fn secondary_candidate(best: &[f64], colleague_a: &[f64], colleague_b: &[f64], factor: f64) -> Vec<f64> {
    best.iter()
        .zip(colleague_a.iter().zip(colleague_b))
        .map(|(x, (a, b))| x + factor * (a - b))
        .collect()
}

fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

fn pair_mut(squids: &mut [Squid], i: usize, j: usize) -> (&mut Squid, &Squid) {
    debug_assert_ne!(i, j);
    if i < j {
        let (head, tail) = squids.split_at_mut(j);
        (&mut head[i], &tail[0])
    } else {
        let (head, tail) = squids.split_at_mut(i);
        (&mut tail[0], &head[j])
    }
}

/// Attraction sweep over the primary sublist, in place.
///
/// Squid `i` moves toward every squid currently fitter than it; updated
/// positions and fitnesses influence the later pairs. Attraction strengths
/// are frozen at pass entry, distances are live. Each squid receives its
/// random kick exactly once per generation, folded into its first move;
/// a squid with nothing brighter in view (the generation leader) takes the
/// kick on its own.
pub(crate) fn primary_pass(
    squids: &mut [Squid],
    t: usize,
    params: &SsaParams,
    gamma: f64,
    cutoff: f64,
    space: &SearchSpace,
    rng: &mut RngStream,
    ev: &mut Evaluator<'_>,
) -> std::result::Result<(), Stop> {
    if squids.is_empty() {
        return Ok(());
    }
    let dim = space.dim();
    let entry_fitness: Vec<f64> = squids.iter().map(|s| s.fitness).collect();
    let scales = brightness_scale(&entry_fitness, params.beta0).expect("sublist is non-empty");
    let mut step = vec![0.0; dim];
    for i in 0..squids.len() {
        let mut kicked = false;
        for j in 0..squids.len() {
            if j == i || squids[j].fitness >= squids[i].fitness {
                continue;
            }
            if kicked {
                step.fill(0.0);
            } else {
                random_step_into(&mut step, t, params.alpha, params.delta, rng);
            }
            let (si, sj) = pair_mut(squids, i, j);
            let r = euclidean(&si.position, &sj.position);
            let beta = attractiveness(scales[j], r, gamma, cutoff);
            for k in 0..dim {
                si.position[k] += beta * (sj.position[k] - si.position[k]) + step[k];
            }
            space.clamp(&mut si.position);
            squids[i].fitness = ev.eval(&squids[i].position)?;
            kicked = true;
        }
        if !kicked {
            random_step_into(&mut step, t, params.alpha, params.delta, rng);
            for k in 0..dim {
                squids[i].position[k] += step[k];
            }
            space.clamp(&mut squids[i].position);
            squids[i].fitness = ev.eval(&squids[i].position)?;
        }
    }
    Ok(())
}

/// Predator-prey sweep over the secondary sublist, in place.
///
/// Every squid jumps to `best + F (x_r1 - x_r2)` with two distinct random
/// colleagues drawn from the sublist, already-updated members included.
/// With fewer than three members no distinct pair exists and the
/// difference degenerates to zero, pulling every squid straight to `best`.
pub(crate) fn secondary_pass(
    squids: &mut [Squid],
    best: &Squid,
    params: &SsaParams,
    space: &SearchSpace,
    rng: &mut RngStream,
    ev: &mut Evaluator<'_>,
) -> std::result::Result<(), Stop> {
    let m = squids.len();
    if m == 0 {
        return Ok(());
    }
    let mut candidate = vec![0.0; space.dim()];
    for i in 0..m {
        let factor = if params.sample_mutation_factor {
            rng.range(0.0, params.mutation_factor)
        } else {
            params.mutation_factor
        };
        let (r1, r2) = if m >= 3 { distinct_pair(rng, m, i) } else { (i, i) };
        for (k, c) in candidate.iter_mut().enumerate() {
            *c = best.position[k] + factor * (squids[r1].position[k] - squids[r2].position[k]);
        }
        space.clamp(&mut candidate);
        let fitness = ev.eval(&candidate)?;
        if !params.greedy_secondary || fitness < squids[i].fitness {
            squids[i].position.copy_from_slice(&candidate);
            squids[i].fitness = fitness;
        }
    }
    Ok(())
}

/// Two distinct indices in `0..m`, both different from `i`.
fn distinct_pair(rng: &mut RngStream, m: usize, i: usize) -> (usize, usize) {
    let r1 = loop {
        let c = rng.index(m);
        if c != i {
            break c;
        }
    };
    let r2 = loop {
        let c = rng.index(m);
        if c != i && c != r1 {
            break c;
        }
    };
    (r1, r2)
}

fn resolve_gamma(params: &SsaParams, space: &SearchSpace) -> Result<f64> {
    match params.gamma {
        Gamma::Fixed(g) => Ok(g),
        Gamma::Auto => default_gamma(space.mean_span(), params.beta0),
    }
}

/// Runs the dual-swarm optimizer on `objective`.
///
/// The loop evaluates, splits, sweeps the primary and secondary halves and
/// updates the incumbent, stopping at `max_generations`, when the
/// evaluation budget or wall-clock cap is reached, or once the incumbent
/// reaches `target_fitness`. A non-finite objective value aborts the run
/// with the offending position in the error.
pub fn ssa_minimize(
    objective: &Objective,
    params: &SsaParams,
    rng: &mut RngStream,
    record_trace: bool,
) -> Result<OptResult> {
    params.validate()?;
    let space = objective.space();
    let gamma = resolve_gamma(params, space)?;
    let cutoff = params.cutoff.unwrap_or(1.0 / gamma);
    let n = params.population;
    let half = n / 2;

    let mut ev = Evaluator::new(objective, params.max_evaluations, params.max_seconds);
    let mut squids: Vec<Squid> = Vec::with_capacity(n);
    let mut ids: Vec<usize> = (0..n).collect();
    let mut halted = false;
    for _ in 0..n {
        let position = rng.uniform_point(space);
        match ev.eval(&position) {
            Ok(fitness) => squids.push(Squid::new(position, fitness)),
            Err(stop) => {
                halted = note_stop(stop)?;
                break;
            }
        }
    }

    let mut history = vec![ev.best_fitness()];
    let mut trace = record_trace.then(Vec::new);
    let mut generations = 0usize;

    while !halted
        && squids.len() == n
        && generations < params.max_generations
        && !target_reached(ev.best_fitness(), params)
    {
        let partition = split_population(&squids)?;
        apply_partition(&mut squids, &mut ids, &partition);

        let outcome = primary_pass(
            &mut squids[..half],
            generations,
            params,
            gamma,
            cutoff,
            space,
            rng,
            &mut ev,
        );
        if let Err(stop) = outcome {
            halted = note_stop(stop)?;
        }
        if !halted {
            // the herd pursues the best solution found so far
            let best = Squid::new(ev.best_position().to_vec(), ev.best_fitness());
            let outcome = secondary_pass(&mut squids[half..], &best, params, space, rng, &mut ev);
            if let Err(stop) = outcome {
                halted = note_stop(stop)?;
            }
        }
        if halted {
            break;
        }

        generations += 1;
        history.push(ev.best_fitness());
        if let Some(records) = trace.as_mut() {
            for (slot, squid) in squids.iter().enumerate() {
                records.push(TraceRecord {
                    generation: generations,
                    squid_id: ids[slot],
                    swarm_tag: if slot < half {
                        SwarmTag::Primary
                    } else {
                        SwarmTag::Secondary
                    },
                    position: squid.position.clone(),
                    fitness: squid.fitness,
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

fn target_reached(best: f64, params: &SsaParams) -> bool {
    params.target_fitness.is_some_and(|t| best <= t)
}

/// Budget and deadline stops end the run; a non-finite value aborts it.
fn note_stop(stop: Stop) -> Result<bool> {
    match stop {
        Stop::Budget | Stop::Deadline => Ok(true),
        Stop::NonFinite { position, value } => Err(Error::NonFiniteObjective { position, value }),
    }
}

fn apply_partition(squids: &mut Vec<Squid>, ids: &mut Vec<usize>, partition: &SwarmPartition) {
    let order: Vec<usize> = partition
        .primary
        .iter()
        .chain(partition.secondary.iter())
        .copied()
        .collect();
    *squids = order.iter().map(|&k| squids[k].clone()).collect();
    *ids = order.iter().map(|&k| ids[k]).collect();
}
