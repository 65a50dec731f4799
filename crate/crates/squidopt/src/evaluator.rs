//! Budgeted objective evaluation with exact call accounting.

use std::time::Instant;

use crate::objective::Objective;

/// Why a run stopped mid-pass.
#[derive(Debug)]
pub(crate) enum Stop {
    /// The evaluation budget is exhausted; the run ends normally.
    Budget,
    /// The wall-clock cap elapsed; the run ends normally.
    Deadline,
    /// The objective produced NaN or an infinity; the run aborts.
    NonFinite { position: Vec<f64>, value: f64 },
}

/// Wraps an [`Objective`] with budget enforcement, an exact evaluation
/// counter, and incumbent tracking over every point evaluated.
///
/// Counting the calls here (rather than in each algorithm) is what makes
/// the reported `evaluations` field trustworthy, and tracking the incumbent
/// here guarantees `best_fitness` is the minimum over all evaluations even
/// when an algorithm later moves away from a good point.
pub(crate) struct Evaluator<'a> {
    objective: &'a Objective,
    count: usize,
    max_evaluations: Option<usize>,
    deadline: Option<(Instant, f64)>,
    best_position: Vec<f64>,
    best_fitness: f64,
}

impl<'a> Evaluator<'a> {
    pub fn new(
        objective: &'a Objective,
        max_evaluations: Option<usize>,
        max_seconds: Option<f64>,
    ) -> Self {
        Self {
            objective,
            count: 0,
            max_evaluations,
            deadline: max_seconds.map(|s| (Instant::now(), s)),
            best_position: Vec::new(),
            best_fitness: f64::INFINITY,
        }
    }

    pub fn eval(&mut self, point: &[f64]) -> Result<f64, Stop> {
        if let Some(max) = self.max_evaluations {
            if self.count >= max {
                return Err(Stop::Budget);
            }
        }
        if let Some((start, secs)) = self.deadline {
            if start.elapsed().as_secs_f64() >= secs {
                return Err(Stop::Deadline);
            }
        }
        let value = self.objective.eval(point);
        self.count += 1;
        if !value.is_finite() {
            return Err(Stop::NonFinite {
                position: point.to_vec(),
                value,
            });
        }
        if value < self.best_fitness {
            self.best_fitness = value;
            self.best_position.clear();
            self.best_position.extend_from_slice(point);
        }
        Ok(value)
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn best_fitness(&self) -> f64 {
        self.best_fitness
    }

    pub fn best_position(&self) -> &[f64] {
        &self.best_position
    }

    pub fn into_best(self) -> (Vec<f64>, f64) {
        (self.best_position, self.best_fitness)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::SearchSpace;

    fn sphere_objective() -> Objective {
        let space = SearchSpace::continuous(2, -5.0, 5.0).unwrap();
        Objective::new(space, |x| x.iter().map(|v| v * v).sum())
    }

    #[test]
    fn budget_is_a_hard_cap() {
        let obj = sphere_objective();
        let mut ev = Evaluator::new(&obj, Some(3), None);
        for _ in 0..3 {
            assert!(ev.eval(&[1.0, 1.0]).is_ok());
        }
        assert!(matches!(ev.eval(&[1.0, 1.0]), Err(Stop::Budget)));
        assert_eq!(ev.count(), 3);
    }

    #[test]
    fn incumbent_tracks_minimum_over_all_calls() {
        let obj = sphere_objective();
        let mut ev = Evaluator::new(&obj, None, None);
        ev.eval(&[2.0, 0.0]).unwrap();
        ev.eval(&[0.5, 0.0]).unwrap();
        ev.eval(&[3.0, 3.0]).unwrap();
        let (pos, fit) = ev.into_best();
        assert_eq!(pos, vec![0.5, 0.0]);
        assert_eq!(fit, 0.25);
    }

    #[test]
    fn non_finite_value_stops_with_position() {
        let space = SearchSpace::continuous(1, -1.0, 1.0).unwrap();
        let obj = Objective::new(space, |x| if x[0] > 0.0 { f64::NAN } else { x[0] });
        let mut ev = Evaluator::new(&obj, None, None);
        assert!(ev.eval(&[-0.5]).is_ok());
        match ev.eval(&[0.5]) {
            Err(Stop::NonFinite { position, value }) => {
                assert_eq!(position, vec![0.5]);
                assert!(value.is_nan());
            }
            other => panic!("expected non-finite stop, got {other:?}"),
        }
    }
}
