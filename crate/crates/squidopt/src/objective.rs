//! The objective-function abstraction shared by all optimizers.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::space::SearchSpace;

/// A minimization target: a search space, a deterministic evaluation map,
/// and (when known) the global optimum used for success-rate accounting.
#[derive(Clone)]
pub struct Objective {
    space: SearchSpace,
    eval_fn: Arc<dyn Fn(&[f64]) -> f64 + Send + Sync>,
    known_optimum: Option<(Vec<f64>, f64)>,
}

impl Objective {
    pub fn new<F>(space: SearchSpace, eval_fn: F) -> Self
    where
        F: Fn(&[f64]) -> f64 + Send + Sync + 'static,
    {
        Self {
            space,
            eval_fn: Arc::new(eval_fn),
            known_optimum: None,
        }
    }

    /// Attaches the known optimum; the position must lie inside the space.
    pub fn with_known_optimum(mut self, position: Vec<f64>, value: f64) -> Result<Self> {
        if !self.space.contains(&position) {
            return Err(Error::InvalidParameter(format!(
                "known optimum {position:?} lies outside the search space"
            )));
        }
        self.known_optimum = Some((position, value));
        Ok(self)
    }

    pub fn space(&self) -> &SearchSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Evaluates the objective at `point` (minimization sense).
    pub fn eval(&self, point: &[f64]) -> f64 {
        assert_eq!(
            point.len(),
            self.space.dim(),
            "objective evaluated at dimension {}, expected {}",
            point.len(),
            self.space.dim()
        );
        (self.eval_fn)(point)
    }

    pub fn known_optimum(&self) -> Option<(&[f64], f64)> {
        self.known_optimum
            .as_ref()
            .map(|(pos, val)| (pos.as_slice(), *val))
    }
}

impl fmt::Debug for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Objective")
            .field("space", &self.space)
            .field("known_optimum", &self.known_optimum)
            .finish_non_exhaustive()
    }
}
