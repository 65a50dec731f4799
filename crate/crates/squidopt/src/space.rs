//! Box-constrained search spaces and the clamping policy.

use crate::error::{Error, Result};

/// A rectangular search domain: per-axis lower and upper bounds.
///
/// Every candidate a run produces lives inside the box; positions are
/// hard-clamped back after each update.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchSpace {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl SearchSpace {
    /// Builds a space from explicit per-axis bounds.
    pub fn with_bounds(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.is_empty() || lower.len() != upper.len() {
            return Err(Error::InvalidParameter(format!(
                "bounds must be non-empty and equal length, got {} and {}",
                lower.len(),
                upper.len()
            )));
        }
        for (k, (lo, hi)) in lower.iter().zip(&upper).enumerate() {
            if !lo.is_finite() || !hi.is_finite() || lo >= hi {
                return Err(Error::InvalidParameter(format!(
                    "axis {k}: bounds must be finite with lower < upper, got [{lo}, {hi}]"
                )));
            }
        }
        Ok(Self { lower, upper })
    }

    /// A `dim`-dimensional box with the same interval on every axis.
    pub fn continuous(dim: usize, lower: f64, upper: f64) -> Result<Self> {
        Self::with_bounds(vec![lower; dim], vec![upper; dim])
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    /// Width of axis `k`.
    pub fn span(&self, k: usize) -> f64 {
        self.upper[k] - self.lower[k]
    }

    /// Average axis width; the length scale used by the auto absorption rule.
    pub fn mean_span(&self) -> f64 {
        let total: f64 = (0..self.dim()).map(|k| self.span(k)).sum();
        total / self.dim() as f64
    }

    pub fn contains(&self, point: &[f64]) -> bool {
        point.len() == self.dim()
            && point
                .iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(x, (lo, hi))| *x >= *lo && *x <= *hi)
    }

    /// Projects each component onto its axis interval, in place.
    /// In-bounds input is left unchanged; the projection is idempotent.
    pub fn clamp(&self, point: &mut [f64]) {
        assert_eq!(
            point.len(),
            self.dim(),
            "clamp: point has dimension {}, space has {}",
            point.len(),
            self.dim()
        );
        for (x, (lo, hi)) in point.iter_mut().zip(self.lower.iter().zip(&self.upper)) {
            *x = x.clamp(*lo, *hi);
        }
    }

    /// Clamping as a pure function.
    pub fn clamped(&self, point: &[f64]) -> Vec<f64> {
        let mut out = point.to_vec();
        self.clamp(&mut out);
        out
    }
}
