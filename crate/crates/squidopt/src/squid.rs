//! The candidate solution carried by every population member.

/// A position in the search space together with its cached objective value.
///
/// The cache is refreshed immediately after every position update, so the
/// fitness field is never stale when an algorithm reads it.
#[derive(Debug, Clone, PartialEq)]
pub struct Squid {
    pub position: Vec<f64>,
    pub fitness: f64,
}

impl Squid {
    pub fn new(position: Vec<f64>, fitness: f64) -> Self {
        Self { position, fitness }
    }
}
