//! Seeded random numbers with a fixed, documented generator.
//!
//! Every stochastic component in the crate draws from [`RngStream`], a thin
//! wrapper around the ChaCha8 stream cipher generator. ChaCha8 is
//! counter-based and produces bit-identical sequences for a given seed on
//! every platform, which is what makes whole experiments replayable from a
//! single `u64`. Streams for parallel trials are derived through
//! [`RngStream::derive`], a SplitMix64 mix of `(base seed, label, index)`,
//! so each trial owns an independent generator.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::space::SearchSpace;

/// One step of the SplitMix64 output function. Used only for seed
/// derivation, never as the run generator itself.
fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Deterministic generator owned by exactly one run or trial.
#[derive(Debug, Clone)]
pub struct RngStream {
    seed: u64,
    rng: ChaCha8Rng,
}

impl RngStream {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// The seed this stream was created with.
    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Mixes `(base, label, index)` into a child seed.
    ///
    /// The mix is a SplitMix64 chain over the label bytes and the index, so
    /// distinct `(label, index)` pairs land on distinct, uncorrelated seeds
    /// and any individual trial can be re-run in isolation.
    pub fn derive(base: u64, label: &str, index: u64) -> u64 {
        let mut h = splitmix64(base);
        for &b in label.as_bytes() {
            h = splitmix64(h ^ u64::from(b));
        }
        splitmix64(h ^ index)
    }

    /// Child stream for a labelled parallel work item.
    pub fn child(&self, label: &str, index: u64) -> RngStream {
        RngStream::new(Self::derive(self.seed, label, index))
    }

    /// Uniform on `[0, 1)` with 53 random bits.
    pub fn next_f64(&mut self) -> f64 {
        // Standard 53-bit conversion: the top 53 bits of a u64 scaled by 2^-53.
        (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform on `[lo, hi)`.
    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + self.next_f64() * (hi - lo)
    }

    /// Uniform index in `0..n` via the widening-multiply reduction.
    pub fn index(&mut self, n: usize) -> usize {
        assert!(n > 0, "index: empty range");
        ((u128::from(self.rng.next_u64()) * n as u128) >> 64) as usize
    }

    /// Standard normal deviate (Box-Muller, one value per call).
    pub fn normal(&mut self) -> f64 {
        // u is kept away from zero so the logarithm stays finite.
        let u = 1.0 - self.next_f64();
        let v = self.next_f64();
        (-2.0 * u.ln()).sqrt() * (2.0 * std::f64::consts::PI * v).cos()
    }

    /// Draw from the arcsine distribution on `[0, 1]`.
    ///
    /// Exact inverse-CDF sampling: the CDF is `(2/pi) * asin(sqrt(x))`.
    pub fn sample_arcsine(&mut self) -> f64 {
        arcsine_from_uniform(self.next_f64())
    }

    /// Point with each component uniform on its axis interval.
    pub fn uniform_point(&mut self, space: &SearchSpace) -> Vec<f64> {
        (0..space.dim())
            .map(|k| self.range(space.lower()[k], space.upper()[k]))
            .collect()
    }
}

/// The arcsine inverse CDF: maps uniform `u` to `sin^2(pi * u / 2)`.
pub fn arcsine_from_uniform(u: f64) -> f64 {
    let s = (std::f64::consts::FRAC_PI_2 * u).sin();
    s * s
}
