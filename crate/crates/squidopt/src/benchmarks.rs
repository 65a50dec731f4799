//! The eleven benchmark functions and their registry.
//!
//! All functions are pure, stateless and minimized as written. Registry
//! entries carry canonical box bounds and the known optimum so the harness
//! can compute success rates. Names double as the CLI `--function`
//! vocabulary.

use std::f64::consts::{E, PI};
use std::sync::LazyLock;

use crate::error::{Error, Result};
use crate::objective::Objective;
use crate::space::SearchSpace;

fn check_dim(x: &[f64], expected: usize, name: &str) {
    assert_eq!(
        x.len(),
        expected,
        "{name}: expected dimension {expected}, got {}",
        x.len()
    );
}

/// Beale function on `[-4.5, 4.5]^2`; minimum 0 at `(3, 0.5)`.
pub fn beale(x: &[f64]) -> f64 {
    check_dim(x, 2, "beale");
    let (a, b) = (x[0], x[1]);
    let t1 = 1.5 - a + a * b;
    let t2 = 2.25 - a + a * b * b;
    let t3 = 2.625 - a + a * b * b * b;
    t1 * t1 + t2 * t2 + t3 * t3
}

/// Easom function on `[-100, 100]^2`; minimum -1 at `(pi, pi)`.
pub fn easom(x: &[f64]) -> f64 {
    check_dim(x, 2, "easom");
    let (a, b) = (x[0], x[1]);
    -a.cos() * b.cos() * (-(a - PI) * (a - PI) - (b - PI) * (b - PI)).exp()
}

/// Michalewicz function with steepness `m` on `[0, pi]^d`.
pub fn michalewicz(x: &[f64], m: u32) -> f64 {
    let mut total = 0.0;
    for (idx, &xi) in x.iter().enumerate() {
        let i = (idx + 1) as f64;
        let s = (i * xi * xi / PI).sin();
        total -= xi.sin() * s.powi(2 * m as i32);
    }
    total
}

fn michalewicz10(x: &[f64]) -> f64 {
    michalewicz(x, 10)
}

/// Ackley function on `[-32.768, 32.768]^d`; minimum 0 at the origin.
pub fn ackley(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let sum_sq: f64 = x.iter().map(|v| v * v).sum();
    let sum_cos: f64 = x.iter().map(|v| (2.0 * PI * v).cos()).sum();
    -20.0 * (-0.2 * (sum_sq / n).sqrt()).exp() - (sum_cos / n).exp() + 20.0 + E
}

/// Goldstein-Price function shifted down by 3 on `[-2, 2]^2`, so the
/// minimum is 0 at `(0, -1)`.
pub fn goldstein_price(x: &[f64]) -> f64 {
    check_dim(x, 2, "goldstein_price");
    let (a, b) = (x[0], x[1]);
    let u = a + b + 1.0;
    let first = 1.0
        + u * u
            * (19.0 - 14.0 * a + 3.0 * a * a - 14.0 * b + 6.0 * a * b + 3.0 * b * b);
    let v = 2.0 * a - 3.0 * b;
    let second = 30.0
        + v * v
            * (18.0 - 32.0 * a + 12.0 * a * a + 48.0 * b - 36.0 * a * b + 27.0 * b * b);
    first * second - 3.0
}

/// Griewank function on `[-600, 600]^d`; minimum 0 at the origin.
pub fn griewank(x: &[f64]) -> f64 {
    let sum_sq: f64 = x.iter().map(|v| v * v).sum();
    let mut product = 1.0;
    for (idx, &xi) in x.iter().enumerate() {
        product *= (xi / ((idx + 1) as f64).sqrt()).cos();
    }
    1.0 + sum_sq / 4000.0 - product
}

/// Levy function on `[-10, 10]^d` through `w_i = (x_i + 3) / 4`; minimum 0
/// at all-ones.
pub fn levy(x: &[f64]) -> f64 {
    let d = x.len();
    assert!(d >= 1, "levy: empty input");
    let w = |xi: f64| (xi + 3.0) / 4.0;
    let w1 = w(x[0]);
    let mut total = (PI * w1).sin().powi(2);
    for &xi in &x[..d - 1] {
        let wi = w(xi);
        let s = (PI * wi + PI).sin();
        total += (wi - 1.0) * (wi - 1.0) * (1.0 + 10.0 * s * s);
    }
    let wd = w(x[d - 1]);
    let s = (2.0 * PI * wd).sin();
    total += (wd - 1.0) * (wd - 1.0) * (1.0 + s * s);
    total
}

/// Rastrigin function on `[-5.12, 5.12]^d`; minimum 0 at the origin.
pub fn rastrigin(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    10.0 * n
        + x.iter()
            .map(|&v| v * v - 10.0 * (2.0 * PI * v).cos())
            .sum::<f64>()
}

/// Rosenbrock valley on `[-5, 10]^d`, `d >= 2`; minimum 0 at all-ones.
pub fn rosenbrock(x: &[f64]) -> f64 {
    assert!(x.len() >= 2, "rosenbrock: dimension must be at least 2");
    x.windows(2)
        .map(|w| {
            let t = w[0] * w[0] - w[1];
            100.0 * t * t + (1.0 - w[0]) * (1.0 - w[0])
        })
        .sum()
}

const SHEKEL_BETA: [f64; 10] = [0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5];
const SHEKEL_C: [[f64; 10]; 4] = [
    [4.0, 1.0, 8.0, 6.0, 3.0, 2.0, 5.0, 8.0, 6.0, 7.0],
    [4.0, 1.0, 8.0, 6.0, 7.0, 9.0, 3.0, 1.0, 2.0, 3.0],
    [4.0, 1.0, 8.0, 6.0, 3.0, 2.0, 5.0, 8.0, 6.0, 7.0],
    [4.0, 1.0, 8.0, 6.0, 7.0, 9.0, 3.0, 1.0, 2.0, 3.0],
];

/// Ten-term Shekel foxholes on `[0, 10]^4`, unnormalized.
pub fn shekel_raw(x: &[f64]) -> f64 {
    check_dim(x, 4, "shekel");
    let mut total = 0.0;
    for i in 0..10 {
        let mut dist = SHEKEL_BETA[i];
        for j in 0..4 {
            let diff = x[j] - SHEKEL_C[j][i];
            dist += diff * diff;
        }
        total -= 1.0 / dist;
    }
    total
}

static SHEKEL_OFFSET: LazyLock<f64> = LazyLock::new(|| shekel_raw(&[4.0; 4]));

/// Shekel foxholes normalized so the value at `(4, 4, 4, 4)` is exactly 0.
pub fn shekel(x: &[f64]) -> f64 {
    shekel_raw(x) - *SHEKEL_OFFSET
}

/// Sphere function on `[-5.12, 5.12]^d`; minimum 0 at the origin.
pub fn sphere(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

/// One registry entry: function, bounds, dimensionality rule and optimum.
pub struct BenchmarkSpec {
    pub name: &'static str,
    /// `Some` when the function only exists at one dimension.
    pub fixed_dim: Option<usize>,
    pub default_dim: usize,
    pub min_dim: usize,
    pub lower: f64,
    pub upper: f64,
    eval: fn(&[f64]) -> f64,
    optimum: fn(usize) -> (Vec<f64>, f64),
}

impl BenchmarkSpec {
    pub fn eval(&self, x: &[f64]) -> f64 {
        (self.eval)(x)
    }

    /// Optimum position and value at dimension `dim`.
    pub fn optimum(&self, dim: usize) -> (Vec<f64>, f64) {
        (self.optimum)(dim)
    }
}

fn zeros_optimum(dim: usize) -> (Vec<f64>, f64) {
    (vec![0.0; dim], 0.0)
}

fn ones_optimum(dim: usize) -> (Vec<f64>, f64) {
    (vec![1.0; dim], 0.0)
}

fn beale_optimum(_: usize) -> (Vec<f64>, f64) {
    (vec![3.0, 0.5], 0.0)
}

fn easom_optimum(_: usize) -> (Vec<f64>, f64) {
    (vec![PI, PI], -1.0)
}

fn goldstein_price_optimum(_: usize) -> (Vec<f64>, f64) {
    (vec![0.0, -1.0], 0.0)
}

fn shekel_optimum(_: usize) -> (Vec<f64>, f64) {
    (vec![4.0; 4], 0.0)
}

/// One term of the separable Michalewicz sum (1-based axis index).
fn michalewicz_axis_term(i: usize, x: f64) -> f64 {
    let s = (i as f64 * x * x / PI).sin();
    -x.sin() * s.powi(20)
}

/// Per-axis minimizer by dense scan plus golden-section refinement.
/// The function is separable, so the global optimum is the sum of the
/// per-axis minima.
fn michalewicz_axis_minimum(i: usize) -> (f64, f64) {
    let scan = 20_000usize;
    let mut best_x = 0.0;
    let mut best_v = 0.0;
    for k in 0..=scan {
        let x = PI * k as f64 / scan as f64;
        let v = michalewicz_axis_term(i, x);
        if v < best_v {
            best_x = x;
            best_v = v;
        }
    }
    let inv_phi = (5.0f64.sqrt() - 1.0) / 2.0;
    let mut a = (best_x - 1e-3).max(0.0);
    let mut b = (best_x + 1e-3).min(PI);
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = michalewicz_axis_term(i, c);
    let mut fd = michalewicz_axis_term(i, d);
    for _ in 0..100 {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = michalewicz_axis_term(i, c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = michalewicz_axis_term(i, d);
        }
    }
    let x = 0.5 * (a + b);
    (x, michalewicz_axis_term(i, x))
}

fn michalewicz_optimum(dim: usize) -> (Vec<f64>, f64) {
    let mut position = Vec::with_capacity(dim);
    let mut value = 0.0;
    for i in 1..=dim {
        let (x, v) = michalewicz_axis_minimum(i);
        position.push(x);
        value += v;
    }
    (position, value)
}

static REGISTRY: &[BenchmarkSpec] = &[
    BenchmarkSpec {
        name: "ackley",
        fixed_dim: None,
        default_dim: 128,
        min_dim: 1,
        lower: -32.768,
        upper: 32.768,
        eval: ackley,
        optimum: zeros_optimum,
    },
    BenchmarkSpec {
        name: "beale",
        fixed_dim: Some(2),
        default_dim: 2,
        min_dim: 2,
        lower: -4.5,
        upper: 4.5,
        eval: beale,
        optimum: beale_optimum,
    },
    BenchmarkSpec {
        name: "easom",
        fixed_dim: Some(2),
        default_dim: 2,
        min_dim: 2,
        lower: -100.0,
        upper: 100.0,
        eval: easom,
        optimum: easom_optimum,
    },
    BenchmarkSpec {
        name: "goldstein_price",
        fixed_dim: Some(2),
        default_dim: 2,
        min_dim: 2,
        lower: -2.0,
        upper: 2.0,
        eval: goldstein_price,
        optimum: goldstein_price_optimum,
    },
    BenchmarkSpec {
        name: "griewank",
        fixed_dim: None,
        default_dim: 2,
        min_dim: 1,
        lower: -600.0,
        upper: 600.0,
        eval: griewank,
        optimum: zeros_optimum,
    },
    BenchmarkSpec {
        name: "levy",
        fixed_dim: None,
        default_dim: 16,
        min_dim: 1,
        lower: -10.0,
        upper: 10.0,
        eval: levy,
        optimum: ones_optimum,
    },
    BenchmarkSpec {
        name: "michalewicz",
        fixed_dim: None,
        default_dim: 10,
        min_dim: 1,
        lower: 0.0,
        upper: PI,
        eval: michalewicz10,
        optimum: michalewicz_optimum,
    },
    BenchmarkSpec {
        name: "rastrigin",
        fixed_dim: None,
        default_dim: 2,
        min_dim: 1,
        lower: -5.12,
        upper: 5.12,
        eval: rastrigin,
        optimum: zeros_optimum,
    },
    BenchmarkSpec {
        name: "rosenbrock",
        fixed_dim: None,
        default_dim: 128,
        min_dim: 2,
        lower: -5.0,
        upper: 10.0,
        eval: rosenbrock,
        optimum: ones_optimum,
    },
    BenchmarkSpec {
        name: "shekel",
        fixed_dim: Some(4),
        default_dim: 4,
        min_dim: 4,
        lower: 0.0,
        upper: 10.0,
        eval: shekel,
        optimum: shekel_optimum,
    },
    BenchmarkSpec {
        name: "sphere",
        fixed_dim: None,
        default_dim: 32,
        min_dim: 1,
        lower: -5.12,
        upper: 5.12,
        eval: sphere,
        optimum: zeros_optimum,
    },
];

/// All registered benchmarks in name order.
pub fn registry() -> &'static [BenchmarkSpec] {
    REGISTRY
}

pub fn find_benchmark(name: &str) -> Result<&'static BenchmarkSpec> {
    REGISTRY
        .iter()
        .find(|spec| spec.name == name)
        .ok_or_else(|| Error::UnknownFunction(name.to_string()))
}

/// Builds the [`Objective`] for a registered benchmark.
///
/// `dim` selects the dimension for variable-dimensional functions; for a
/// fixed-dimensional function any other value is rejected.
pub fn registry_lookup(name: &str, dim: Option<usize>) -> Result<Objective> {
    let spec = find_benchmark(name)?;
    let dim = match (spec.fixed_dim, dim) {
        (Some(fixed), Some(requested)) if requested != fixed => {
            return Err(Error::FixedDimension {
                name: name.to_string(),
                expected: fixed,
                requested,
            });
        }
        (Some(fixed), _) => fixed,
        (None, Some(requested)) => requested,
        (None, None) => spec.default_dim,
    };
    if dim < spec.min_dim {
        return Err(Error::InvalidParameter(format!(
            "{name} requires dimension >= {}, got {dim}",
            spec.min_dim
        )));
    }
    let space = SearchSpace::continuous(dim, spec.lower, spec.upper)?;
    let eval = spec.eval;
    let (opt_pos, opt_val) = spec.optimum(dim);
    Objective::new(space, move |x| eval(x)).with_known_optimum(opt_pos, opt_val)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    // Frozen values from an independent high-resolution scan-and-refine
    // oracle (see also the acceptance suite's grid checks).
    const MICHALEWICZ_D2_MIN: f64 = -1.8013034100985532;
    const MICHALEWICZ_D2_POS: [f64; 2] = [2.202905519083391, 1.5707963320632525];
    const SHEKEL_RAW_AT_4444: f64 = -10.531929251218955;
    const SHEKEL_RAW_FAR_CORNER: f64 = -0.13094405922727617;
    const ACKLEY_D1_AT_ONE: f64 = 3.6253849384403627;
    const GRIEWANK_D1_AT_PI: f64 = 2.0024674011002723;

    #[test]
    fn beale_values() {
        assert_eq!(beale(&[3.0, 0.5]), 0.0);
        assert_eq!(beale(&[0.0, 0.0]), 14.203125);
    }

    #[test]
    #[should_panic(expected = "dimension")]
    fn beale_rejects_wrong_dimension() {
        beale(&[1.0, 2.0, 3.0]);
    }

    #[test]
    fn easom_values() {
        assert!((easom(&[PI, PI]) + 1.0).abs() < 1e-12);
        assert!((easom(&[0.0, 0.0]) - (-2.675287991074243e-9)).abs() < 1e-20);
        assert!(easom(&[PI / 2.0, -37.25]).abs() < 1e-15);
    }

    #[test]
    fn michalewicz_values() {
        assert_eq!(michalewicz(&[0.0; 10], 10), 0.0);
        let (pos, val) = michalewicz_optimum(2);
        assert!((val - MICHALEWICZ_D2_MIN).abs() < 1e-9, "val {val}");
        assert!((pos[0] - MICHALEWICZ_D2_POS[0]).abs() < 1e-6);
        assert!((pos[1] - MICHALEWICZ_D2_POS[1]).abs() < 1e-6);
        assert!((michalewicz(&pos, 10) - MICHALEWICZ_D2_MIN).abs() < 1e-9);
    }

    #[test]
    fn michalewicz_d10_matches_reported_minimum() {
        let (pos, val) = michalewicz_optimum(10);
        assert!((val - (-9.66015)).abs() < 1e-4, "val {val}");
        assert!((michalewicz(&pos, 10) - val).abs() < 1e-12);
    }

    #[test]
    fn ackley_values() {
        for d in [1usize, 2, 128] {
            assert!(ackley(&vec![0.0; d]).abs() < 1e-12, "d={d}");
        }
        assert!((ackley(&[1.0]) - ACKLEY_D1_AT_ONE).abs() < 1e-12);
    }

    #[test]
    fn goldstein_price_values() {
        assert_eq!(goldstein_price(&[0.0, -1.0]), 0.0);
        assert_eq!(goldstein_price(&[0.0, 0.0]), 597.0);
    }

    #[test]
    fn griewank_values() {
        assert_eq!(griewank(&[0.0; 8]), 0.0);
        assert!((griewank(&[PI]) - GRIEWANK_D1_AT_PI).abs() < 1e-12);
    }

    #[test]
    fn levy_values() {
        assert!(levy(&[1.0, 1.0]).abs() < 1e-12);
        assert!(levy(&[1.0; 16]).abs() < 1e-12);
    }

    #[test]
    fn rastrigin_values() {
        assert_eq!(rastrigin(&[0.0; 4]), 0.0);
        assert!((rastrigin(&[1.0, 1.0]) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn rosenbrock_values() {
        assert_eq!(rosenbrock(&[1.0, 1.0]), 0.0);
        assert_eq!(rosenbrock(&[1.0; 128]), 0.0);
        assert_eq!(rosenbrock(&[0.0, 0.0]), 1.0);
    }

    #[test]
    fn shekel_values() {
        assert!((shekel_raw(&[4.0; 4]) - SHEKEL_RAW_AT_4444).abs() < 1e-9);
        assert!(shekel(&[4.0; 4]).abs() < 1e-9);
        let far = shekel_raw(&[10.0; 4]);
        assert!((far - SHEKEL_RAW_FAR_CORNER).abs() < 1e-9);
        assert!(far > -1.0 && far < 0.0);
    }

    #[test]
    fn sphere_values() {
        assert_eq!(sphere(&[0.0; 3]), 0.0);
        assert_eq!(sphere(&[1.0, 2.0]), 5.0);
        assert!((sphere(&[0.1; 32]) - 0.32).abs() < 1e-12);
    }

    #[test]
    fn registry_defaults_match_reported_dimensions() {
        for (name, dim) in [
            ("ackley", 128),
            ("levy", 16),
            ("rosenbrock", 128),
            ("sphere", 32),
            ("michalewicz", 10),
            ("shekel", 4),
            ("beale", 2),
        ] {
            let obj = registry_lookup(name, None).unwrap();
            assert_eq!(obj.dim(), dim, "{name}");
        }
    }

    #[test]
    fn registry_rejects_bad_requests() {
        assert!(matches!(
            registry_lookup("nope", None),
            Err(Error::UnknownFunction(_))
        ));
        assert!(matches!(
            registry_lookup("beale", Some(5)),
            Err(Error::FixedDimension { .. })
        ));
        assert!(registry_lookup("rosenbrock", Some(1)).is_err());
    }

    #[test]
    fn registry_sphere_d3_has_origin_optimum() {
        let obj = registry_lookup("sphere", Some(3)).unwrap();
        let (pos, val) = obj.known_optimum().unwrap();
        assert_eq!(pos, &[0.0, 0.0, 0.0]);
        assert_eq!(val, 0.0);
    }

    #[test]
    fn every_registered_optimum_is_attained() {
        for spec in registry() {
            let obj = registry_lookup(spec.name, None).unwrap();
            let (pos, val) = obj.known_optimum().unwrap();
            let tolerance = if spec.name == "michalewicz" { 1e-4 } else { 1e-12 };
            let got = obj.eval(pos);
            assert!(
                (got - val).abs() <= tolerance,
                "{}: eval(optimum) = {got}, registered {val}",
                spec.name
            );
        }
    }

    #[test]
    fn finite_on_random_in_bounds_points() {
        use crate::rng::RngStream;
        let mut rng = RngStream::new(2024);
        for spec in registry() {
            let obj = registry_lookup(spec.name, None).unwrap();
            for _ in 0..100_000 {
                let p = rng.uniform_point(obj.space());
                assert!(obj.eval(&p).is_finite(), "{} at {p:?}", spec.name);
            }
        }
    }

    proptest! {
        #[test]
        fn even_symmetry_holds_exactly(
            xs in proptest::collection::vec(-5.0f64..5.0, 1..6)
        ) {
            let neg: Vec<f64> = xs.iter().map(|v| -v).collect();
            prop_assert_eq!(ackley(&xs), ackley(&neg));
            prop_assert_eq!(griewank(&xs), griewank(&neg));
            prop_assert_eq!(rastrigin(&xs), rastrigin(&neg));
            prop_assert_eq!(sphere(&xs), sphere(&neg));
        }
    }
}
