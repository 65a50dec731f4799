//! Acceptance suite: one test per shipped claim, each printing a
//! PASS/FAIL line with the measured values.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! measurements; the whole suite is deterministic.

use std::time::Instant;

use squidopt::harness::{
    comparison_protocol, results_csv, results_json, run_experiment, Algo, ExperimentConfig,
};
use squidopt::ssa::{attractiveness, default_gamma, light_intensity, random_step, secondary_candidate};
use squidopt::{
    arcsine_from_uniform, pso, registry, registry_lookup, ga_minimize, pso_minimize, ssa_minimize,
    GaParams, PsoParams, RngStream, SearchSpace, SsaParams,
};

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

/// Criterion 1: every registered optimum is attained by the implemented
/// formula, to 1e-12 (1e-4 for the 10-dimensional Michalewicz against the
/// reported -9.66015), in under a second.
#[test]
fn criterion_1_benchmark_optima() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for spec in registry() {
        let objective = registry_lookup(spec.name, None).unwrap();
        let (position, value) = objective.known_optimum().unwrap();
        let got = objective.eval(position);
        let tolerance = if spec.name == "michalewicz" { 1e-4 } else { 1e-12 };
        if (got - value).abs() > tolerance {
            failures.push(format!("{}: eval(opt)={got}, registered {value}", spec.name));
        }
    }
    let mich = registry_lookup("michalewicz", Some(10)).unwrap();
    let (_, mich_value) = mich.known_optimum().unwrap();
    if (mich_value - (-9.66015)).abs() > 1e-4 {
        failures.push(format!("michalewicz d=10 optimum {mich_value} vs -9.66015"));
    }
    let elapsed = start.elapsed();
    let ok = failures.is_empty() && elapsed.as_secs_f64() < 1.0;
    println!(
        "criterion 1 {}: 11 benchmark optima attained in {:.3}s {:?}",
        verdict(ok),
        elapsed.as_secs_f64(),
        failures
    );
    assert!(ok, "{failures:?} in {elapsed:?}");
}

/// Criterion 2: with default squid parameters, Beale, Easom and the
/// 2-dimensional Michalewicz are solved to within 1e-5 of the optimum in
/// at least 95 of 100 seeded trials at 50,000 evaluations.
#[test]
fn criterion_2_validation_functions_with_default_params() {
    let mut all_ok = true;
    let mut summary = Vec::new();
    for (function, dim) in [("beale", None), ("easom", None), ("michalewicz", Some(2))] {
        let mut config = ExperimentConfig::new(function);
        config.dim = dim;
        config.algorithms = vec![Algo::Ssa];
        config.trials = 100;
        config.budget_evals = Some(50_000);
        config.success_tolerance = 1e-5;
        let report = run_experiment(&config).unwrap();
        let successes = report.algorithms[0].successes;
        summary.push(format!("{function} {successes}/100"));
        all_ok &= successes >= 95;
    }
    println!(
        "criterion 2 {}: defaults reach 1e-5 on {}",
        verdict(all_ok),
        summary.join(", ")
    );
    assert!(all_ok, "{summary:?}");
}

/// Criterion 3, ordering clause: at an equal 50,000-evaluation budget over
/// 100 trials, the squid optimizer's mean final fitness beats the GA's on
/// at least 6 of the 8 comparison functions.
///
/// The pooled-success clause of the same criterion lives in
/// `criterion_3_pooled_success_rate`.
#[test]
fn criterion_3_mean_beats_ga_on_six_of_eight() {
    let reports: Vec<_> = comparison_protocol(100, 42, 50_000)
        .iter()
        .map(|config| run_experiment(config).unwrap())
        .collect();
    let mut wins = 0usize;
    let mut lines = Vec::new();
    for report in &reports {
        let mean_of = |algo: Algo| {
            report
                .algorithms
                .iter()
                .find(|row| row.algorithm == algo)
                .map(|row| row.stats.mean)
                .unwrap()
        };
        let (ssa, ga) = (mean_of(Algo::Ssa), mean_of(Algo::Ga));
        let won = ssa < ga;
        wins += usize::from(won);
        lines.push(format!(
            "{}: ssa {ssa:.3e} vs ga {ga:.3e} {}",
            report.function(),
            if won { "win" } else { "loss" }
        ));
    }
    let ok = wins >= 6;
    println!(
        "criterion 3 (ordering) {}: squid mean beats GA on {wins}/8 functions",
        verdict(ok)
    );
    for line in &lines {
        println!("  {line}");
    }
    assert!(ok, "only {wins}/8 wins: {lines:?}");
}

/// Criterion 3, pooled-success clause: the squid optimizer's pooled
/// empirical success rate at tolerance 1e-4 over the 8-function protocol
/// (100 trials each, 50,000 evaluations) must exceed 90%.
///
/// Known shortfall: the valley walk of the 16-dimensional Rosenbrock and
/// the ring-shaped traps of Griewank cap this protocol's pooled rate near
/// 80% at this budget; the other six functions sit at or near 100%. The
/// assertion states the shipped claim unchanged so the gap stays visible.
#[test]
fn criterion_3_pooled_success_rate() {
    let mut configs = comparison_protocol(100, 42, 50_000);
    for config in &mut configs {
        config.algorithms = vec![Algo::Ssa];
        config.success_tolerance = 1e-4;
    }
    let mut successes = 0usize;
    let mut trials = 0usize;
    let mut lines = Vec::new();
    for config in &configs {
        let report = run_experiment(config).unwrap();
        let row = &report.algorithms[0];
        successes += row.successes;
        trials += report.trials;
        lines.push(format!("{} {}/100", report.function(), row.successes));
    }
    let pooled = successes as f64 / trials as f64;
    let ok = pooled > 0.90;
    println!(
        "criterion 3 (pooled success) {}: {successes}/{trials} = {:.1}% at 1e-4 ({})",
        verdict(ok),
        100.0 * pooled,
        lines.join(", ")
    );
    assert!(ok, "pooled success {:.3} <= 0.90: {lines:?}", pooled);
}

/// Criterion 4: the recorded best-fitness series is exactly non-increasing
/// for 20 random (function, seed) pairs per algorithm.
#[test]
fn criterion_4_incumbent_monotonicity() {
    let names: Vec<&str> = registry().iter().map(|s| s.name).collect();
    let mut checked = 0usize;
    let mut ok = true;
    for algo_idx in 0..3 {
        for pair in 0..20u64 {
            let pick = RngStream::derive(1000 + algo_idx, "monotone", pair) as usize;
            let function = names[pick % names.len()];
            let objective = registry_lookup(function, None).unwrap();
            let mut rng = RngStream::new(pair * 31 + algo_idx);
            let result = match algo_idx {
                0 => {
                    let params = SsaParams {
                        max_generations: usize::MAX,
                        max_evaluations: Some(4_000),
                        ..SsaParams::default()
                    };
                    ssa_minimize(&objective, &params, &mut rng, false).unwrap()
                }
                1 => {
                    let params = PsoParams {
                        max_generations: usize::MAX,
                        max_evaluations: Some(4_000),
                        ..PsoParams::default()
                    };
                    pso_minimize(&objective, &params, &mut rng, false).unwrap()
                }
                _ => {
                    let params = GaParams {
                        max_generations: usize::MAX,
                        max_evaluations: Some(4_000),
                        ..GaParams::default()
                    };
                    ga_minimize(&objective, &params, &mut rng, false).unwrap()
                }
            };
            let monotone = result.best_history.windows(2).all(|w| w[1] <= w[0]);
            ok &= monotone;
            checked += 1;
            if !monotone {
                println!("  violation: algo {algo_idx}, {function}, seed {pair}");
            }
        }
    }
    println!(
        "criterion 4 {}: best-fitness series non-increasing on {checked}/60 runs",
        verdict(ok)
    );
    assert!(ok);
}

/// Criterion 5: identical experiment configs give byte-identical CSV and
/// JSON outputs.
#[test]
fn criterion_5_byte_identical_reruns() {
    let mut config = ExperimentConfig::new("rastrigin");
    config.trials = 8;
    config.budget_evals = Some(3_000);
    let first = run_experiment(&config).unwrap();
    let second = run_experiment(&config).unwrap();
    let csv_a = results_csv(std::slice::from_ref(&first)).unwrap();
    let csv_b = results_csv(std::slice::from_ref(&second)).unwrap();
    let json_a = results_json(std::slice::from_ref(&first)).unwrap();
    let json_b = results_json(std::slice::from_ref(&second)).unwrap();
    let ok = csv_a == csv_b && json_a == json_b;
    println!(
        "criterion 5 {}: re-run outputs byte-identical ({} csv bytes, {} json bytes)",
        verdict(ok),
        csv_a.len(),
        json_a.len()
    );
    assert!(ok);
}

/// Criterion 6: Kolmogorov-Smirnov statistic of 1e5 arcsine draws against
/// the CDF (2/pi) asin(sqrt(x)) stays below 0.01.
#[test]
fn criterion_6_arcsine_sampler_ks() {
    let n = 100_000usize;
    let mut rng = RngStream::new(20_240_601);
    let mut draws: Vec<f64> = (0..n).map(|_| rng.sample_arcsine()).collect();
    draws.sort_by(f64::total_cmp);
    let cdf = |x: f64| 2.0 / std::f64::consts::PI * x.sqrt().asin();
    let mut ks: f64 = 0.0;
    for (i, &x) in draws.iter().enumerate() {
        let theory = cdf(x);
        let lo = i as f64 / n as f64;
        let hi = (i + 1) as f64 / n as f64;
        ks = ks.max((theory - lo).abs()).max((hi - theory).abs());
    }
    let ok = ks < 0.01;
    println!("criterion 6 {}: KS statistic {ks:.5} over {n} draws", verdict(ok));
    assert!(ok, "KS {ks}");
}

/// Criterion 7: the closed-form operation examples hold exactly.
#[test]
fn criterion_7_equation_unit_checks() {
    // light falloff and its cutoff
    assert_eq!(light_intensity(0.0, 5.0, 1.0, 1.0), 5.0);
    assert_eq!(light_intensity(1.0, 2.0, 1.0, 1.0), 1.0);
    assert_eq!(light_intensity(2.0, 2.0, 1.0, 1.0), 0.0);
    // attraction shares the same form
    assert_eq!(attractiveness(1.0, 0.0, 1.0, 1.0), 1.0);
    assert_eq!(attractiveness(4.0, 1.0, 3.0, 10.0), 1.0);
    assert_eq!(attractiveness(4.0, 100.0, 3.0, 10.0), 0.0);
    // standardized absorption coefficient
    let e = std::f64::consts::E;
    assert!((default_gamma(1.0, e).unwrap() - 0.5).abs() < 1e-15);
    assert!((default_gamma(1.0, 1.0).unwrap() - 1.0).abs() < 1e-15);
    assert!((default_gamma(2.0, e).unwrap() - 0.125).abs() < 1e-15);
    // random step envelope: alpha delta^t / 2
    let params = SsaParams {
        alpha: 1.0,
        delta: 0.9,
        ..SsaParams::default()
    };
    let mut rng = RngStream::new(7);
    for _ in 0..500 {
        for component in random_step(2, 4, &params, &mut rng) {
            assert!(component.abs() <= 0.405 + 1e-15);
        }
    }
    // zero amplitude gives the zero vector
    let none = SsaParams {
        alpha: 0.0,
        ..SsaParams::default()
    };
    assert_eq!(random_step(3, 3, &none, &mut rng), vec![0.0; 3]);
    // herd jump with F = 0 lands on the anchor
    assert_eq!(
        secondary_candidate(&[0.25, -0.5], &[9.0, 9.0], &[-9.0, 3.0], 0.0),
        vec![0.25, -0.5]
    );
    assert_eq!(
        secondary_candidate(&[0.0, 0.0], &[1.0, 0.0], &[0.0, 1.0], 1.0),
        vec![1.0, -1.0]
    );
    // velocity clamp limit k (upper - lower) / 2
    let space = SearchSpace::continuous(2, -10.0, 10.0).unwrap();
    let mut v = vec![8.0, -12.0];
    pso::clamp_velocity(&mut v, &space, 0.5);
    assert_eq!(v, vec![5.0, -5.0]);
    println!("criterion 7 PASS: all closed-form operation examples hold exactly");
}

/// Criterion 8: a 0.01-step brute-force grid over each 2-dimensional
/// benchmark finds no point better than the registered optimum minus 1e-9.
#[test]
fn criterion_8_grid_oracle_equivalence() {
    let mut ok = true;
    let mut lines = Vec::new();
    for name in ["beale", "easom", "goldstein_price", "levy"] {
        let objective = if name == "levy" {
            registry_lookup(name, Some(2)).unwrap()
        } else {
            registry_lookup(name, None).unwrap()
        };
        let (_, optimum) = objective.known_optimum().unwrap();
        let space = objective.space();
        let (lo, hi) = (space.lower()[0], space.upper()[0]);
        let steps = ((hi - lo) / 0.01).round() as usize;
        let mut grid_min = f64::INFINITY;
        let mut point = [0.0f64; 2];
        for i in 0..=steps {
            point[0] = lo + 0.01 * i as f64;
            for j in 0..=steps {
                point[1] = lo + 0.01 * j as f64;
                let value = objective.eval(&point);
                if value < grid_min {
                    grid_min = value;
                }
            }
        }
        let fine = grid_min >= optimum - 1e-9;
        ok &= fine;
        lines.push(format!("{name}: grid min {grid_min:.6e} vs optimum {optimum:.6e}"));
    }
    println!("criterion 8 {}: {}", verdict(ok), lines.join("; "));
    assert!(ok, "{lines:?}");
}
