//! Scratch probe for tuning runs (not part of the shipped examples).

use squidopt::{registry_lookup, ssa_minimize, Gamma, RngStream, SsaParams};

fn main() {
    let mut function = "sphere".to_string();
    let mut dim = 2usize;
    let mut trials = 100usize;
    let mut budget = 50_000usize;
    let mut params = SsaParams {
        max_generations: usize::MAX,
        ..SsaParams::default()
    };
    let mut gamma_scale = -1.0f64;
    for arg in std::env::args().skip(1) {
        let (k, v) = arg.split_once('=').expect("key=value");
        match k {
            "f" => function = v.to_string(),
            "d" => dim = v.parse().unwrap(),
            "trials" => trials = v.parse().unwrap(),
            "budget" => budget = v.parse().unwrap(),
            "n" => params.population = v.parse().unwrap(),
            "alpha" => params.alpha = v.parse().unwrap(),
            "delta" => params.delta = v.parse().unwrap(),
            "beta0" => params.beta0 = v.parse().unwrap(),
            "greedy" => params.greedy_secondary = v.parse().unwrap(),
            "fmax" => params.mutation_factor = v.parse().unwrap(),
            "fsample" => params.sample_mutation_factor = v.parse().unwrap(),
            "gscale" => gamma_scale = v.parse().unwrap(),
            other => panic!("unknown key {other}"),
        }
    }
    let objective = registry_lookup(&function, Some(dim)).unwrap();
    if gamma_scale > 0.0 {
        let span = objective.space().mean_span();
        params.gamma = Gamma::Fixed(gamma_scale / (span * span));
    }
    params.max_evaluations = Some(budget);
    let opt = objective.known_optimum().unwrap().1;
    let mut finals: Vec<f64> = (0..trials)
        .map(|k| {
            let mut rng = RngStream::new(RngStream::derive(1, "probe", k as u64));
            ssa_minimize(&objective, &params, &mut rng, false)
                .unwrap()
                .best_fitness
                - opt
        })
        .collect();
    finals.sort_by(f64::total_cmp);
    let mean = finals.iter().sum::<f64>() / trials as f64;
    let succ = |tol: f64| finals.iter().filter(|&&f| f <= tol).count();
    println!(
        "{function}:{dim} n={} a={} d={} g={} fmax={} gs={gamma_scale} | best {:.2e} med {:.2e} mean {:.2e} worst {:.2e} | 1e-4: {} 1e-5: {} 1e-6: {}",
        params.population,
        params.alpha,
        params.delta,
        params.greedy_secondary,
        params.mutation_factor,
        finals[0],
        finals[trials / 2],
        mean,
        finals[trials - 1],
        succ(1e-4),
        succ(1e-5),
        succ(1e-6),
    );
}
