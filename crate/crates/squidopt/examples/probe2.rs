//! Scratch instrumentation: per-generation swarm geometry (not shipped).

use squidopt::{registry_lookup, ssa_minimize, RngStream, SsaParams};

fn main() {
    let mut function = "ackley".to_string();
    let mut dim = 16usize;
    let mut seed = 0u64;
    let mut params = SsaParams {
        population: 20,
        greedy_secondary: false,
        max_generations: usize::MAX,
        max_evaluations: Some(50_000),
        ..SsaParams::default()
    };
    for arg in std::env::args().skip(1) {
        let (k, v) = arg.split_once('=').expect("key=value");
        match k {
            "f" => function = v.to_string(),
            "d" => dim = v.parse().unwrap(),
            "seed" => seed = v.parse().unwrap(),
            "n" => params.population = v.parse().unwrap(),
            "greedy" => params.greedy_secondary = v.parse().unwrap(),
            "delta" => params.delta = v.parse().unwrap(),
            "alpha" => params.alpha = v.parse().unwrap(),
            _ => panic!("unknown {k}"),
        }
    }
    let objective = registry_lookup(&function, Some(dim)).unwrap();
    let mut rng = RngStream::new(seed);
    let result = ssa_minimize(&objective, &params, &mut rng, true).unwrap();
    println!(
        "final best {:.3e} after {} generations / {} evals",
        result.best_fitness, result.generations, result.evaluations
    );
    let trace = result.trace.unwrap();
    let n = params.population;
    for g in (1..=result.generations).step_by((result.generations / 20).max(1)) {
        let gen_records: Vec<_> = trace.iter().filter(|r| r.generation == g).collect();
        if gen_records.is_empty() {
            continue;
        }
        // centroid and rms spread
        let mut centroid = vec![0.0; dim];
        for r in &gen_records {
            for k in 0..dim {
                centroid[k] += r.position[k] / n as f64;
            }
        }
        let spread = (gen_records
            .iter()
            .map(|r| {
                r.position
                    .iter()
                    .zip(&centroid)
                    .map(|(x, c)| (x - c) * (x - c))
                    .sum::<f64>()
            })
            .sum::<f64>()
            / n as f64)
            .sqrt();
        let best_f = gen_records
            .iter()
            .map(|r| r.fitness)
            .fold(f64::INFINITY, f64::min);
        let worst_f = gen_records
            .iter()
            .map(|r| r.fitness)
            .fold(f64::NEG_INFINITY, f64::max);
        let hist_best = result.best_history[g];
        println!(
            "gen {g:4}  incumbent {hist_best:10.3e}  pop_best {best_f:10.3e}  pop_worst {worst_f:10.3e}  spread {spread:9.3e}  kick {:9.3e}",
            params.alpha * params.delta.powi(g as i32) / 2.0
        );
    }
}
