//! CSV and JSON serialization of experiment results and traces.
//!
//! All floating-point numbers are written with 17 significant digits, so a
//! re-read reproduces every `f64` bit for bit, and output is byte-identical
//! across re-runs of the same configuration.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::ga::GaParams;
use crate::pso::PsoParams;
use crate::result::OptResult;
use crate::ssa::{Gamma, SsaParams};

use super::config::ExperimentConfig;
use super::runner::ExperimentReport;
use super::stats::SummaryRow;

/// 17 significant digits: one leading digit plus 16 after the point.
pub fn fmt17(x: f64) -> String {
    if x.is_nan() {
        "NaN".to_string()
    } else {
        format!("{x:.16e}")
    }
}

fn jnum(x: f64) -> String {
    if x.is_nan() {
        "null".to_string()
    } else {
        format!("{x:.16e}")
    }
}

fn jstr(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn jopt_usize(v: Option<usize>) -> String {
    v.map_or_else(|| "null".to_string(), |n| n.to_string())
}

fn jopt_num(v: Option<f64>) -> String {
    v.map_or_else(|| "null".to_string(), jnum)
}

fn ensure_exportable(reports: &[ExperimentReport]) -> Result<()> {
    if reports.is_empty() || reports.iter().any(|r| r.algorithms.is_empty()) {
        return Err(Error::Config(
            "nothing to export: empty report or algorithm list".into(),
        ));
    }
    Ok(())
}

/// The results table. Columns are fixed:
/// `function,dim,algorithm,trials,budget_evals,best,worst,mean,std_dev,success_rate,rank`.
pub fn results_csv(reports: &[ExperimentReport]) -> Result<String> {
    ensure_exportable(reports)?;
    let mut out = String::from(
        "function,dim,algorithm,trials,budget_evals,best,worst,mean,std_dev,success_rate,rank\n",
    );
    for report in reports {
        for row in &report.algorithms {
            let budget = report
                .config
                .budget_evals
                .map_or_else(String::new, |b| b.to_string());
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{},{}",
                report.function(),
                report.dim,
                row.algorithm,
                report.trials,
                budget,
                fmt17(row.stats.best),
                fmt17(row.stats.worst),
                fmt17(row.stats.mean),
                fmt17(row.stats.std_dev),
                fmt17(row.stats.success_rate),
                row.rank,
            );
        }
    }
    Ok(out)
}

fn ssa_params_json(p: &SsaParams) -> String {
    let gamma = match p.gamma {
        Gamma::Auto => "\"auto\"".to_string(),
        Gamma::Fixed(g) => jnum(g),
    };
    format!(
        "{{\"population\":{},\"alpha\":{},\"delta\":{},\"beta0\":{},\"gamma\":{},\"cutoff\":{},\"mutation_factor\":{},\"sample_mutation_factor\":{},\"greedy_secondary\":{}}}",
        p.population,
        jnum(p.alpha),
        jnum(p.delta),
        jnum(p.beta0),
        gamma,
        jopt_num(p.cutoff),
        jnum(p.mutation_factor),
        p.sample_mutation_factor,
        p.greedy_secondary,
    )
}

fn pso_params_json(p: &PsoParams) -> String {
    format!(
        "{{\"population\":{},\"inertia\":{},\"cognitive\":{},\"social\":{},\"clamp_k\":{}}}",
        p.population,
        jnum(p.inertia),
        jnum(p.cognitive),
        jnum(p.social),
        jnum(p.clamp_k),
    )
}

fn ga_params_json(p: &GaParams) -> String {
    format!(
        "{{\"population\":{},\"crossover_prob\":{},\"mutation_prob\":{}}}",
        p.population,
        jnum(p.crossover_prob),
        jnum(p.mutation_prob),
    )
}

fn config_json(c: &ExperimentConfig) -> String {
    let algorithms = c
        .algorithms
        .iter()
        .map(|a| jstr(a.name()))
        .collect::<Vec<_>>()
        .join(",");
    format!(
        "{{\"function\":{},\"dim\":{},\"algorithms\":[{}],\"trials\":{},\"base_seed\":{},\"budget_evals\":{},\"budget_secs\":{},\"success_tolerance\":{},\"out_csv\":{},\"out_json\":{},\"ssa\":{},\"pso\":{},\"ga\":{}}}",
        jstr(&c.function),
        jopt_usize(c.dim),
        algorithms,
        c.trials,
        c.base_seed,
        jopt_usize(c.budget_evals),
        jopt_num(c.budget_secs),
        jnum(c.success_tolerance),
        c.out_csv
            .as_ref()
            .map_or_else(|| "null".to_string(), |p| jstr(&p.display().to_string())),
        c.out_json
            .as_ref()
            .map_or_else(|| "null".to_string(), |p| jstr(&p.display().to_string())),
        ssa_params_json(&c.ssa),
        pso_params_json(&c.pso),
        ga_params_json(&c.ga),
    )
}

/// The results document: the CSV fields plus the full config echo and the
/// per-trial final fitnesses.
pub fn results_json(reports: &[ExperimentReport]) -> Result<String> {
    ensure_exportable(reports)?;
    let mut out = String::from("{\"results\":[");
    for (ri, report) in reports.iter().enumerate() {
        if ri > 0 {
            out.push(',');
        }
        let _ = write!(
            out,
            "{{\"function\":{},\"dim\":{},\"trials\":{},\"base_seed\":{},\"budget_evals\":{},\"budget_secs\":{},\"success_tolerance\":{},\"optimum_value\":{},\"config\":{},\"algorithms\":[",
            jstr(report.function()),
            report.dim,
            report.trials,
            report.config.base_seed,
            jopt_usize(report.config.budget_evals),
            jopt_num(report.config.budget_secs),
            jnum(report.config.success_tolerance),
            jnum(report.optimum_value),
            config_json(&report.config),
        );
        for (ai, row) in report.algorithms.iter().enumerate() {
            if ai > 0 {
                out.push(',');
            }
            let finals = row
                .final_fitnesses
                .iter()
                .map(|f| jnum(*f))
                .collect::<Vec<_>>()
                .join(",");
            let failures = row
                .failures
                .iter()
                .map(|(trial, diag)| format!("{{\"trial\":{trial},\"error\":{}}}", jstr(diag)))
                .collect::<Vec<_>>()
                .join(",");
            let _ = write!(
                out,
                "{{\"algorithm\":{},\"best\":{},\"worst\":{},\"mean\":{},\"std_dev\":{},\"success_rate\":{},\"success_rate_normal_approx\":{},\"rank\":{},\"successes\":{},\"degenerate_std\":{},\"final_fitnesses\":[{}],\"failures\":[{}]}}",
                jstr(row.algorithm.name()),
                jnum(row.stats.best),
                jnum(row.stats.worst),
                jnum(row.stats.mean),
                jnum(row.stats.std_dev),
                jnum(row.stats.success_rate),
                jnum(row.success_rate_normal_approx),
                row.rank,
                row.successes,
                report.trials == 1,
                finals,
                failures,
            );
        }
        out.push_str("]}");
    }
    out.push_str("]}");
    Ok(out)
}

/// Summary table over all functions:
/// `algorithm,average_rank,final_rank,success_rate,success_rate_normal_approx`.
pub fn summary_csv(rows: &[SummaryRow]) -> String {
    let mut out =
        String::from("algorithm,average_rank,final_rank,success_rate,success_rate_normal_approx\n");
    for row in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            row.algorithm,
            fmt17(row.average_rank),
            row.final_rank,
            fmt17(row.success_rate),
            fmt17(row.success_rate_normal_approx),
        );
    }
    out
}

/// Trace table: `generation,squid_id,swarm_tag,fitness,x0,x1,...`, one row
/// per squid per generation.
pub fn trace_csv(result: &OptResult) -> Result<String> {
    let records = result.trace.as_ref().ok_or(Error::TraceMissing)?;
    let dim = records.first().map_or(0, |r| r.position.len());
    let mut out = String::from("generation,squid_id,swarm_tag,fitness");
    for k in 0..dim {
        let _ = write!(out, ",x{k}");
    }
    out.push('\n');
    for record in records {
        let _ = write!(
            out,
            "{},{},{},{}",
            record.generation,
            record.squid_id,
            record.swarm_tag,
            fmt17(record.fitness)
        );
        for x in &record.position {
            let _ = write!(out, ",{}", fmt17(*x));
        }
        out.push('\n');
    }
    Ok(out)
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|e| Error::io(path, e))
}

/// Writes the results table as CSV.
pub fn export_results_csv(reports: &[ExperimentReport], path: &Path) -> Result<()> {
    write_file(path, &results_csv(reports)?)
}

/// Writes the results document as JSON.
pub fn export_results_json(reports: &[ExperimentReport], path: &Path) -> Result<()> {
    write_file(path, &results_json(reports)?)
}

/// Writes a recorded trace as CSV; errors when the run was not traced.
pub fn export_trace(result: &OptResult, path: &Path) -> Result<()> {
    write_file(path, &trace_csv(result)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::result::{SwarmTag, TraceRecord};

    #[test]
    fn fmt17_has_seventeen_significant_digits() {
        assert_eq!(fmt17(2.5e-7), "2.4999999999999999e-7");
        assert_eq!(fmt17(0.0), "0.0000000000000000e0");
        for x in [std::f64::consts::PI, 0.95, -4.52e-8, 1e300, 5e-324] {
            assert_eq!(fmt17(x).parse::<f64>().unwrap().to_bits(), x.to_bits());
        }
    }

    #[test]
    fn trace_csv_shape() {
        let result = OptResult {
            best_position: vec![0.0, 0.0],
            best_fitness: 0.0,
            evaluations: 10,
            generations: 2,
            best_history: vec![1.0, 0.5, 0.0],
            trace: Some(vec![
                TraceRecord {
                    generation: 1,
                    squid_id: 0,
                    swarm_tag: SwarmTag::Primary,
                    position: vec![0.5, -0.5],
                    fitness: 0.5,
                },
                TraceRecord {
                    generation: 1,
                    squid_id: 1,
                    swarm_tag: SwarmTag::Secondary,
                    position: vec![1.0, 2.0],
                    fitness: 5.0,
                },
            ]),
        };
        let csv = trace_csv(&result).unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "generation,squid_id,swarm_tag,fitness,x0,x1");
        assert!(lines.next().unwrap().starts_with("1,0,primary,"));
        assert!(lines.next().unwrap().starts_with("1,1,secondary,"));
    }

    #[test]
    fn trace_csv_requires_a_trace() {
        let result = OptResult {
            best_position: vec![],
            best_fitness: 0.0,
            evaluations: 0,
            generations: 0,
            best_history: vec![],
            trace: None,
        };
        assert!(matches!(trace_csv(&result), Err(Error::TraceMissing)));
    }

    #[test]
    fn empty_reports_are_rejected_before_any_file_io() {
        assert!(results_csv(&[]).is_err());
        assert!(results_json(&[]).is_err());
    }

    #[test]
    fn json_strings_are_escaped() {
        assert_eq!(jstr("a\"b\\c\nd"), "\"a\\\"b\\\\c\\nd\"");
    }
}
