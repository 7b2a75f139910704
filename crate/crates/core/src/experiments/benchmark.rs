/*
Copyright 2026 The sdr-rs Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

use serde::Serialize;

use crate::data::Problem;
use crate::error::Result;
use crate::oracle::{reference_solve, ReferenceSolution};
use crate::solvers::{run_seeds, Algorithm, Init, RunRecord, RunSettings, Trajectory};
use crate::vector::Vector;

use super::ExperimentConfig;

const HISTOGRAM_BINS: usize = 40;

/// Paired result of both algorithms on one seed.
#[derive(Debug, Clone, Serialize)]
pub struct SeedOutcome {
    pub seed: u64,
    /// Solver seconds until `F + G <= threshold`, if reached.
    pub sdr_time: Option<f64>,
    pub psdr_time: Option<f64>,
    pub sdr_seconds_per_iter: f64,
    pub psdr_seconds_per_iter: f64,
    pub sdr_final_ergodic: f64,
    pub psdr_final_ergodic: f64,
    /// Both algorithms consumed the same sample sequence.
    pub paired: bool,
}

impl SeedOutcome {
    /// The fully stochastic run reached the threshold first.
    pub fn sdr_faster(&self) -> bool {
        match (self.sdr_time, self.psdr_time) {
            (Some(a), Some(b)) => a < b,
            (Some(_), None) => true,
            _ => false,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Histogram {
    /// `bins + 1` edges.
    pub edges: Vec<f64>,
    pub init: Vec<usize>,
    pub sdr_last: Vec<usize>,
    pub psdr_last: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchmarkReport {
    pub config: ExperimentConfig,
    pub reference: ReferenceSolution,
    pub threshold: f64,
    pub outcomes: Vec<SeedOutcome>,
    pub sdr_wins: usize,
    /// Time series of the first seed.
    pub sdr_series: Vec<RunRecord>,
    pub psdr_series: Vec<RunRecord>,
    pub histogram: Histogram,
}

/// The objective a benchmark record is compared against the threshold with,
/// `F + G` at the prox point `y_n`.
pub fn tracked_objective(r: &RunRecord) -> f64 {
    r.objective_y
}

/// Generates the data of `config`, solves for the reference and runs the
/// paired benchmark.
pub fn run_benchmark(config: &ExperimentConfig) -> Result<BenchmarkReport> {
    let data = config.generate()?;
    let reference = reference_solve(&data.problem, config.reference_budget, config.seed)?;
    benchmark_on(config, &data.problem, &reference)
}

/// Runs both algorithms with the same step size on every seed of `config`.
pub fn benchmark_on(config: &ExperimentConfig, problem: &Problem, reference: &ReferenceSolution) -> Result<BenchmarkReport> {
    let seeds = config.seeds();
    let mut settings = RunSettings::new(config.benchmark_gamma, config.n_iters, config.seed)
        .with_reference(reference.point.clone())
        .with_record_every(config.record_every);
    settings.inner_tol = config.dykstra_tol;
    if config.init_scale > 0.0 {
        settings.init = Init::Gaussian {
            scale: config.init_scale,
        };
    }

    let sdr: Vec<Trajectory> = run_seeds(problem, &settings, Algorithm::Sdr, &seeds)
        .into_iter()
        .collect::<Result<_>>()?;
    let psdr: Vec<Trajectory> = run_seeds(problem, &settings, Algorithm::Psdr, &seeds)
        .into_iter()
        .collect::<Result<_>>()?;

    let threshold = config.threshold_ratio * reference.objective;
    let outcomes: Vec<SeedOutcome> = sdr
        .iter()
        .zip(&psdr)
        .map(|(a, b)| SeedOutcome {
            seed: a.seed,
            sdr_time: a.time_to_threshold(threshold, tracked_objective),
            psdr_time: b.time_to_threshold(threshold, tracked_objective),
            sdr_seconds_per_iter: a.solver_seconds / a.iterations() as f64,
            psdr_seconds_per_iter: b.solver_seconds / b.iterations() as f64,
            sdr_final_ergodic: a.final_record().objective_ergodic,
            psdr_final_ergodic: b.final_record().objective_ergodic,
            paired: a.draw_hash == b.draw_hash,
        })
        .collect();
    let sdr_wins = outcomes.iter().filter(|o| o.sdr_faster()).count();
    let histogram = histogram(
        &sdr[0].initial,
        &sdr[0].final_state.x,
        &psdr[0].final_state.x,
        HISTOGRAM_BINS,
    );
    Ok(BenchmarkReport {
        config: config.clone(),
        reference: reference.clone(),
        threshold,
        outcomes,
        sdr_wins,
        sdr_series: sdr[0].records.clone(),
        psdr_series: psdr[0].records.clone(),
        histogram,
    })
}

/// Coordinate histograms of the initial point and both last iterates on shared bins.
pub fn histogram(init: &Vector, sdr_last: &Vector, psdr_last: &Vector, bins: usize) -> Histogram {
    let all = init.iter().chain(sdr_last.iter()).chain(psdr_last.iter());
    let (mut lo, mut hi) = all.fold((f64::INFINITY, f64::NEG_INFINITY), |(l, h), &v| (l.min(v), h.max(v)));
    if hi - lo < 1e-12 {
        lo -= 0.5;
        hi += 0.5;
    }
    let width = (hi - lo) / bins as f64;
    let edges = (0..=bins).map(|k| lo + k as f64 * width).collect();
    let count = |v: &Vector| {
        let mut c = vec![0usize; bins];
        for &x in v.iter() {
            let k = (((x - lo) / width) as usize).min(bins - 1);
            c[k] += 1;
        }
        c
    };
    Histogram {
        edges,
        init: count(init),
        sdr_last: count(sdr_last),
        psdr_last: count(psdr_last),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn histogram_counts_everything() {
        let a = Vector::zeros(5);
        let b = Vector::new(vec![-1.0, 0.0, 0.5, 2.0, 2.0]).unwrap();
        let h = histogram(&a, &b, &b, 4);
        assert_eq!(h.edges.len(), 5);
        assert_eq!(h.init.iter().sum::<usize>(), 5);
        assert_eq!(h.sdr_last, vec![1, 1, 1, 2]);
    }

    #[test]
    fn constant_histogram_has_width() {
        let a = Vector::zeros(3);
        let h = histogram(&a, &a, &a, 3);
        assert!(h.edges[3] > h.edges[0]);
        assert_eq!(h.init.iter().sum::<usize>(), 3);
    }
}
