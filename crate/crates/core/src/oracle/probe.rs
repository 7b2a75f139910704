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
use crate::error::{Error, Result};
use crate::solvers::{run_seeds, Algorithm, RunSettings};

use super::ReferenceSolution;

/// Monte-Carlo estimates for one step size.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbeRow {
    pub gamma: f64,
    /// Fraction of seeds with `d(xbar_n, x*) >= epsilon` at the last iterate.
    pub p_ergodic: f64,
    /// Seed average of `(1/(n+1)) sum_k 1{d(x_k, x*) > epsilon}`.
    pub cesaro: f64,
    pub mean_dist_ergodic: f64,
    /// Largest `||x_k||` over all seeds and iterations.
    pub sup_norm: f64,
    pub divergences: usize,
    pub seeds: usize,
    /// `d(x_bar_n)` per seed, infinite for a divergent run.
    pub distances: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbeTable {
    pub epsilon: f64,
    pub n_iters: usize,
    pub rows: Vec<ProbeRow>,
}

/// Estimates, for each step size, how often the fully stochastic iterates end
/// up at least `epsilon` away from the reference solution.
///
/// `base` supplies everything but the step size, the seed and the metrics
/// configuration; seeds are `base.seed + 0 .. base.seed + n_seeds`. Runs that
/// diverge are counted as failures at distance `+inf`.
pub fn theorem1_probe(
    problem: &Problem,
    reference: &ReferenceSolution,
    gammas: &[f64],
    base: &RunSettings,
    n_seeds: usize,
    epsilon: f64,
) -> Result<ProbeTable> {
    if gammas.len() < 2 {
        return Err(Error::invalid("gammas", "at least two step sizes are required"));
    }
    if n_seeds < 10 {
        return Err(Error::invalid("seeds", format!("at least 10 seeds are required, got {n_seeds}")));
    }
    if epsilon.is_nan() || epsilon < 0.0 {
        return Err(Error::invalid("epsilon", format!("must be nonnegative, got {epsilon}")));
    }
    let seeds: Vec<u64> = (0..n_seeds as u64).map(|k| base.seed.wrapping_add(k)).collect();
    let mut rows = Vec::with_capacity(gammas.len());
    for &gamma in gammas {
        let mut settings = base.clone();
        settings.gamma = gamma;
        settings.reference = Some(reference.point.clone());
        settings.epsilon = Some(epsilon);
        settings.record_every = settings.n_iters.max(1);
        settings.keep_iterates = false;

        let mut exceed = 0usize;
        let mut cesaro = 0.0;
        let mut dist_sum = 0.0;
        let mut sup_norm: f64 = 0.0;
        let mut divergences = 0;
        let mut distances = Vec::with_capacity(n_seeds);
        for outcome in run_seeds(problem, &settings, Algorithm::Sdr, &seeds) {
            match outcome {
                Ok(t) => {
                    let d = t.ergodic.mean().distance(&reference.point);
                    exceed += (d >= epsilon) as usize;
                    cesaro += t.exceed_fraction.unwrap_or(1.0);
                    dist_sum += d;
                    distances.push(d);
                    sup_norm = sup_norm.max(t.sup_norm);
                }
                Err(Error::Divergence { .. }) => {
                    divergences += 1;
                    exceed += 1;
                    cesaro += 1.0;
                    dist_sum = f64::INFINITY;
                    distances.push(f64::INFINITY);
                    sup_norm = f64::INFINITY;
                }
                Err(e) => return Err(e),
            }
        }
        let k = n_seeds as f64;
        rows.push(ProbeRow {
            gamma,
            p_ergodic: exceed as f64 / k,
            cesaro: cesaro / k,
            mean_dist_ergodic: dist_sum / k,
            sup_norm,
            divergences,
            seeds: n_seeds,
            distances,
        });
    }
    Ok(ProbeTable {
        epsilon,
        n_iters: base.n_iters,
        rows,
    })
}

impl ProbeTable {
    /// Number of adjacent pairs, in order of decreasing step size, where the
    /// probability increases by more than `slack`, and the largest such increase.
    pub fn inversions(&self, probability: impl Fn(&ProbeRow) -> f64, slack: f64) -> (usize, f64) {
        let mut rows: Vec<&ProbeRow> = self.rows.iter().collect();
        rows.sort_by(|a, b| b.gamma.total_cmp(&a.gamma));
        let mut count = 0;
        let mut worst: f64 = 0.0;
        for w in rows.windows(2) {
            let rise = probability(w[1]) - probability(w[0]);
            if rise > slack {
                count += 1;
                worst = worst.max(rise);
            }
        }
        (count, worst)
    }
}
