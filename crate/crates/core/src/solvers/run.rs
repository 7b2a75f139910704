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

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::data::{draw_index, Problem};
use crate::error::{ensure_positive, Error, Result};
use crate::oracle::empirical_objective;
use crate::prox::{prox_hinge_affine, prox_overlap_group_sum, EmpiricalHinge, OverlapGroupNorm, DYKSTRA_MAX_CYCLES, DYKSTRA_TOL};
use crate::rng::{SeededRng, Stream};
use crate::vector::Vector;

use super::{dr_step, dr_step_deterministic, dr_step_stochastic, DrState, ErgodicAverage};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    /// Fully stochastic: one sample and one group per iteration.
    Sdr,
    /// Stochastic in the loss only, exact prox of the whole regularizer.
    Psdr,
    /// Deterministic, exact proxes of both terms.
    Dr,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Sdr => "sdr",
            Algorithm::Psdr => "psdr",
            Algorithm::Dr => "dr",
        }
    }
}

impl std::str::FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sdr" => Ok(Algorithm::Sdr),
            "psdr" => Ok(Algorithm::Psdr),
            "dr" => Ok(Algorithm::Dr),
            other => Err(Error::invalid("algo", format!("expected sdr, psdr or dr, got {other}"))),
        }
    }
}

/// Distribution of `x_0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Init {
    Zero,
    Point(Vector),
    /// Independent `N(0, scale^2)` coordinates drawn from the run seed.
    Gaussian { scale: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunSettings {
    pub gamma: f64,
    pub n_iters: usize,
    pub seed: u64,
    pub record_every: usize,
    pub init: Init,
    /// Solution estimate used for distance metrics, if known.
    pub reference: Option<Vector>,
    /// Threshold for the fraction of iterates farther than `epsilon` from the reference.
    pub epsilon: Option<f64>,
    /// Keep every `x_n` in the trajectory.
    pub keep_iterates: bool,
    /// Stopping tolerance of inner iterative proxes.
    pub inner_tol: f64,
    pub inner_max_iter: usize,
}

impl RunSettings {
    pub fn new(gamma: f64, n_iters: usize, seed: u64) -> Self {
        RunSettings {
            gamma,
            n_iters,
            seed,
            record_every: 100,
            init: Init::Zero,
            reference: None,
            epsilon: None,
            keep_iterates: false,
            inner_tol: DYKSTRA_TOL,
            inner_max_iter: DYKSTRA_MAX_CYCLES,
        }
    }

    pub fn with_reference(mut self, reference: Vector) -> Self {
        self.reference = Some(reference);
        self
    }

    pub fn with_record_every(mut self, every: usize) -> Self {
        self.record_every = every;
        self
    }

    fn validate(&self, dimension: usize) -> Result<()> {
        ensure_positive("gamma", self.gamma)?;
        ensure_positive("inner_tol", self.inner_tol)?;
        if self.n_iters == 0 {
            return Err(Error::invalid("iters", "must be at least 1"));
        }
        if self.record_every == 0 {
            return Err(Error::invalid("record_every", "must be at least 1"));
        }
        if let Some(r) = &self.reference {
            if r.len() != dimension {
                return Err(Error::DimensionMismatch {
                    expected: dimension,
                    found: r.len(),
                });
            }
        }
        if let Some(eps) = self.epsilon {
            if eps.is_nan() || eps < 0.0 {
                return Err(Error::invalid("epsilon", format!("must be nonnegative, got {eps}")));
            }
        }
        Ok(())
    }
}

/// One row of a time series.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub iteration: usize,
    /// Solver time so far, excluding the evaluation of these metrics.
    pub wall_seconds: f64,
    /// `F + G` at `y_n`.
    pub objective_y: f64,
    /// `F + G` at the ergodic mean (at `x_0` for iteration 0).
    pub objective_ergodic: f64,
    /// Distance from the ergodic mean to the reference point.
    pub dist_ergodic: Option<f64>,
}

#[derive(Debug, Clone)]
pub struct Trajectory {
    pub algorithm: Algorithm,
    pub gamma: f64,
    pub seed: u64,
    pub records: Vec<RunRecord>,
    pub initial: Vector,
    pub final_state: DrState,
    pub ergodic: ErgodicAverage,
    /// `sup_n ||x_n||` over the run, `x_0` included.
    pub sup_norm: f64,
    /// `x_0, ..., x_n` when requested.
    pub iterates: Option<Vec<Vector>>,
    /// FNV-1a hash of the drawn sample indices.
    pub draw_hash: u64,
    /// `(1/(n+1)) sum_{k=0}^n 1{d(x_k) > epsilon}` when a reference and epsilon are set.
    pub exceed_fraction: Option<f64>,
    /// Mean of `||x_{k+1} - x*||^2 - ||x_k - x*||^2` over each recording window,
    /// keyed by the window's last iteration.
    pub drift: Vec<(usize, f64)>,
    pub solver_seconds: f64,
}

impl Trajectory {
    pub fn final_record(&self) -> &RunRecord {
        self.records.last().expect("a trajectory always holds the initial record")
    }

    /// First solver time at which `objective(record) <= threshold`.
    pub fn time_to_threshold(&self, threshold: f64, objective: impl Fn(&RunRecord) -> f64) -> Option<f64> {
        self.records
            .iter()
            .find(|r| objective(r) <= threshold)
            .map(|r| r.wall_seconds)
    }

    pub fn iterations(&self) -> usize {
        self.final_state.iter
    }
}

struct Draws {
    data: SeededRng,
    groups: SeededRng,
    hash: u64,
}

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

impl Draws {
    fn new(seed: u64) -> Self {
        Draws {
            data: SeededRng::stream(seed, Stream::Data),
            groups: SeededRng::stream(seed, Stream::Groups),
            hash: FNV_OFFSET,
        }
    }

    fn sample(&mut self, problem: &Problem) -> usize {
        let i = draw_index(&problem.data, &mut self.data);
        for byte in (i as u64).to_le_bytes() {
            self.hash ^= byte as u64;
            self.hash = self.hash.wrapping_mul(FNV_PRIME);
        }
        i
    }

    fn group(&mut self, problem: &Problem) -> usize {
        self.groups.index(problem.groups.count())
    }
}

fn initial_point(init: &Init, dimension: usize, seed: u64) -> Result<Vector> {
    match init {
        Init::Zero => Ok(Vector::zeros(dimension)),
        Init::Point(p) if p.len() == dimension => Ok(p.clone()),
        Init::Point(p) => Err(Error::DimensionMismatch {
            expected: dimension,
            found: p.len(),
        }),
        Init::Gaussian { scale } => {
            if !(scale.is_finite() && *scale >= 0.0) {
                return Err(Error::invalid("init_scale", format!("must be finite and nonnegative, got {scale}")));
            }
            let mut rng = SeededRng::stream(seed, Stream::Init);
            Vector::new((0..dimension).map(|_| scale * rng.standard_normal()).collect())
        }
    }
}

fn record(problem: &Problem, state: &DrState, ergodic: &ErgodicAverage, settings: &RunSettings, elapsed: Duration) -> RunRecord {
    let mean = if ergodic.count() == 0 { &state.x } else { ergodic.mean() };
    RunRecord {
        iteration: state.iter,
        wall_seconds: elapsed.as_secs_f64(),
        objective_y: empirical_objective(&state.y, problem),
        objective_ergodic: empirical_objective(mean, problem),
        dist_ergodic: settings.reference.as_ref().map(|r| mean.distance(r)),
    }
}

fn run_with<S>(problem: &Problem, settings: &RunSettings, algorithm: Algorithm, mut step: S) -> Result<Trajectory>
where
    S: FnMut(&DrState, &mut Draws) -> Result<DrState>,
{
    let dimension = problem.dimension();
    settings.validate(dimension)?;
    let x0 = initial_point(&settings.init, dimension, settings.seed)?;
    let mut state = DrState::new(x0.clone(), settings.gamma)?;
    let mut ergodic = ErgodicAverage::new(dimension);
    let mut draws = Draws::new(settings.seed);
    let mut records = vec![record(problem, &state, &ergodic, settings, Duration::ZERO)];
    let mut iterates = settings.keep_iterates.then(|| vec![x0.clone()]);
    let mut sup_norm = x0.norm();

    let reference = settings.reference.as_ref();
    let mut dist_sq = reference.map(|r| x0.distance(r).powi(2));
    let exceeds = |d_sq: f64| settings.epsilon.is_some_and(|eps| d_sq.sqrt() > eps);
    let mut exceed_count = dist_sq.map_or(0, |d| exceeds(d) as usize);
    let mut drift = Vec::new();
    let mut drift_sum = 0.0;
    let mut drift_len = 0usize;

    let mut elapsed = Duration::ZERO;
    let mut started = Instant::now();
    for n in 1..=settings.n_iters {
        state = step(&state, &mut draws)?;
        if state.x.first_non_finite().is_some() {
            return Err(Error::Divergence { iteration: n });
        }
        ergodic.update(&state.x);
        sup_norm = sup_norm.max(state.x.norm());
        if let (Some(r), Some(prev)) = (reference, dist_sq) {
            let d = state.x.distance(r).powi(2);
            drift_sum += d - prev;
            drift_len += 1;
            exceed_count += exceeds(d) as usize;
            dist_sq = Some(d);
        }
        if let Some(it) = iterates.as_mut() {
            it.push(state.x.clone());
        }
        if n % settings.record_every == 0 || n == settings.n_iters {
            elapsed += started.elapsed();
            records.push(record(problem, &state, &ergodic, settings, elapsed));
            if drift_len > 0 {
                drift.push((n, drift_sum / drift_len as f64));
                drift_sum = 0.0;
                drift_len = 0;
            }
            started = Instant::now();
        }
    }

    let exceed_fraction = match (reference, settings.epsilon) {
        (Some(_), Some(_)) => Some(exceed_count as f64 / (settings.n_iters + 1) as f64),
        _ => None,
    };
    Ok(Trajectory {
        algorithm,
        gamma: settings.gamma,
        seed: settings.seed,
        records,
        initial: x0,
        final_state: state,
        ergodic,
        sup_norm,
        iterates,
        draw_hash: draws.hash,
        exceed_fraction,
        drift,
        solver_seconds: elapsed.as_secs_f64(),
    })
}

/// Fully stochastic DR: each iteration draws a sample `(xi_n, eta_n)` and a
/// uniform group `J_n` from independent streams of `settings.seed`.
pub fn run_stochastic_dr(problem: &Problem, settings: &RunSettings) -> Result<Trajectory> {
    run_with(problem, settings, Algorithm::Sdr, |state, draws| {
        let i = draws.sample(problem);
        let j = draws.group(problem);
        dr_step_stochastic(state, problem.data.get(i), j, &problem.groups, problem.weight)
    })
}

/// DR that samples only the loss and applies the exact prox of the whole
/// overlapping group regularizer every iteration. Draws the same sample
/// sequence as [`run_stochastic_dr`] under the same seed.
pub fn run_partially_stochastic_dr(problem: &Problem, settings: &RunSettings) -> Result<Trajectory> {
    let gamma = settings.gamma;
    run_with(problem, settings, Algorithm::Psdr, |state, draws| {
        let sample = problem.data.get(draws.sample(problem));
        dr_step(
            state,
            |x| Ok(prox_hinge_affine(x, sample, gamma)?.point),
            |v| {
                let p = prox_overlap_group_sum(
                    v,
                    &problem.groups,
                    problem.weight,
                    gamma,
                    settings.inner_tol,
                    settings.inner_max_iter,
                )?;
                Ok(p.point)
            },
        )
    })
}

/// Deterministic DR on the empirical objective, with iterative exact proxes.
pub fn run_deterministic_dr(problem: &Problem, settings: &RunSettings) -> Result<Trajectory> {
    let f = EmpiricalHinge::new(problem.data.clone())
        .with_tol(settings.inner_tol)
        .with_max_iter(settings.inner_max_iter);
    let mut g = OverlapGroupNorm::new(problem.groups.clone(), problem.weight).with_tol(settings.inner_tol);
    g.max_iter = settings.inner_max_iter;
    run_with(problem, settings, Algorithm::Dr, |state, _| dr_step_deterministic(state, &f, &g))
}

pub fn run(problem: &Problem, settings: &RunSettings, algorithm: Algorithm) -> Result<Trajectory> {
    match algorithm {
        Algorithm::Sdr => run_stochastic_dr(problem, settings),
        Algorithm::Psdr => run_partially_stochastic_dr(problem, settings),
        Algorithm::Dr => run_deterministic_dr(problem, settings),
    }
}

/// Worker count for seed-level parallelism: `SDR_THREADS` if set, else the
/// number of available cores.
pub fn parallelism() -> usize {
    std::env::var("SDR_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

/// Runs `algorithm` once per seed, in parallel. Results keep the seed order.
pub fn run_seeds(problem: &Problem, settings: &RunSettings, algorithm: Algorithm, seeds: &[u64]) -> Vec<Result<Trajectory>> {
    let job = || {
        seeds
            .par_iter()
            .map(|&seed| {
                let mut s = settings.clone();
                s.seed = seed;
                run(problem, &s, algorithm)
            })
            .collect()
    };
    match rayon::ThreadPoolBuilder::new().num_threads(parallelism()).build() {
        Ok(pool) => pool.install(job),
        Err(_) => job(),
    }
}
