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

//! The `sdr` command line: `solve`, `benchmark`, `probe`, `prox-check` and `oracle`.
//!
//! Every command reads an optional JSON [`ExperimentConfig`], applies the flag
//! overrides, validates the result and writes CSV series plus a `summary.json`
//! holding the effective config into the output directory.

pub mod io;

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use sdr_core::experiments::{benchmark_on, ExperimentConfig};
use sdr_core::oracle::{reference_solve, theorem1_probe, ReferenceSolution};
use sdr_core::prox::prox_check;
use sdr_core::solvers::{parallelism, run, Algorithm, Init, RunSettings};
use sdr_core::Problem;

pub use io::{parse_config, parse_config_str, RECORD_COLUMNS};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(name = "sdr", version, about = "Stochastic Douglas-Rachford experiments")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run one algorithm on one seed.
    Solve {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        gamma: Option<f64>,
        #[arg(long, default_value = "sdr")]
        algo: Algorithm,
    },
    /// Paired fully vs partially stochastic comparison.
    Benchmark {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        gamma: Option<f64>,
        #[arg(long)]
        seeds: Option<usize>,
    },
    /// Probability that the ergodic mean is at least epsilon from the solution.
    Probe {
        #[command(flatten)]
        common: Common,
        /// Comma-separated step sizes.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        gammas: Option<Vec<f64>>,
        #[arg(long)]
        seeds: Option<usize>,
        /// Absolute radius; defaults to `epsilon_rel * ||x*||`.
        #[arg(long, allow_hyphen_values = true)]
        epsilon: Option<f64>,
    },
    /// Check every prox operator against the numerical oracle.
    ProxCheck {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 1e-6)]
        tolerance: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute and store the reference solution.
    Oracle {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Args)]
pub struct Common {
    /// JSON experiment config; defaults apply to missing keys.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Output directory, created if needed.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub iters: Option<usize>,
    /// Reuse a reference written by `sdr oracle` instead of solving again.
    #[arg(long)]
    pub reference: Option<PathBuf>,
}

struct Loaded {
    config: ExperimentConfig,
    problem: Problem,
    out: PathBuf,
}

impl Common {
    fn load(&self, edit: impl FnOnce(&mut ExperimentConfig)) -> Result<Loaded> {
        let mut config = match &self.config {
            Some(path) => parse_config(path)?,
            None => ExperimentConfig::default(),
        };
        if let Some(seed) = self.seed {
            config.seed = seed;
        }
        if let Some(iters) = self.iters {
            config.n_iters = iters;
        }
        edit(&mut config);
        config.validate().context("invalid flags")?;
        let out = self
            .out
            .clone()
            .or_else(|| config.output.as_ref().map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from("results"));
        fs::create_dir_all(&out).with_context(|| format!("cannot create {}", out.display()))?;
        let problem = config.generate()?.problem;
        Ok(Loaded { config, problem, out })
    }

    fn reference(&self, ctx: &Loaded) -> Result<ReferenceSolution> {
        if let Some(path) = &self.reference {
            let r = io::read_reference(path)?;
            if r.point.len() != ctx.problem.dimension() {
                bail!(
                    "reference {} has dimension {}, the problem has {}",
                    path.display(),
                    r.point.len(),
                    ctx.problem.dimension()
                );
            }
            return Ok(r);
        }
        let start = Instant::now();
        let r = reference_solve(&ctx.problem, ctx.config.reference_budget, ctx.config.seed)?;
        eprintln!(
            "reference: objective {:.9}, |x*| {:.4}, {:.1}s",
            r.objective,
            r.point.norm(),
            start.elapsed().as_secs_f64()
        );
        Ok(r)
    }
}

fn settings(config: &ExperimentConfig, gamma: f64, seed: u64) -> RunSettings {
    let mut s = RunSettings::new(gamma, config.n_iters, seed).with_record_every(config.record_every);
    s.inner_tol = config.dykstra_tol;
    if config.init_scale > 0.0 {
        s.init = Init::Gaussian {
            scale: config.init_scale,
        };
    }
    s
}

#[derive(Serialize)]
struct Summary<'a, T: Serialize> {
    command: &'static str,
    version: &'static str,
    config: &'a ExperimentConfig,
    reference_objective: Option<f64>,
    #[serde(flatten)]
    result: T,
}

fn summarize<T: Serialize>(
    out: &Path,
    command: &'static str,
    config: &ExperimentConfig,
    reference: Option<&ReferenceSolution>,
    result: T,
) -> Result<()> {
    io::write_json(
        &out.join("summary.json"),
        &Summary {
            command,
            version: VERSION,
            config,
            reference_objective: reference.map(|r| r.objective),
            result,
        },
    )
}

/// Runs a parsed command. `Ok(false)` means the command ran but its check failed.
pub fn execute(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Solve { common, gamma, algo } => {
            let ctx = common.load(|c| {
                if let Some(g) = gamma {
                    c.benchmark_gamma = g;
                }
            })?;
            let reference = common.reference(&ctx)?;
            let gamma = ctx.config.benchmark_gamma;
            let s = settings(&ctx.config, gamma, ctx.config.seed).with_reference(reference.point.clone());
            let t = run(&ctx.problem, &s, algo)?;
            io::write_records(&ctx.out.join(format!("{}.csv", algo.name())), &t.records)?;
            #[derive(Serialize)]
            struct Solve<'a> {
                algorithm: &'static str,
                gamma: f64,
                seed: u64,
                iterations: usize,
                solver_seconds: f64,
                sup_norm: f64,
                final_record: &'a sdr_core::solvers::RunRecord,
                ergodic_mean: &'a sdr_core::Vector,
                draw_hash: u64,
            }
            let last = t.final_record();
            eprintln!(
                "{} gamma {gamma}: F+G(y) {:.6}, F+G(x_bar) {:.6}, d(x_bar) {:.4}",
                algo.name(),
                last.objective_y,
                last.objective_ergodic,
                last.dist_ergodic.unwrap_or(f64::NAN)
            );
            summarize(
                &ctx.out,
                "solve",
                &ctx.config,
                Some(&reference),
                Solve {
                    algorithm: algo.name(),
                    gamma,
                    seed: t.seed,
                    iterations: t.iterations(),
                    solver_seconds: t.solver_seconds,
                    sup_norm: t.sup_norm,
                    final_record: last,
                    ergodic_mean: t.ergodic.mean(),
                    draw_hash: t.draw_hash,
                },
            )?;
            Ok(true)
        }
        Command::Benchmark { common, gamma, seeds } => {
            let ctx = common.load(|c| {
                if let Some(g) = gamma {
                    c.benchmark_gamma = g;
                }
                if let Some(n) = seeds {
                    c.n_seeds = n;
                }
            })?;
            let reference = common.reference(&ctx)?;
            eprintln!("benchmark: {} seeds on {} threads", ctx.config.n_seeds, parallelism());
            let report = benchmark_on(&ctx.config, &ctx.problem, &reference)?;
            io::write_records(&ctx.out.join("sdr.csv"), &report.sdr_series)?;
            io::write_records(&ctx.out.join("psdr.csv"), &report.psdr_series)?;
            io::write_histogram(&ctx.out.join("histogram.csv"), &report.histogram)?;
            eprintln!(
                "sdr reached {:.6} first in {}/{} seeds",
                report.threshold,
                report.sdr_wins,
                report.outcomes.len()
            );
            #[derive(Serialize)]
            struct Bench<'a> {
                threshold: f64,
                sdr_wins: usize,
                outcomes: &'a [sdr_core::experiments::SeedOutcome],
            }
            summarize(
                &ctx.out,
                "benchmark",
                &ctx.config,
                Some(&reference),
                Bench {
                    threshold: report.threshold,
                    sdr_wins: report.sdr_wins,
                    outcomes: &report.outcomes,
                },
            )?;
            Ok(true)
        }
        Command::Probe {
            common,
            gammas,
            seeds,
            epsilon,
        } => {
            let ctx = common.load(|c| {
                if let Some(g) = gammas {
                    c.gammas = g;
                }
                if let Some(n) = seeds {
                    c.n_seeds = n;
                }
            })?;
            let reference = common.reference(&ctx)?;
            let epsilon = epsilon.unwrap_or(ctx.config.epsilon_rel * reference.point.norm());
            let base = settings(&ctx.config, ctx.config.gammas[0], ctx.config.seed);
            let table = theorem1_probe(
                &ctx.problem,
                &reference,
                &ctx.config.gammas,
                &base,
                ctx.config.n_seeds,
                epsilon,
            )?;
            io::write_probe(&ctx.out.join("probe.csv"), &table)?;
            for r in &table.rows {
                eprintln!("gamma {:<8} P {:.2}  cesaro {:.3}", r.gamma, r.p_ergodic, r.cesaro);
            }
            summarize(&ctx.out, "probe", &ctx.config, Some(&reference), &table)?;
            Ok(true)
        }
        Command::ProxCheck {
            seed,
            trials,
            tolerance,
            out,
        } => {
            let reports = prox_check(trials, seed, tolerance)?;
            for r in &reports {
                println!(
                    "{:<18} max error {:.2e}  {}",
                    r.kind.name(),
                    r.max_error,
                    if r.passed { "ok" } else { "FAILED" }
                );
            }
            if let Some(out) = out {
                fs::create_dir_all(&out).with_context(|| format!("cannot create {}", out.display()))?;
                io::write_json(&out.join("prox_check.json"), &reports)?;
            }
            Ok(reports.iter().all(|r| r.passed))
        }
        Command::Oracle { common } => {
            let ctx = common.load(|_| {})?;
            let reference = common.reference(&ctx)?;
            io::write_json(&ctx.out.join("reference.json"), &reference)?;
            summarize(&ctx.out, "oracle", &ctx.config, Some(&reference), &reference)?;
            Ok(true)
        }
    }
}
