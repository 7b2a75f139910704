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

use serde::{Deserialize, Serialize};

use crate::data::GroupSpec;
use crate::error::{Error, Result};

/// Group structure of an experiment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupLayout {
    /// See [`GroupSpec::chain`].
    Chain { count: usize, size: usize, overlap: usize },
    /// Explicit zero-based index lists.
    Explicit(Vec<Vec<usize>>),
}

impl Default for GroupLayout {
    fn default() -> Self {
        GroupLayout::Chain {
            count: 10,
            size: 30,
            overlap: 10,
        }
    }
}

/// Every free parameter of a run, with the desk-scale defaults.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    /// `N`.
    pub dimension: usize,
    pub groups: GroupLayout,
    /// Number of groups carrying the planted weights.
    pub active_groups: usize,
    /// `m`.
    pub samples: usize,
    /// Standard deviation of each feature.
    pub feature_scale: f64,
    /// Label flip probability.
    pub noise: f64,
    /// Regularization weight multiplying `sum_j ||x_{S_j}||`.
    pub weight: f64,
    /// Step sizes of the convergence probe.
    pub gammas: Vec<f64>,
    /// Step size shared by both algorithms in the benchmark.
    pub benchmark_gamma: f64,
    pub n_iters: usize,
    pub n_seeds: usize,
    pub record_every: usize,
    /// First run seed; seed `k` of a sweep is `seed + k`.
    pub seed: u64,
    /// Seed of the synthetic dataset.
    pub data_seed: u64,
    /// Iterations of the reference subgradient solver.
    pub reference_budget: usize,
    /// Probe radius as a fraction of `||x*||`.
    pub epsilon_rel: f64,
    /// Benchmark target, as a multiple of the reference objective.
    pub threshold_ratio: f64,
    /// Stopping tolerance of the Dykstra-like inner prox.
    pub dykstra_tol: f64,
    /// Standard deviation of the Gaussian initial point, 0 starts at the origin.
    pub init_scale: f64,
    pub output: Option<String>,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            dimension: 200,
            groups: GroupLayout::default(),
            active_groups: 1,
            samples: 1000,
            feature_scale: 0.25,
            noise: 0.05,
            weight: 0.07,
            gammas: vec![0.5, 0.05, 0.005],
            benchmark_gamma: 0.005,
            n_iters: 100_000,
            n_seeds: 20,
            record_every: 100,
            seed: 0,
            data_seed: 0,
            reference_budget: 100_000,
            epsilon_rel: 0.1,
            threshold_ratio: 1.05,
            dykstra_tol: 1e-8,
            init_scale: 0.0,
            output: None,
        }
    }
}

fn positive(field: &'static str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::invalid(field, format!("must be a finite positive number, got {v}")))
    }
}

fn at_least(field: &'static str, v: usize, min: usize) -> Result<()> {
    if v >= min {
        Ok(())
    } else {
        Err(Error::invalid(field, format!("must be at least {min}, got {v}")))
    }
}

impl ExperimentConfig {
    pub fn group_spec(&self) -> Result<GroupSpec> {
        match &self.groups {
            GroupLayout::Chain { count, size, overlap } => GroupSpec::chain(self.dimension, *count, *size, *overlap),
            GroupLayout::Explicit(groups) => GroupSpec::new(self.dimension, groups.clone()),
        }
    }

    /// Checks every constraint, naming the offending field.
    pub fn validate(&self) -> Result<()> {
        at_least("dimension", self.dimension, 1)?;
        let groups = self.group_spec()?;
        if !groups.covers_all() {
            return Err(Error::invalid("groups", "every coordinate must belong to at least one group"));
        }
        at_least("active_groups", self.active_groups, 1)?;
        if self.active_groups > groups.count() {
            return Err(Error::invalid(
                "active_groups",
                format!("cannot exceed the {} groups", groups.count()),
            ));
        }
        at_least("samples", self.samples, 1)?;
        positive("feature_scale", self.feature_scale)?;
        if !(0.0..=0.5).contains(&self.noise) {
            return Err(Error::invalid("noise", format!("must lie in [0, 0.5], got {}", self.noise)));
        }
        positive("weight", self.weight)?;
        if self.gammas.is_empty() {
            return Err(Error::invalid("gammas", "must not be empty"));
        }
        for &g in &self.gammas {
            positive("gammas", g)?;
        }
        positive("benchmark_gamma", self.benchmark_gamma)?;
        at_least("n_iters", self.n_iters, 1)?;
        at_least("n_seeds", self.n_seeds, 1)?;
        at_least("record_every", self.record_every, 1)?;
        at_least("reference_budget", self.reference_budget, crate::oracle::MIN_REFERENCE_BUDGET)?;
        positive("epsilon_rel", self.epsilon_rel)?;
        if !(self.threshold_ratio.is_finite() && self.threshold_ratio >= 1.0) {
            return Err(Error::invalid(
                "threshold_ratio",
                format!("must be at least 1, got {}", self.threshold_ratio),
            ));
        }
        positive("dykstra_tol", self.dykstra_tol)?;
        if !(self.init_scale.is_finite() && self.init_scale >= 0.0) {
            return Err(Error::invalid("init_scale", format!("must be nonnegative, got {}", self.init_scale)));
        }
        Ok(())
    }

    pub fn seeds(&self) -> Vec<u64> {
        (0..self.n_seeds as u64).map(|k| self.seed.wrapping_add(k)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid() {
        ExperimentConfig::default().validate().unwrap();
        let g = ExperimentConfig::default().group_spec().unwrap();
        assert_eq!(g.count(), 10);
    }

    #[test]
    fn names_bad_field() {
        let c = ExperimentConfig {
            gammas: vec![0.1, -1.0],
            ..Default::default()
        };
        match c.validate() {
            Err(Error::InvalidParameter { field, .. }) => assert_eq!(field, "gammas"),
            other => panic!("{other:?}"),
        }
        let c = ExperimentConfig {
            active_groups: 11,
            ..Default::default()
        };
        assert!(matches!(c.validate(), Err(Error::InvalidParameter { field: "active_groups", .. })));
    }

    #[test]
    fn explicit_groups_parse() {
        let c: ExperimentConfig =
            serde_json::from_str(r#"{"dimension": 2, "groups": [[0], [0, 1]], "active_groups": 1}"#).unwrap();
        assert_eq!(c.groups, GroupLayout::Explicit(vec![vec![0], vec![0, 1]]));
        c.validate().unwrap();
        assert_eq!(c.samples, 1000);
    }

    #[test]
    fn unknown_keys_rejected() {
        assert!(serde_json::from_str::<ExperimentConfig>(r#"{"dimensions": 3}"#).is_err());
    }
}
