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

//! Randomized agreement check of every operator against the numerical oracle.

use serde::Serialize;

use crate::data::{GroupSpec, Label, Sample};
use crate::error::Result;
use crate::rng::SeededRng;
use crate::vector::Vector;

use super::{numerical_prox_oracle, GroupNorm, HingeLoss, LogisticLoss, OverlapGroupNorm, ProxFn};

const ORACLE_RESOLUTION: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProxKind {
    GroupNorm,
    Hinge,
    Logistic,
    OverlapGroupSum,
}

impl ProxKind {
    pub const ALL: [ProxKind; 4] = [
        ProxKind::GroupNorm,
        ProxKind::Hinge,
        ProxKind::Logistic,
        ProxKind::OverlapGroupSum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProxKind::GroupNorm => "group_norm",
            ProxKind::Hinge => "hinge",
            ProxKind::Logistic => "logistic",
            ProxKind::OverlapGroupSum => "overlap_group_sum",
        }
    }

    /// A random instance of this kind in dimension `d` (1 to 3).
    pub fn random_instance(self, d: usize, rng: &mut SeededRng) -> Box<dyn ProxFn + Send + Sync> {
        let weight = 0.2 + 1.8 * rng.uniform();
        match self {
            ProxKind::GroupNorm => {
                let k = 1 + rng.index(d);
                Box::new(GroupNorm::new(rng.subset(d, k), weight))
            }
            ProxKind::Hinge => Box::new(HingeLoss::new(random_sample(d, rng))),
            ProxKind::Logistic => Box::new(LogisticLoss::new(random_sample(d, rng), 1e-14)),
            ProxKind::OverlapGroupSum => {
                let layouts: &[&[&[usize]]] = match d {
                    1 => &[&[&[0], &[0]]],
                    2 => &[&[&[0], &[0, 1]], &[&[0, 1], &[1]], &[&[0], &[1], &[0, 1]]],
                    _ => &[
                        &[&[0, 1], &[1, 2]],
                        &[&[0, 1, 2], &[1]],
                        &[&[0], &[0, 1], &[1, 2]],
                        &[&[0, 1], &[1, 2], &[0, 2]],
                    ],
                };
                let layout = layouts[rng.index(layouts.len())];
                let groups = GroupSpec::new(d, layout.iter().map(|g| g.to_vec()).collect())
                    .expect("static layouts are valid");
                let mut f = OverlapGroupNorm::new(groups, weight).with_tol(1e-14);
                f.max_iter = 1_000_000;
                Box::new(f)
            }
        }
    }
}

fn random_sample(d: usize, rng: &mut SeededRng) -> Sample {
    let features = Vector::from_vec_unchecked((0..d).map(|_| rng.standard_normal()).collect());
    let label = if rng.bernoulli(0.5) {
        Label::Positive
    } else {
        Label::Negative
    };
    Sample::new(features, label)
}

pub(crate) fn random_point(d: usize, scale: f64, rng: &mut SeededRng) -> Vector {
    Vector::from_vec_unchecked((0..d).map(|_| scale * rng.standard_normal()).collect())
}

#[derive(Debug, Clone, Serialize)]
pub struct ProxCheckReport {
    pub kind: ProxKind,
    pub trials: usize,
    /// Largest `||prox - oracle||_inf` observed.
    pub max_error: f64,
    pub tolerance: f64,
    pub passed: bool,
}

/// Compares each operator with [`numerical_prox_oracle`] on `trials` random
/// inputs of dimension at most 3.
pub fn prox_check(trials: usize, seed: u64, tolerance: f64) -> Result<Vec<ProxCheckReport>> {
    ProxKind::ALL
        .iter()
        .enumerate()
        .map(|(k, &kind)| {
            let mut rng = SeededRng::new(seed.wrapping_add(k as u64));
            let mut max_error: f64 = 0.0;
            for _ in 0..trials {
                let d = 1 + rng.index(3);
                let f = kind.random_instance(d, &mut rng);
                let x = random_point(d, 2.0, &mut rng);
                let gamma = 0.1 + 1.9 * rng.uniform();
                let p = f.prox(&x, gamma)?.point;
                let oracle = numerical_prox_oracle(|y| f.value(y), &x, gamma, ORACLE_RESOLUTION)?;
                max_error = max_error.max(p.sub(&oracle).max_abs());
            }
            Ok(ProxCheckReport {
                kind,
                trials,
                max_error,
                tolerance,
                passed: max_error <= tolerance,
            })
        })
        .collect()
}
