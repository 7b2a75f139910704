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

use crate::data::GroupSpec;
use crate::error::{ensure_positive, Error, Result};
use crate::vector::Vector;

use super::group::block_soft_threshold;
use super::{ProxFn, ProxResult};

pub const DYKSTRA_TOL: f64 = 1e-8;
pub const DYKSTRA_MAX_CYCLES: usize = 10_000;

/// Prox of `x -> weight * sum_j ||x_{S_j}||` by Dykstra-like cyclic splitting.
///
/// Each group `j` keeps an increment `u_j` supported on `S_j`; a cycle visits the
/// groups in order, forming `w = y + u_j`, replacing `y` by the block prox of `w`
/// on `S_j` and storing `u_j = w - y`. This is exact block coordinate ascent on
/// the dual of the prox problem, so `y` converges to the prox of the sum. Stops
/// once a full cycle moves `y` by at most `tol`.
pub fn prox_overlap_group_sum(
    x: &Vector,
    groups: &GroupSpec,
    weight: f64,
    gamma: f64,
    tol: f64,
    max_iter: usize,
) -> Result<ProxResult> {
    ensure_positive("gamma", gamma)?;
    ensure_positive("weight", weight)?;
    ensure_positive("tol", tol)?;
    if x.len() != groups.dimension() {
        return Err(Error::DimensionMismatch {
            expected: groups.dimension(),
            found: x.len(),
        });
    }
    let threshold = gamma * weight;
    let mut y = x.clone();
    let mut increments: Vec<Vec<f64>> = groups.groups().iter().map(|g| vec![0.0; g.len()]).collect();
    let mut block = Vec::new();
    let mut previous = y.clone();
    let mut moved = f64::INFINITY;

    for _ in 0..max_iter {
        for (group, u) in groups.groups().iter().zip(increments.iter_mut()) {
            let ys = y.as_mut_slice();
            block.clear();
            block.extend(group.iter().zip(u.iter()).map(|(&i, ui)| ys[i] + ui));
            let w = block.clone();
            block_soft_threshold(&mut block, threshold);
            for (k, &i) in group.iter().enumerate() {
                ys[i] = block[k];
                u[k] = w[k] - block[k];
            }
        }
        moved = y.distance(&previous);
        previous.as_mut_slice().copy_from_slice(y.as_slice());
        if moved <= tol {
            let phi = weight * groups.norm_sum(&y);
            return Ok(ProxResult::new(y, x, gamma, phi));
        }
    }
    Err(Error::NonConvergence {
        method: "dykstra-like splitting",
        iterations: max_iter,
        residual: moved,
    })
}

/// `x -> weight * sum_j ||x_{S_j}||` with an iterative prox.
#[derive(Debug, Clone, PartialEq)]
pub struct OverlapGroupNorm {
    pub groups: GroupSpec,
    pub weight: f64,
    pub tol: f64,
    pub max_iter: usize,
}

impl OverlapGroupNorm {
    pub fn new(groups: GroupSpec, weight: f64) -> Self {
        OverlapGroupNorm {
            groups,
            weight,
            tol: DYKSTRA_TOL,
            max_iter: DYKSTRA_MAX_CYCLES,
        }
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }
}

impl ProxFn for OverlapGroupNorm {
    fn value(&self, x: &Vector) -> f64 {
        self.weight * self.groups.norm_sum(x)
    }

    fn prox(&self, x: &Vector, gamma: f64) -> Result<ProxResult> {
        prox_overlap_group_sum(x, &self.groups, self.weight, gamma, self.tol, self.max_iter)
    }
}
