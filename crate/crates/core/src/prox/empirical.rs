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

use crate::data::Dataset;
use crate::error::{ensure_positive, Error, Result};
use crate::vector::{dot_slices, Vector};

use super::hinge::hinge;
use super::overlap::{DYKSTRA_MAX_CYCLES, DYKSTRA_TOL};
use super::{ProxFn, ProxResult};

/// Empirical hinge risk `F(x) = (1/m) sum_i h(eta_i <x, xi_i>)`.
///
/// Its prox has no closed form. It is computed with the same Dykstra-like
/// cyclic scheme as [`super::prox_overlap_group_sum`], one summand per sample.
/// The increment of sample `i` is always a multiple `c_i a_i` of
/// `a_i = eta_i xi_i`, so only the scalars `c_i` are stored.
#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalHinge {
    pub data: Dataset,
    pub tol: f64,
    pub max_iter: usize,
}

impl EmpiricalHinge {
    pub fn new(data: Dataset) -> Self {
        EmpiricalHinge {
            data,
            tol: DYKSTRA_TOL,
            max_iter: DYKSTRA_MAX_CYCLES,
        }
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn with_max_iter(mut self, max_iter: usize) -> Self {
        self.max_iter = max_iter;
        self
    }
}

impl ProxFn for EmpiricalHinge {
    fn value(&self, x: &Vector) -> f64 {
        let m = self.data.len() as f64;
        self.data.samples().iter().map(|s| hinge(s.margin(x))).sum::<f64>() / m
    }

    fn prox(&self, x: &Vector, gamma: f64) -> Result<ProxResult> {
        ensure_positive("gamma", gamma)?;
        ensure_positive("tol", self.tol)?;
        if x.len() != self.data.dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.data.dimension(),
                found: x.len(),
            });
        }
        let m = self.data.len();
        let step_cap = gamma / m as f64;
        let directions: Vec<Vector> = self.data.samples().iter().map(|s| s.direction()).collect();
        let sq_norms: Vec<f64> = directions.iter().map(|a| a.norm_squared()).collect();
        let mut coefs = vec![0.0; m];
        let mut y = x.clone();
        let mut previous = y.clone();
        let mut moved = f64::INFINITY;
        for _ in 0..self.max_iter {
            for i in 0..m {
                let q = sq_norms[i];
                if q == 0.0 {
                    continue;
                }
                let a = directions[i].as_slice();
                let aw = dot_slices(a, y.as_slice()) + coefs[i] * q;
                let s = ((1.0 - aw) / q).clamp(0.0, step_cap);
                let shift = coefs[i] + s;
                if shift != 0.0 {
                    for (yj, aj) in y.as_mut_slice().iter_mut().zip(a) {
                        *yj += shift * aj;
                    }
                }
                coefs[i] = -s;
            }
            moved = y.distance(&previous);
            previous.as_mut_slice().copy_from_slice(y.as_slice());
            if moved <= self.tol {
                let phi = self.value(&y);
                return Ok(ProxResult::new(y, x, gamma, phi));
            }
        }
        Err(Error::NonConvergence {
            method: "empirical hinge prox",
            iterations: self.max_iter,
            residual: moved,
        })
    }
}
