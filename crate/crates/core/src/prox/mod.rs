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

//! Proximity operators and Moreau envelopes.
//!
//! For a convex `phi` and `gamma > 0`,
//! `prox_{gamma phi}(x) = argmin_y 1/2 ||y - x||^2 + gamma phi(y)`.
//! Every function appearing in the hinge-loss / overlapping group lasso model
//! has an operator here, either in closed form or through a short inner solve.

mod check;
mod empirical;
mod group;
mod hinge;
mod logistic;
mod moreau;
mod numerical;
mod overlap;

pub use check::{prox_check, ProxCheckReport, ProxKind};
pub use empirical::EmpiricalHinge;
pub use group::{block_soft_threshold, prox_group_norm, GroupNorm};
pub use hinge::{hinge, prox_hinge_affine, HingeLoss};
pub use logistic::{logistic, prox_logistic_affine, LogisticLoss};
pub use moreau::{moreau_eval, MoreauEval};
pub use numerical::{numerical_prox_oracle, ORACLE_MAX_DIMENSION};
pub(crate) use numerical::minimize_in_box;
pub use overlap::{prox_overlap_group_sum, OverlapGroupNorm, DYKSTRA_MAX_CYCLES, DYKSTRA_TOL};

use crate::error::Result;
use crate::vector::Vector;

/// Output of a prox evaluation together with the value of the prox objective
/// `1/2 ||point - x||^2 + gamma phi(point)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProxResult {
    pub point: Vector,
    pub objective_value: f64,
}

impl ProxResult {
    pub(crate) fn new(point: Vector, x: &Vector, gamma: f64, phi_at_point: f64) -> Self {
        let objective_value = 0.5 * point.distance(x).powi(2) + gamma * phi_at_point;
        ProxResult {
            point,
            objective_value,
        }
    }
}

/// A closed convex function with a computable proximity operator.
pub trait ProxFn {
    fn value(&self, x: &Vector) -> f64;

    fn prox(&self, x: &Vector, gamma: f64) -> Result<ProxResult>;

    /// Moreau envelope value and gradient at `x`.
    fn moreau(&self, x: &Vector, gamma: f64) -> Result<MoreauEval> {
        let p = self.prox(x, gamma)?;
        let phi = self.value(&p.point);
        Ok(moreau_eval(&p, x, phi, gamma))
    }
}

/// `phi = 0`; its prox is the identity.
#[derive(Debug, Clone, Copy, Default)]
pub struct Zero;

impl ProxFn for Zero {
    fn value(&self, _x: &Vector) -> f64 {
        0.0
    }

    fn prox(&self, x: &Vector, gamma: f64) -> Result<ProxResult> {
        crate::error::ensure_positive("gamma", gamma)?;
        Ok(ProxResult::new(x.clone(), x, gamma, 0.0))
    }
}

/// `phi(x) = 1/2 ||x||^2`, prox `x / (1 + gamma)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct HalfSquaredNorm;

impl ProxFn for HalfSquaredNorm {
    fn value(&self, x: &Vector) -> f64 {
        0.5 * x.norm_squared()
    }

    fn prox(&self, x: &Vector, gamma: f64) -> Result<ProxResult> {
        crate::error::ensure_positive("gamma", gamma)?;
        let p = x.scaled(1.0 / (1.0 + gamma));
        let v = self.value(&p);
        Ok(ProxResult::new(p, x, gamma, v))
    }
}

impl<T: ProxFn + ?Sized> ProxFn for &T {
    fn value(&self, x: &Vector) -> f64 {
        (**self).value(x)
    }

    fn prox(&self, x: &Vector, gamma: f64) -> Result<ProxResult> {
        (**self).prox(x, gamma)
    }
}
