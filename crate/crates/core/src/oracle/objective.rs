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

use crate::data::{Dataset, GroupSpec, Problem};
use crate::prox::hinge;
use crate::vector::{dot_slices, Vector};

/// `(1/m) sum_i max(0, 1 - eta_i <x, xi_i>)`.
pub fn hinge_risk(x: &Vector, data: &Dataset) -> f64 {
    let sum: f64 = data
        .samples()
        .iter()
        .map(|s| hinge(s.label.value() * dot_slices(s.features.as_slice(), x.as_slice())))
        .sum();
    sum / data.len() as f64
}

/// The loss and regularizer values `(F(x), G(x))` separately.
pub fn objective_parts(x: &Vector, data: &Dataset, groups: &GroupSpec, weight: f64) -> (f64, f64) {
    (hinge_risk(x, data), weight * groups.norm_sum(x))
}

/// `F(x) + G(x)` for the empirical hinge risk and the weighted group lasso.
pub fn empirical_objective(x: &Vector, problem: &Problem) -> f64 {
    let (f, g) = objective_parts(x, &problem.data, &problem.groups, problem.weight);
    f + g
}
