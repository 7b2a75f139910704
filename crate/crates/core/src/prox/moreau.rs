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

use crate::vector::Vector;

use super::ProxResult;

/// Moreau envelope `phi_gamma(x) = min_y phi(y) + ||y - x||^2 / (2 gamma)` and its
/// gradient `(x - prox_{gamma phi}(x)) / gamma`.
#[derive(Debug, Clone, PartialEq)]
pub struct MoreauEval {
    pub value: f64,
    pub gradient: Vector,
}

/// Envelope value and gradient from an already computed prox of the same
/// `phi` and `gamma` at `x`. `phi_at_prox` is `phi(prox_output.point)`.
pub fn moreau_eval(prox_output: &ProxResult, x: &Vector, phi_at_prox: f64, gamma: f64) -> MoreauEval {
    let p = &prox_output.point;
    let value = phi_at_prox + p.distance(x).powi(2) / (2.0 * gamma);
    let gradient = x.sub(p).scaled(1.0 / gamma);
    MoreauEval { value, gradient }
}
