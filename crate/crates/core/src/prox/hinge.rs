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

use crate::data::Sample;
use crate::error::{ensure_positive, Result};
use crate::vector::{dot_slices, Vector};

use super::{ProxFn, ProxResult};

/// `h(z) = max(0, 1 - z)`.
pub fn hinge(z: f64) -> f64 {
    (1.0 - z).max(0.0)
}

/// Prox of `x -> h(eta <x, xi>)`.
///
/// With `a = eta * xi` the output is `x + s a` where
/// `s = clamp((1 - <a, x>) / ||a||^2, 0, gamma)`. The minimizer moves along `a`
/// because every subgradient of the loss is a nonpositive multiple of `a`.
pub fn prox_hinge_affine(x: &Vector, sample: &Sample, gamma: f64) -> Result<ProxResult> {
    ensure_positive("gamma", gamma)?;
    let eta = sample.label.value();
    let xi = sample.features.as_slice();
    let q = dot_slices(xi, xi);
    if q == 0.0 {
        return Ok(ProxResult::new(x.clone(), x, gamma, 1.0));
    }
    let u = eta * dot_slices(xi, x.as_slice());
    let s = ((1.0 - u) / q).clamp(0.0, gamma);
    let mut point = x.clone();
    let step = s * eta;
    for (p, &f) in point.as_mut_slice().iter_mut().zip(xi) {
        *p += step * f;
    }
    let phi = hinge(u + s * q);
    Ok(ProxResult::new(point, x, gamma, phi))
}

#[derive(Debug, Clone, PartialEq)]
pub struct HingeLoss {
    pub sample: Sample,
}

impl HingeLoss {
    pub fn new(sample: Sample) -> Self {
        HingeLoss { sample }
    }
}

impl ProxFn for HingeLoss {
    fn value(&self, x: &Vector) -> f64 {
        hinge(self.sample.margin(x))
    }

    fn prox(&self, x: &Vector, gamma: f64) -> Result<ProxResult> {
        prox_hinge_affine(x, &self.sample, gamma)
    }
}
