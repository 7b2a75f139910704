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

use crate::data::group_norm;
use crate::error::{ensure_positive, Error, Result};
use crate::vector::{norm, Vector};

use super::{ProxFn, ProxResult};

/// In-place block soft-thresholding of `block` with threshold `t`:
/// `block * max(0, 1 - t / ||block||)`.
pub fn block_soft_threshold(block: &mut [f64], t: f64) {
    let n = norm(block);
    if n <= t {
        block.iter_mut().for_each(|v| *v = 0.0);
    } else {
        let scale = 1.0 - t / n;
        block.iter_mut().for_each(|v| *v *= scale);
    }
}

/// Prox of `x -> weight * ||x_S||`. Coordinates outside `s` are untouched.
pub fn prox_group_norm(x: &Vector, s: &[usize], weight: f64, gamma: f64) -> Result<ProxResult> {
    ensure_positive("gamma", gamma)?;
    ensure_positive("weight", weight)?;
    validate_group(s, x.len())?;
    let mut point = x.clone();
    let mut block: Vec<f64> = s.iter().map(|&i| x[i]).collect();
    block_soft_threshold(&mut block, gamma * weight);
    for (&i, v) in s.iter().zip(&block) {
        point[i] = *v;
    }
    let phi = weight * norm(&block);
    Ok(ProxResult::new(point, x, gamma, phi))
}

fn validate_group(s: &[usize], dimension: usize) -> Result<()> {
    if s.is_empty() {
        return Err(Error::InvalidGroup {
            group: 0,
            reason: "group is empty".into(),
        });
    }
    match s.iter().find(|&&i| i >= dimension) {
        Some(&index) => Err(Error::IndexOutOfRange { index, dimension }),
        None => Ok(()),
    }
}

/// `x -> weight * ||x_S||`.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupNorm {
    pub indices: Vec<usize>,
    pub weight: f64,
}

impl GroupNorm {
    pub fn new(indices: Vec<usize>, weight: f64) -> Self {
        GroupNorm { indices, weight }
    }
}

impl ProxFn for GroupNorm {
    fn value(&self, x: &Vector) -> f64 {
        self.weight * group_norm(x, &self.indices)
    }

    fn prox(&self, x: &Vector, gamma: f64) -> Result<ProxResult> {
        prox_group_norm(x, &self.indices, self.weight, gamma)
    }
}
