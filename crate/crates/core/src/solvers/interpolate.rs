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

use crate::error::{ensure_positive, Error, Result};
use crate::vector::Vector;

/// Piecewise-affine path through the iterates on the time grid `t = n gamma`.
#[derive(Debug, Clone, PartialEq)]
pub struct InterpolatedPath {
    gamma: f64,
    iterates: Vec<Vector>,
}

impl InterpolatedPath {
    pub fn new(iterates: Vec<Vector>, gamma: f64) -> Result<Self> {
        ensure_positive("gamma", gamma)?;
        if iterates.is_empty() {
            return Err(Error::Empty { what: "iterate list" });
        }
        Ok(InterpolatedPath { gamma, iterates })
    }

    pub fn horizon(&self) -> f64 {
        (self.iterates.len() - 1) as f64 * self.gamma
    }

    pub fn at(&self, t: f64) -> Result<Vector> {
        interpolate(&self.iterates, self.gamma, t)
    }

    /// Path values at `t = 0, dt, 2 dt, ...` up to the horizon.
    pub fn sample(&self, dt: f64) -> Result<Vec<(f64, Vector)>> {
        ensure_positive("dt", dt)?;
        let steps = (self.horizon() / dt).floor() as usize;
        (0..=steps)
            .map(|k| {
                let t = k as f64 * dt;
                self.at(t).map(|v| (t, v))
            })
            .collect()
    }
}

/// `x_n + (t - n gamma) (x_{n+1} - x_n) / gamma` for `n gamma <= t < (n+1) gamma`.
pub fn interpolate(iterates: &[Vector], gamma: f64, t: f64) -> Result<Vector> {
    ensure_positive("gamma", gamma)?;
    let last = iterates.len().checked_sub(1).ok_or(Error::Empty { what: "iterate list" })?;
    let horizon = last as f64 * gamma;
    if !(t >= 0.0 && t <= horizon) {
        return Err(Error::BeyondHorizon { t, horizon });
    }
    let n = ((t / gamma).floor() as usize).min(last);
    if n == last {
        return Ok(iterates[last].clone());
    }
    let frac = (t - n as f64 * gamma) / gamma;
    if frac == 0.0 {
        return Ok(iterates[n].clone());
    }
    let (a, b) = (&iterates[n], &iterates[n + 1]);
    Ok(Vector::from_vec_unchecked(
        a.iter().zip(b.iter()).map(|(ai, bi)| ai + frac * (bi - ai)).collect(),
    ))
}
