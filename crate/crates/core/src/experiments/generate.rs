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

use crate::data::{Dataset, GroupSpec, Label, Problem, Sample};
use crate::error::Result;
use crate::rng::{SeededRng, Stream};
use crate::vector::{dot_slices, Vector};

use super::ExperimentConfig;

#[derive(Debug, Clone)]
pub struct GeneratedData {
    pub problem: Problem,
    /// Group-sparse weights the labels were drawn from.
    pub planted: Vector,
    pub active: Vec<usize>,
    /// Number of labels that were flipped.
    pub flipped: usize,
}

/// Draws the synthetic classification problem of `config`.
///
/// A random subset of `active_groups` groups carries standard normal weights,
/// all other coordinates of the planted vector are zero. Features are centred
/// normal with standard deviation `feature_scale`
/// and `eta_i = sign(<w, xi_i>)`, flipped with probability `noise`.
pub fn generate_dataset(config: &ExperimentConfig, rng: &mut SeededRng) -> Result<GeneratedData> {
    config.validate()?;
    let groups: GroupSpec = config.group_spec()?;
    let n = config.dimension;
    let active = rng.subset(groups.count(), config.active_groups);
    let mut planted = vec![0.0; n];
    for &j in &active {
        for &i in groups.group(j) {
            if planted[i] == 0.0 {
                planted[i] = rng.standard_normal();
            }
        }
    }
    let scale = config.feature_scale;
    let mut flipped = 0;
    let samples = (0..config.samples)
        .map(|_| {
            let xi: Vec<f64> = (0..n).map(|_| scale * rng.standard_normal()).collect();
            let mut label = Label::from_sign(dot_slices(&xi, &planted));
            if rng.bernoulli(config.noise) {
                label = label.flipped();
                flipped += 1;
            }
            Ok(Sample::new(Vector::new(xi)?, label))
        })
        .collect::<Result<Vec<_>>>()?;
    let problem = Problem::new(Dataset::new(samples)?, groups, config.weight)?;
    Ok(GeneratedData {
        problem,
        planted: Vector::new(planted)?,
        active,
        flipped,
    })
}

impl ExperimentConfig {
    /// The dataset of this config, drawn from the generation stream of `data_seed`.
    pub fn generate(&self) -> Result<GeneratedData> {
        generate_dataset(self, &mut SeededRng::stream(self.data_seed, Stream::Generation))
    }
}
