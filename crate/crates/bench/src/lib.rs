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

//! Shared fixtures for the benchmarks.

use sdr_core::experiments::ExperimentConfig;
use sdr_core::{Problem, SeededRng, Stream, Vector};

/// The default experiment problem, generated once per benchmark binary.
pub fn default_problem() -> Problem {
    ExperimentConfig::default()
        .generate()
        .expect("default config is valid")
        .problem
}

/// A standard normal point of the given dimension.
pub fn random_point(dimension: usize, seed: u64) -> Vector {
    let mut rng = SeededRng::stream(seed, Stream::Init);
    Vector::new((0..dimension).map(|_| rng.standard_normal()).collect()).expect("finite")
}
