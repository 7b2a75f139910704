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

//! Synthetic hinge-loss / overlapping group lasso experiments.

mod benchmark;
mod config;
mod generate;

pub use benchmark::{benchmark_on, histogram, run_benchmark, tracked_objective, BenchmarkReport, Histogram, SeedOutcome};
pub use config::{ExperimentConfig, GroupLayout};
pub use generate::{generate_dataset, GeneratedData};
