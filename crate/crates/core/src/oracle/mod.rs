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

//! Ground truth for the stochastic runs: the empirical objective, a slow
//! independent solver for its minimizer, and distance-based convergence probes.

mod objective;
mod probe;
mod reference;

pub use objective::{empirical_objective, hinge_risk, objective_parts};
pub use probe::{theorem1_probe, ProbeRow, ProbeTable};
pub use reference::{distance_to_solution, reference_solve, ReferenceMethod, ReferenceSolution, MIN_REFERENCE_BUDGET};
