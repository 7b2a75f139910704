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

//! Douglas-Rachford iterations.
//!
//! One step maps `(x_n, y_n, z_n)` to
//!
//! ```text
//! y_{n+1} = prox_{gamma f}(x_n)
//! z_{n+1} = prox_{gamma g}(2 y_{n+1} - x_n)
//! x_{n+1} = x_n + z_{n+1} - y_{n+1}
//! ```
//!
//! where `f`, `g` are either the full objective terms (deterministic DR) or one
//! random realization of each (stochastic DR).

mod ergodic;
mod interpolate;
mod run;
mod state;

pub use ergodic::ErgodicAverage;
pub use interpolate::{interpolate, InterpolatedPath};
pub use run::{
    parallelism, run, run_deterministic_dr, run_partially_stochastic_dr, run_seeds, run_stochastic_dr, Algorithm, Init,
    RunRecord, RunSettings, Trajectory,
};
pub use state::{dr_step, dr_step_deterministic, dr_step_stochastic, DrState};
