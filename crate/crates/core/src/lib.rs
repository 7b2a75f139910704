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

//! Fully stochastic Douglas-Rachford splitting with a constant step size.
//!
//! The crate solves `min_x F(x) + G(x)` where both terms are expectations over
//! a random variable, using only the proximity operators of single random
//! realizations at each iteration. The bundled application is a linear SVM
//! (hinge loss) regularized by the overlapping group lasso.
//!
//! Modules:
//! - [`vector`], [`data`], [`rng`]: domain types and seeded randomness
//! - [`prox`]: proximity operators, Moreau envelopes and a brute-force oracle
//! - [`solvers`]: deterministic, fully stochastic and partially stochastic DR
//! - [`oracle`]: empirical objective, reference solutions, convergence probes
//! - [`experiments`]: synthetic data and the paired benchmark

pub mod data;
pub mod error;
pub mod experiments;
pub mod oracle;
pub mod prox;
pub mod rng;
pub mod solvers;
pub mod vector;

pub use data::{draw_sample, Dataset, GroupSpec, Label, Problem, Sample};
pub use error::{Error, Result};
pub use rng::{SeededRng, Stream};
pub use vector::{dot, restrict, scatter_add, Vector};
