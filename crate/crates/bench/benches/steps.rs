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

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use std::hint::black_box;

use sdr_bench::{default_problem, random_point};
use sdr_core::prox::{prox_hinge_affine, prox_overlap_group_sum, DYKSTRA_TOL};
use sdr_core::solvers::{dr_step, dr_step_stochastic, DrState};

const GAMMA: f64 = 0.05;

fn steps(c: &mut Criterion) {
    let problem = default_problem();
    let state = DrState::new(random_point(problem.dimension(), 2), GAMMA).unwrap();
    let sample = &problem.data.samples()[3];

    c.bench_function("sdr_step", |b| {
        let mut j = 0;
        b.iter_batched(
            || {
                j = (j + 1) % problem.groups.count();
                j
            },
            |j| dr_step_stochastic(black_box(&state), sample, j, &problem.groups, problem.weight).unwrap(),
            BatchSize::SmallInput,
        )
    });
    c.bench_function("psdr_step", |b| {
        b.iter(|| {
            dr_step(
                black_box(&state),
                |x| Ok(prox_hinge_affine(x, sample, GAMMA)?.point),
                |v| {
                    Ok(prox_overlap_group_sum(v, &problem.groups, problem.weight, GAMMA, DYKSTRA_TOL, 10_000)?
                        .point)
                },
            )
            .unwrap()
        })
    });
}

criterion_group!(benches, steps);
criterion_main!(benches);
