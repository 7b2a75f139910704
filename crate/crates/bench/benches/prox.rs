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

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use sdr_bench::{default_problem, random_point};
use sdr_core::prox::{prox_group_norm, prox_hinge_affine, prox_logistic_affine, prox_overlap_group_sum, DYKSTRA_TOL};

fn prox_ops(c: &mut Criterion) {
    let problem = default_problem();
    let x = random_point(problem.dimension(), 1);
    let sample = &problem.data.samples()[0];
    let group = problem.groups.group(0);

    c.bench_function("prox_group_norm", |b| {
        b.iter(|| prox_group_norm(black_box(&x), group, 0.5, 0.05).unwrap())
    });
    c.bench_function("prox_hinge_affine", |b| {
        b.iter(|| prox_hinge_affine(black_box(&x), sample, 0.05).unwrap())
    });
    c.bench_function("prox_logistic_affine", |b| {
        b.iter(|| prox_logistic_affine(black_box(&x), sample, 0.05, 1e-12).unwrap())
    });
    let mut group = c.benchmark_group("prox_overlap_group_sum");
    for gamma in [0.5, 0.05, 0.005] {
        group.bench_function(format!("gamma={gamma}"), |b| {
            b.iter(|| {
                prox_overlap_group_sum(black_box(&x), &problem.groups, problem.weight, gamma, DYKSTRA_TOL, 10_000)
                    .unwrap()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, prox_ops);
criterion_main!(benches);
