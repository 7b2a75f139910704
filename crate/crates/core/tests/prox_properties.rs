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

//! Property tests of the proximity operators and the empirical objective.

use proptest::prelude::*;

use sdr_core::data::{Dataset, GroupSpec, Label, Problem, Sample};
use sdr_core::oracle::empirical_objective;
use sdr_core::prox::{GroupNorm, HingeLoss, LogisticLoss, OverlapGroupNorm, ProxFn};
use sdr_core::Vector;

const DIM: usize = 4;

fn point() -> impl Strategy<Value = Vector> {
    prop::collection::vec(-5.0..5.0f64, DIM).prop_map(|v| Vector::new(v).unwrap())
}

fn sample() -> impl Strategy<Value = Sample> {
    (prop::collection::vec(-2.0..2.0f64, DIM), any::<bool>())
        .prop_filter("nonzero features", |(f, _)| f.iter().map(|v| v * v).sum::<f64>() > 1e-3)
        .prop_map(|(f, pos)| {
            let label = if pos { Label::Positive } else { Label::Negative };
            Sample::new(Vector::new(f).unwrap(), label)
        })
}

fn overlapping() -> OverlapGroupNorm {
    let groups = GroupSpec::new(DIM, vec![vec![0, 1], vec![1, 2], vec![2, 3, 0]]).unwrap();
    let mut g = OverlapGroupNorm::new(groups, 0.7).with_tol(1e-14);
    g.max_iter = 1_000_000;
    g
}

fn operators(s: Sample) -> Vec<(&'static str, Box<dyn ProxFn>)> {
    vec![
        ("group", Box::new(GroupNorm::new(vec![0, 2, 3], 0.8))),
        ("hinge", Box::new(HingeLoss::new(s.clone()))),
        ("logistic", Box::new(LogisticLoss::new(s, 1e-14))),
        ("overlap", Box::new(overlapping())),
    ]
}

fn prox_objective(f: &dyn ProxFn, y: &Vector, x: &Vector, gamma: f64) -> f64 {
    0.5 * y.distance(x).powi(2) + gamma * f.value(y)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn prox_beats_perturbations(x in point(), d in point(), s in sample(), gamma in 0.01..3.0f64) {
        for (name, f) in operators(s) {
            let p = f.prox(&x, gamma).unwrap().point;
            let best = prox_objective(f.as_ref(), &p, &x, gamma);
            for scale in [1e-1, 1e-3, 1e-5] {
                let q = p.add(&d.scaled(scale));
                prop_assert!(best <= prox_objective(f.as_ref(), &q, &x, gamma) + 1e-11, "{}", name);
            }
        }
    }

    #[test]
    fn prox_is_firmly_nonexpansive(x in point(), y in point(), s in sample(), gamma in 0.01..3.0f64) {
        for (name, f) in operators(s) {
            let px = f.prox(&x, gamma).unwrap().point;
            let py = f.prox(&y, gamma).unwrap().point;
            let diff = px.sub(&py);
            prop_assert!(diff.norm() <= x.distance(&y) + 1e-10, "{}", name);
            prop_assert!(diff.norm_squared() <= diff.dot(&x.sub(&y)).unwrap() + 1e-9, "{}", name);
        }
    }

    #[test]
    fn envelope_is_below_phi_and_monotone_in_gamma(x in point(), s in sample(), g1 in 0.01..1.0f64, extra in 0.0..2.0f64) {
        for (name, f) in operators(s) {
            let small = f.moreau(&x, g1).unwrap().value;
            let large = f.moreau(&x, g1 + extra).unwrap().value;
            prop_assert!(small <= f.value(&x) + 1e-10, "{}", name);
            prop_assert!(large <= small + 1e-10, "{}", name);
        }
    }

    #[test]
    fn prox_tends_to_identity(x in point(), s in sample(), k in 1..8i32) {
        let gamma = 10f64.powi(-k);
        let lipschitz = [0.8, s.features.norm(), s.features.norm(), 0.7 * 3.0];
        for ((name, f), l) in operators(s).into_iter().zip(lipschitz) {
            let p = f.prox(&x, gamma).unwrap().point;
            prop_assert!(p.distance(&x) <= gamma * l * (1.0 + 1e-9) + 1e-12, "{}", name);
        }
    }

    #[test]
    fn objective_is_convex_along_segments(x in point(), y in point(), t in 0.0..1.0f64, samples in prop::collection::vec(sample(), 1..8)) {
        let groups = GroupSpec::new(DIM, vec![vec![0, 1], vec![1, 2, 3]]).unwrap();
        let problem = Problem::new(Dataset::new(samples).unwrap(), groups, 0.3).unwrap();
        let mid = x.scaled(t).add(&y.scaled(1.0 - t));
        let lhs = empirical_objective(&mid, &problem);
        let rhs = t * empirical_objective(&x, &problem) + (1.0 - t) * empirical_objective(&y, &problem);
        prop_assert!(lhs <= rhs + 1e-10);
    }
}
