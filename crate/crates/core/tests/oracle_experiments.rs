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

//! Integration tests of the reference oracle and the experiment drivers.

use sdr_core::experiments::{benchmark_on, ExperimentConfig, GroupLayout};
use sdr_core::oracle::{empirical_objective, reference_solve, MIN_REFERENCE_BUDGET};
use sdr_core::Error;

fn small_config() -> ExperimentConfig {
    ExperimentConfig {
        dimension: 24,
        groups: GroupLayout::Chain {
            count: 4,
            size: 10,
            overlap: 4,
        },
        samples: 150,
        feature_scale: 0.5,
        weight: 0.04,
        n_iters: 20_000,
        n_seeds: 4,
        benchmark_gamma: 0.01,
        ..Default::default()
    }
}

#[test]
fn reference_is_reproducible_across_seeds() {
    let problem = small_config().generate().unwrap().problem;
    let a = reference_solve(&problem, MIN_REFERENCE_BUDGET, 0).unwrap();
    let b = reference_solve(&problem, MIN_REFERENCE_BUDGET, 1).unwrap();
    assert!((a.objective - b.objective).abs() < 1e-5, "{} vs {}", a.objective, b.objective);
    for r in [&a, &b] {
        assert!((r.objective - empirical_objective(&r.point, &problem)).abs() <= 1e-12);
        assert!(r.residual < 1e-6, "{}", r.residual);
    }
    // nothing nearby does better
    for k in 0..problem.dimension() {
        for h in [1e-3, -1e-3] {
            let mut y = a.point.clone();
            y[k] += h;
            assert!(empirical_objective(&y, &problem) >= a.objective - 1e-12);
        }
    }
}

#[test]
fn benchmark_report_is_consistent() {
    let config = small_config();
    let problem = config.generate().unwrap().problem;
    let reference = reference_solve(&problem, MIN_REFERENCE_BUDGET, 0).unwrap();
    let report = benchmark_on(&config, &problem, &reference).unwrap();
    assert_eq!(report.outcomes.len(), 4);
    assert!(report.outcomes.iter().all(|o| o.paired));
    assert_eq!(report.sdr_wins, report.outcomes.iter().filter(|o| o.sdr_faster()).count());
    assert!((report.threshold - 1.05 * reference.objective).abs() < 1e-15);
    for o in &report.outcomes {
        assert!(o.sdr_final_ergodic >= reference.objective - 1e-6);
        assert!(o.psdr_final_ergodic >= reference.objective - 1e-6);
    }
    let counted: usize = report.histogram.sdr_last.iter().sum();
    assert_eq!(counted, config.dimension);
    assert_eq!(report.sdr_series.first().unwrap().iteration, 0);
    assert_eq!(report.sdr_series.last().unwrap().iteration, config.n_iters);
}

#[test]
fn config_round_trips_through_json() {
    let config = small_config();
    let text = serde_json::to_string(&config).unwrap();
    let back: ExperimentConfig = serde_json::from_str(&text).unwrap();
    assert_eq!(back, config);
    let explicit = ExperimentConfig {
        dimension: 3,
        groups: GroupLayout::Explicit(vec![vec![0, 1], vec![1, 2]]),
        ..Default::default()
    };
    let back: ExperimentConfig = serde_json::from_str(&serde_json::to_string(&explicit).unwrap()).unwrap();
    assert_eq!(back, explicit);
}

#[test]
fn config_defaults_and_rejections() {
    let c: ExperimentConfig = serde_json::from_str(r#"{"dimension": 2, "groups": [[0], [0, 1]]}"#).unwrap();
    assert_eq!(c.samples, ExperimentConfig::default().samples);
    assert_eq!(c.gammas, vec![0.5, 0.05, 0.005]);
    c.validate().unwrap();
    assert!(serde_json::from_str::<ExperimentConfig>(r#"{"dimensions": 2}"#).is_err());

    let bad = ExperimentConfig {
        noise: 0.9,
        ..Default::default()
    };
    assert!(matches!(bad.validate(), Err(Error::InvalidParameter { field: "noise", .. })));
    let bad = ExperimentConfig {
        gammas: vec![0.1, -0.1],
        ..Default::default()
    };
    assert!(matches!(bad.validate(), Err(Error::InvalidParameter { field: "gammas", .. })));
}

#[test]
fn generation_is_seeded() {
    let a = small_config().generate().unwrap();
    let b = small_config().generate().unwrap();
    assert_eq!(a.problem.data, b.problem.data);
    let c = ExperimentConfig {
        data_seed: 1,
        ..small_config()
    }
    .generate()
    .unwrap();
    assert_ne!(a.problem.data, c.problem.data);
}
