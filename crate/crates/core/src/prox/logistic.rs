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

use crate::data::Sample;
use crate::error::{ensure_positive, Error, Result};
use crate::vector::{dot_slices, Vector};

use super::{ProxFn, ProxResult};

const MAX_ITER: usize = 200;

/// `log(1 + exp(-z))`, evaluated without overflow.
pub fn logistic(z: f64) -> f64 {
    if z > 0.0 {
        (-z).exp().ln_1p()
    } else {
        -z + z.exp().ln_1p()
    }
}

fn sigmoid(t: f64) -> f64 {
    if t >= 0.0 {
        1.0 / (1.0 + (-t).exp())
    } else {
        let e = t.exp();
        e / (1.0 + e)
    }
}

/// Prox of `x -> log(1 + exp(-eta <x, xi>))`.
///
/// The output is `x + s a` with `a = eta * xi`, where the scalar `s` is the root
/// of `r(s) = s - gamma * sigmoid(-(<a, x> + s ||a||^2))`. `r` is increasing and
/// changes sign on `[0, gamma]`; Newton steps are kept inside a shrinking
/// bracket and replaced by bisection whenever they leave it.
pub fn prox_logistic_affine(x: &Vector, sample: &Sample, gamma: f64, tol: f64) -> Result<ProxResult> {
    ensure_positive("gamma", gamma)?;
    ensure_positive("tol", tol)?;
    let eta = sample.label.value();
    let xi = sample.features.as_slice();
    let q = dot_slices(xi, xi);
    let u = eta * dot_slices(xi, x.as_slice());
    if q == 0.0 {
        return Ok(ProxResult::new(x.clone(), x, gamma, logistic(u)));
    }

    let residual = |s: f64| s - gamma * sigmoid(-(u + s * q));
    let (mut lo, mut hi) = (-gamma, gamma);
    let mut s = gamma * sigmoid(-u);
    let mut r = residual(s);
    let mut iterations = 0;
    while r.abs() >= tol {
        if iterations == MAX_ITER {
            return Err(Error::NonConvergence {
                method: "logistic prox",
                iterations,
                residual: r.abs(),
            });
        }
        iterations += 1;
        if r > 0.0 {
            hi = s;
        } else {
            lo = s;
        }
        let sig = sigmoid(-(u + s * q));
        let slope = 1.0 + gamma * q * sig * (1.0 - sig);
        let newton = s - r / slope;
        s = if newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        r = residual(s);
    }

    let mut point = x.clone();
    let step = s * eta;
    for (p, &f) in point.as_mut_slice().iter_mut().zip(xi) {
        *p += step * f;
    }
    let phi = logistic(u + s * q);
    Ok(ProxResult::new(point, x, gamma, phi))
}

#[derive(Debug, Clone, PartialEq)]
pub struct LogisticLoss {
    pub sample: Sample,
    pub tol: f64,
}

impl LogisticLoss {
    pub fn new(sample: Sample, tol: f64) -> Self {
        LogisticLoss { sample, tol }
    }
}

impl ProxFn for LogisticLoss {
    fn value(&self, x: &Vector) -> f64 {
        logistic(self.sample.margin(x))
    }

    fn prox(&self, x: &Vector, gamma: f64) -> Result<ProxResult> {
        prox_logistic_affine(x, &self.sample, gamma, self.tol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::Label;
    use crate::prox::numerical_prox_oracle;

    fn v(e: &[f64]) -> Vector {
        Vector::new(e.to_vec()).unwrap()
    }

    #[test]
    fn stable_loss() {
        assert!((logistic(0.0) - 2f64.ln()).abs() < 1e-15);
        assert!(logistic(800.0) >= 0.0 && logistic(800.0) < 1e-300);
        assert!((logistic(-800.0) - 800.0).abs() < 1e-12);
    }

    #[test]
    fn zero_features_is_identity() {
        let s = Sample::new(Vector::zeros(2), Label::Positive);
        let x = v(&[0.3, -0.7]);
        assert_eq!(prox_logistic_affine(&x, &s, 1.0, 1e-12).unwrap().point, x);
    }

    #[test]
    fn vanishing_step_is_identity() {
        let s = Sample::new(v(&[1.5, -2.0]), Label::Negative);
        let x = v(&[0.3, -0.7]);
        let p = prox_logistic_affine(&x, &s, 1e-8, 1e-14).unwrap();
        assert!(p.point.distance(&x) < 1e-6);
    }

    #[test]
    fn matches_oracle_at_origin() {
        let loss = LogisticLoss::new(Sample::new(v(&[1.0, 0.0]), Label::Positive), 1e-14);
        let x = Vector::zeros(2);
        let p = loss.prox(&x, 1.0).unwrap();
        let oracle = numerical_prox_oracle(|y| loss.value(y), &x, 1.0, 1e-11).unwrap();
        assert!(p.point.distance(&oracle) < 1e-8, "{:?} vs {oracle:?}", p.point);
        // s solves s = sigmoid(-s)
        let s = p.point[0];
        assert!((s - 1.0 / (1.0 + s.exp())).abs() < 1e-13);
    }

    #[test]
    fn large_margins_converge() {
        let s = Sample::new(v(&[30.0, -40.0]), Label::Positive);
        for x in [v(&[-100.0, 100.0]), v(&[100.0, -100.0])] {
            let p = prox_logistic_affine(&x, &s, 10.0, 1e-12).unwrap();
            assert!(p.point.is_finite());
        }
    }

    #[test]
    fn unreachable_tolerance_is_reported() {
        let s = Sample::new(v(&[1.0, 1.0]), Label::Positive);
        let err = prox_logistic_affine(&v(&[0.1, 0.2]), &s, 1.0, 1e-300).unwrap_err();
        assert!(matches!(err, Error::NonConvergence { iterations: MAX_ITER, .. }), "{err:?}");
    }
}
