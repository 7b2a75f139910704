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

use crate::data::{GroupSpec, Sample};
use crate::error::{ensure_positive, Error, Result};
use crate::prox::{prox_group_norm, prox_hinge_affine, ProxFn};
use crate::vector::Vector;

/// Iterates `(x_n, y_n, z_n)` of a DR run with its constant step.
#[derive(Debug, Clone, PartialEq)]
pub struct DrState {
    pub x: Vector,
    pub y: Vector,
    pub z: Vector,
    pub iter: usize,
    gamma: f64,
}

impl DrState {
    /// Starts at `x_0`, with `y_0 = z_0 = x_0`.
    pub fn new(x0: Vector, gamma: f64) -> Result<Self> {
        ensure_positive("gamma", gamma)?;
        Ok(DrState {
            y: x0.clone(),
            z: x0.clone(),
            x: x0,
            iter: 0,
            gamma,
        })
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn dimension(&self) -> usize {
        self.x.len()
    }
}

/// One DR step with caller-supplied prox maps. `prox_f` receives `x_n`,
/// `prox_g` receives `2 y_{n+1} - x_n`; both must use `state.gamma()`.
pub fn dr_step<PF, PG>(state: &DrState, prox_f: PF, prox_g: PG) -> Result<DrState>
where
    PF: FnOnce(&Vector) -> Result<Vector>,
    PG: FnOnce(&Vector) -> Result<Vector>,
{
    let y = prox_f(&state.x)?;
    let reflected = Vector::from_vec_unchecked(
        y.iter().zip(state.x.iter()).map(|(yi, xi)| 2.0 * yi - xi).collect(),
    );
    let z = prox_g(&reflected)?;
    if z.len() != state.x.len() || y.len() != state.x.len() {
        return Err(Error::DimensionMismatch {
            expected: state.x.len(),
            found: if y.len() != state.x.len() { y.len() } else { z.len() },
        });
    }
    let x = Vector::from_vec_unchecked(
        state
            .x
            .iter()
            .zip(z.iter().zip(y.iter()))
            .map(|(xi, (zi, yi))| xi + zi - yi)
            .collect(),
    );
    Ok(DrState {
        x,
        y,
        z,
        iter: state.iter + 1,
        gamma: state.gamma,
    })
}

/// Deterministic DR step on `F + G`.
pub fn dr_step_deterministic<F, G>(state: &DrState, f: &F, g: &G) -> Result<DrState>
where
    F: ProxFn + ?Sized,
    G: ProxFn + ?Sized,
{
    let gamma = state.gamma;
    dr_step(
        state,
        |x| Ok(f.prox(x, gamma)?.point),
        |v| Ok(g.prox(v, gamma)?.point),
    )
}

/// Stochastic DR step for the hinge / overlapping group lasso model.
///
/// The loss realization is the hinge loss of `sample`. The regularizer
/// realization is `groups.count() * weight * ||x_{S_j}||`, whose expectation
/// over a uniform `j` is `weight * sum_j ||x_{S_j}||`.
pub fn dr_step_stochastic(
    state: &DrState,
    sample: &Sample,
    group_index: usize,
    groups: &GroupSpec,
    weight: f64,
) -> Result<DrState> {
    if group_index >= groups.count() {
        return Err(Error::IndexOutOfRange {
            index: group_index,
            dimension: groups.count(),
        });
    }
    let gamma = state.gamma;
    let group_weight = groups.count() as f64 * weight;
    dr_step(
        state,
        |x| Ok(prox_hinge_affine(x, sample, gamma)?.point),
        |v| Ok(prox_group_norm(v, groups.group(group_index), group_weight, gamma)?.point),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::Label;
    use crate::prox::{GroupNorm, HalfSquaredNorm, HingeLoss, Zero};

    fn v(e: &[f64]) -> Vector {
        Vector::new(e.to_vec()).unwrap()
    }

    #[test]
    fn trivial_problem_is_fixed() {
        let s = DrState::new(v(&[1.0, -2.0]), 0.5).unwrap();
        let next = dr_step_deterministic(&s, &Zero, &Zero).unwrap();
        assert_eq!(next.x, s.x);
        assert_eq!(next.iter, 1);
        assert_eq!(next.gamma(), 0.5);
    }

    #[test]
    fn half_squared_norms_by_hand() {
        // prox(v) = v / 2: y = 2, z = (2 * 2 - 4) / 2 = 0, x = 4 + 0 - 2 = 2
        let s = DrState::new(v(&[4.0]), 1.0).unwrap();
        let next = dr_step_deterministic(&s, &HalfSquaredNorm, &HalfSquaredNorm).unwrap();
        assert_eq!(next.y, v(&[2.0]));
        assert_eq!(next.z, v(&[0.0]));
        assert_eq!(next.x, v(&[2.0]));
    }

    #[test]
    fn common_fixed_point_is_kept() {
        // 0 minimizes both terms, so every prox maps it to itself
        let s = DrState::new(Vector::zeros(3), 0.3).unwrap();
        let g = GroupNorm::new(vec![0, 2], 1.0);
        let next = dr_step_deterministic(&s, &g, &HalfSquaredNorm).unwrap();
        assert_eq!(next.x, s.x);
    }

    #[test]
    fn first_stochastic_step_from_origin() {
        let xi = v(&[0.6, 0.8]);
        let sample = Sample::new(xi.clone(), Label::Negative);
        let groups = GroupSpec::new(2, vec![vec![0, 1]]).unwrap();
        let s = DrState::new(Vector::zeros(2), 1.0).unwrap();
        let next = dr_step_stochastic(&s, &sample, 0, &groups, 0.1).unwrap();
        assert!(next.y.distance(&xi.scaled(-1.0)) < 1e-15);
    }

    #[test]
    fn stochastic_step_update_identity() {
        let sample = Sample::new(v(&[1.0, -2.0, 0.5]), Label::Positive);
        let groups = GroupSpec::new(3, vec![vec![0, 1], vec![1, 2]]).unwrap();
        let mut s = DrState::new(v(&[0.3, 0.1, -0.4]), 0.2).unwrap();
        for j in [0, 1, 1, 0, 1] {
            let next = dr_step_stochastic(&s, &sample, j, &groups, 0.5).unwrap();
            for i in 0..3 {
                assert_eq!(next.x[i], s.x[i] + next.z[i] - next.y[i]);
            }
            s = next;
        }
        assert!(dr_step_stochastic(&s, &sample, 2, &groups, 0.5).is_err());
    }

    #[test]
    fn singleton_stochastic_equals_deterministic() {
        let sample = Sample::new(v(&[1.0, 2.0]), Label::Positive);
        let groups = GroupSpec::new(2, vec![vec![0, 1]]).unwrap();
        let f = HingeLoss::new(sample.clone());
        let g = GroupNorm::new(vec![0, 1], 0.3);
        let mut a = DrState::new(v(&[-1.0, 0.5]), 0.7).unwrap();
        let mut b = a.clone();
        for _ in 0..50 {
            a = dr_step_deterministic(&a, &f, &g).unwrap();
            b = dr_step_stochastic(&b, &sample, 0, &groups, 0.3).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn rejects_bad_gamma() {
        assert!(DrState::new(Vector::zeros(1), 0.0).is_err());
        assert!(DrState::new(Vector::zeros(1), f64::NAN).is_err());
    }
}
