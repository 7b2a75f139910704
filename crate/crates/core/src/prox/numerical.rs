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

//! Brute-force prox evaluation, used as an independent reference for the
//! closed-form and iterative operators.

use crate::error::{ensure_positive, Error, Result};
use crate::vector::Vector;

pub const ORACLE_MAX_DIMENSION: usize = 4;

const GRID_POINTS: usize = 21;
const INV_PHI: f64 = 0.618_033_988_749_894_9;
const MAX_GOLDEN_STEPS: usize = 200;

/// Minimizes `1/2 ||y - x||^2 + gamma phi(y)` for a black-box convex `phi`.
///
/// A coarse grid on a box centred at `x` is grown until its best point is
/// interior, then each coordinate is refined by golden-section search, with the
/// search over coordinate `k` minimizing over coordinates `k+1..` at every trial
/// point. Partial minimization preserves convexity, so the nesting does not stall
/// on kinks that are not aligned with the axes. Accuracy is about `resolution`
/// per coordinate.
pub fn numerical_prox_oracle<F>(phi: F, x: &Vector, gamma: f64, resolution: f64) -> Result<Vector>
where
    F: Fn(&Vector) -> f64,
{
    let d = x.len();
    if d > ORACLE_MAX_DIMENSION {
        return Err(Error::OracleDimension {
            dimension: d,
            max: ORACLE_MAX_DIMENSION,
        });
    }
    ensure_positive("gamma", gamma)?;
    ensure_positive("resolution", resolution)?;

    let objective = |y: &[f64]| {
        let dist: f64 = y.iter().zip(x.iter()).map(|(a, b)| (a - b) * (a - b)).sum();
        0.5 * dist + gamma * phi(&Vector::from_vec_unchecked(y.to_vec()))
    };

    let mut radius = 1.0;
    while grid_minimum_on_boundary(&objective, x.as_slice(), radius) && radius < 1e8 {
        radius *= 4.0;
    }

    let lower: Vec<f64> = x.iter().map(|c| c - radius).collect();
    let upper: Vec<f64> = x.iter().map(|c| c + radius).collect();
    Ok(Vector::from_vec_unchecked(minimize_in_box(&objective, &lower, &upper, resolution)))
}

/// Nested golden-section minimization of a convex function over a box.
pub(crate) fn minimize_in_box(
    objective: &impl Fn(&[f64]) -> f64,
    lower: &[f64],
    upper: &[f64],
    resolution: f64,
) -> Vec<f64> {
    let mut y: Vec<f64> = lower.iter().zip(upper).map(|(a, b)| 0.5 * (a + b)).collect();
    nested_golden(objective, &mut y, 0, lower, upper, resolution);
    y
}

/// Whether the best grid point on `[x - r, x + r]^d` touches the box boundary.
fn grid_minimum_on_boundary(objective: &impl Fn(&[f64]) -> f64, x: &[f64], radius: f64) -> bool {
    let d = x.len();
    let h = 2.0 * radius / (GRID_POINTS - 1) as f64;
    let total = GRID_POINTS.pow(d as u32);
    let mut y = vec![0.0; d];
    let mut best = (f64::INFINITY, vec![0usize; d]);
    let mut idx = vec![0usize; d];
    for flat in 0..total {
        let mut rem = flat;
        for k in 0..d {
            idx[k] = rem % GRID_POINTS;
            rem /= GRID_POINTS;
            y[k] = x[k] - radius + idx[k] as f64 * h;
        }
        let v = objective(&y);
        if v < best.0 {
            best = (v, idx.clone());
        }
    }
    best.1.iter().any(|&i| i == 0 || i == GRID_POINTS - 1)
}

/// Minimizes over `y[level..]`, leaving the minimizer in `y`. Returns the minimum.
fn nested_golden(
    objective: &impl Fn(&[f64]) -> f64,
    y: &mut [f64],
    level: usize,
    lower: &[f64],
    upper: &[f64],
    resolution: f64,
) -> f64 {
    if level == y.len() {
        return objective(y);
    }
    let eval = |t: f64, y: &mut [f64]| {
        y[level] = t;
        nested_golden(objective, y, level + 1, lower, upper, resolution)
    };
    let (mut a, mut b) = (lower[level], upper[level]);
    let mut c = b - INV_PHI * (b - a);
    let mut e = a + INV_PHI * (b - a);
    let mut fc = eval(c, y);
    let mut fe = eval(e, y);
    // inner levels feed values to the outer searches, and at a kink a position
    // error costs a proportional value error, so they run to full precision
    let width = if level == 0 {
        resolution
    } else {
        resolution.min(4.0 * f64::EPSILON * (1.0 + a.abs().max(b.abs())))
    };
    let mut steps = 0;
    while b - a > width && steps < MAX_GOLDEN_STEPS {
        steps += 1;
        if fc <= fe {
            b = e;
            e = c;
            fe = fc;
            c = b - INV_PHI * (b - a);
            fc = eval(c, y);
        } else {
            a = c;
            c = e;
            fc = fe;
            e = a + INV_PHI * (b - a);
            fe = eval(e, y);
        }
    }
    let best = 0.5 * (a + b);
    let f_best = eval(best, y);
    // golden section stalls near sqrt(eps) at smooth minima; one Newton step
    // from central differences recovers the digits there and is rejected at kinks
    let chosen = match newton_candidate(&eval, y, best, lower[level], upper[level]) {
        Some(t) if eval(t, y) <= f_best + 8.0 * f64::EPSILON * f_best.abs().max(1.0) => t,
        _ => best,
    };
    // leave the inner coordinates consistent with the chosen value
    eval(chosen, y)
}

fn newton_candidate(eval: &impl Fn(f64, &mut [f64]) -> f64, y: &mut [f64], t: f64, lo: f64, hi: f64) -> Option<f64> {
    const H1: f64 = 1e-5;
    const H2: f64 = 1e-4;
    let slope = (eval(t + H1, y) - eval(t - H1, y)) / (2.0 * H1);
    let f0 = eval(t, y);
    let curvature = (eval(t + H2, y) - 2.0 * f0 + eval(t - H2, y)) / (H2 * H2);
    if !(curvature > 0.0) || !slope.is_finite() {
        return None;
    }
    let step = slope / curvature;
    (step.abs() <= H1).then(|| (t - step).clamp(lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prox::{prox_group_norm, GroupNorm, ProxFn};
    use crate::rng::SeededRng;

    #[test]
    fn zero_function_gives_identity() {
        let x = Vector::new(vec![0.7, -2.0, 5.0]).unwrap();
        let p = numerical_prox_oracle(|_| 0.0, &x, 1.0, 1e-10).unwrap();
        assert!(p.distance(&x) < 1e-8);
    }

    #[test]
    fn half_squared_norm() {
        let x = Vector::new(vec![2.0]).unwrap();
        let p = numerical_prox_oracle(|y| 0.5 * y.norm_squared(), &x, 1.0, 1e-10).unwrap();
        assert!((p[0] - 1.0).abs() < 1e-8);
    }

    #[test]
    fn far_minimizer_grows_box() {
        // prox of a steep linear-plus-norm function lies far from x
        let x = Vector::new(vec![0.0]).unwrap();
        let p = numerical_prox_oracle(|y| -10.0 * y[0] + 0.5 * y[0] * y[0], &x, 1.0, 1e-10).unwrap();
        assert!((p[0] - 5.0).abs() < 1e-7, "{p:?}");
    }

    #[test]
    fn rejects_large_dimension() {
        let x = Vector::zeros(5);
        assert_eq!(
            numerical_prox_oracle(|_| 0.0, &x, 1.0, 1e-6),
            Err(Error::OracleDimension { dimension: 5, max: 4 })
        );
    }

    #[test]
    fn calibrates_against_block_soft_threshold() {
        let mut rng = SeededRng::new(11);
        for _ in 0..100 {
            let x = Vector::new(vec![3.0 * rng.standard_normal(), 3.0 * rng.standard_normal()]).unwrap();
            let gamma = 0.1 + 2.0 * rng.uniform();
            let weight = 0.2 + 2.0 * rng.uniform();
            let f = GroupNorm::new(vec![0, 1], weight);
            let oracle = numerical_prox_oracle(|y| f.value(y), &x, gamma, 1e-10).unwrap();
            let exact = prox_group_norm(&x, &[0, 1], weight, gamma).unwrap().point;
            assert!(oracle.distance(&exact) < 1e-6, "{oracle:?} vs {exact:?}");
        }
    }
}
