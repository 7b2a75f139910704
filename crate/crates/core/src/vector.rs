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

//! Dense vectors over the Euclidean space the iterates live in.

use std::ops::{Index, IndexMut};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A dense point of `R^N`.
///
/// Constructors reject non-finite entries. Arithmetic helpers do not re-check,
/// the solvers test finiteness of their state once per iteration instead.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct Vector(Vec<f64>);

impl Vector {
    pub fn new(entries: Vec<f64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Empty { what: "vector" });
        }
        if let Some(index) = entries.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        Ok(Vector(entries))
    }

    pub fn zeros(dimension: usize) -> Self {
        Vector(vec![0.0; dimension])
    }

    /// Wraps entries already known to be finite.
    pub(crate) fn from_vec_unchecked(entries: Vec<f64>) -> Self {
        Vector(entries)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub(crate) fn as_mut_slice(&mut self) -> &mut [f64] {
        &mut self.0
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, f64> {
        self.0.iter()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|v| v.is_finite())
    }

    /// Index of the first non-finite coordinate, if any.
    pub fn first_non_finite(&self) -> Option<usize> {
        self.0.iter().position(|v| !v.is_finite())
    }

    pub fn norm(&self) -> f64 {
        norm(&self.0)
    }

    pub fn norm_squared(&self) -> f64 {
        self.0.iter().map(|v| v * v).sum()
    }

    pub fn dot(&self, other: &Vector) -> Result<f64> {
        dot(self, other)
    }

    pub fn distance(&self, other: &Vector) -> f64 {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    }

    /// `self + alpha * other`.
    pub fn axpy(&self, alpha: f64, other: &Vector) -> Vector {
        debug_assert_eq!(self.len(), other.len());
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + alpha * b).collect())
    }

    pub fn scaled(&self, alpha: f64) -> Vector {
        Vector(self.0.iter().map(|a| alpha * a).collect())
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        debug_assert_eq!(self.len(), other.len());
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn add(&self, other: &Vector) -> Vector {
        debug_assert_eq!(self.len(), other.len());
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}

impl Index<usize> for Vector {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl IndexMut<usize> for Vector {
    fn index_mut(&mut self, i: usize) -> &mut f64 {
        &mut self.0[i]
    }
}

impl TryFrom<Vec<f64>> for Vector {
    type Error = Error;

    fn try_from(entries: Vec<f64>) -> Result<Self> {
        Vector::new(entries)
    }
}

impl From<Vector> for Vec<f64> {
    fn from(v: Vector) -> Self {
        v.0
    }
}

pub(crate) fn norm(values: &[f64]) -> f64 {
    values.iter().map(|v| v * v).sum::<f64>().sqrt()
}

pub(crate) fn dot_slices(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Inner product `sum_i a_i b_i`.
pub fn dot(a: &Vector, b: &Vector) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            found: b.len(),
        });
    }
    Ok(dot_slices(&a.0, &b.0))
}

fn check_indices(dimension: usize, indices: &[usize]) -> Result<()> {
    match indices.iter().find(|&&i| i >= dimension) {
        Some(&index) => Err(Error::IndexOutOfRange { index, dimension }),
        None => Ok(()),
    }
}

/// Sub-vector `x_S`, in the order the indices are listed.
pub fn restrict(x: &Vector, indices: &[usize]) -> Result<Vector> {
    check_indices(x.len(), indices)?;
    if indices.is_empty() {
        return Err(Error::Empty { what: "index set" });
    }
    Ok(Vector(indices.iter().map(|&i| x.0[i]).collect()))
}

/// Adjoint of [`restrict`]: adds `v` onto the coordinates of `x` listed in `indices`.
pub fn scatter_add(x: &Vector, indices: &[usize], v: &Vector) -> Result<Vector> {
    if indices.len() != v.len() {
        return Err(Error::DimensionMismatch {
            expected: indices.len(),
            found: v.len(),
        });
    }
    check_indices(x.len(), indices)?;
    let mut out = x.clone();
    for (&i, &vi) in indices.iter().zip(&v.0) {
        out.0[i] += vi;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(e: &[f64]) -> Vector {
        Vector::new(e.to_vec()).unwrap()
    }

    #[test]
    fn dot_examples() {
        assert_eq!(dot(&v(&[1.0, 2.0]), &v(&[3.0, 4.0])).unwrap(), 11.0);
        assert_eq!(dot(&v(&[1.5, -2.0]), &Vector::zeros(2)).unwrap(), 0.0);
        assert_eq!(dot(&v(&[1.0, 0.0]), &v(&[0.0, 1.0])).unwrap(), 0.0);
    }

    #[test]
    fn dot_rejects_mismatch() {
        assert_eq!(
            dot(&v(&[1.0]), &v(&[1.0, 2.0])),
            Err(Error::DimensionMismatch { expected: 1, found: 2 })
        );
    }

    #[test]
    fn restrict_examples() {
        assert_eq!(restrict(&v(&[5.0, 6.0, 7.0]), &[0, 2]).unwrap(), v(&[5.0, 7.0]));
        let x = v(&[1.0, -3.0, 2.5]);
        assert_eq!(restrict(&x, &[0, 1, 2]).unwrap(), x);
        assert_eq!(restrict(&v(&[2.0, -1.0]), &[1]).unwrap(), v(&[-1.0]));
        assert_eq!(
            restrict(&x, &[3]),
            Err(Error::IndexOutOfRange { index: 3, dimension: 3 })
        );
    }

    #[test]
    fn scatter_add_examples() {
        assert_eq!(
            scatter_add(&Vector::zeros(3), &[0, 2], &v(&[2.0, 4.0])).unwrap(),
            v(&[2.0, 0.0, 4.0])
        );
        let x = v(&[1.0, 2.0, 3.0]);
        assert_eq!(scatter_add(&x, &[1, 2], &Vector::zeros(2)).unwrap(), x);
        assert_eq!(scatter_add(&v(&[1.0, 1.0]), &[1], &v(&[-1.0])).unwrap(), v(&[1.0, 0.0]));
        assert!(matches!(
            scatter_add(&x, &[0], &v(&[1.0, 2.0])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn rejects_non_finite() {
        assert_eq!(Vector::new(vec![1.0, f64::NAN]), Err(Error::NonFinite { index: 1 }));
        assert!(Vector::new(vec![f64::INFINITY]).is_err());
        assert!(serde_json::from_str::<Vector>("[]").is_err());
    }

    proptest! {
        #[test]
        fn restrict_scatter_adjoint(
            x in prop::collection::vec(-10.0f64..10.0, 1..12),
            seed in 0u64..1000,
        ) {
            let n = x.len();
            let x = Vector::new(x).unwrap();
            // derive a subset and a matching v from the seed
            let indices: Vec<usize> = (0..n).filter(|i| (seed >> (i % 10)) & 1 == 1 || *i == seed as usize % n).collect();
            let vals: Vec<f64> = indices.iter().map(|&i| ((i as f64 + 1.0) * (seed as f64 + 0.5)).sin()).collect();
            let vv = Vector::new(vals).unwrap();
            let lhs = dot(&restrict(&x, &indices).unwrap(), &vv).unwrap();
            let rhs = dot(&x, &scatter_add(&Vector::zeros(n), &indices, &vv).unwrap()).unwrap();
            prop_assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + lhs.abs()));
        }
    }
}
