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

use crate::vector::Vector;

/// Streaming mean `(1/n) sum_{k=1}^n x_k` of the iterates.
#[derive(Debug, Clone, PartialEq)]
pub struct ErgodicAverage {
    mean: Vector,
    count: usize,
}

impl ErgodicAverage {
    pub fn new(dimension: usize) -> Self {
        ErgodicAverage {
            mean: Vector::zeros(dimension),
            count: 0,
        }
    }

    pub fn update(&mut self, x: &Vector) {
        debug_assert_eq!(x.len(), self.mean.len());
        self.count += 1;
        let w = 1.0 / self.count as f64;
        for (m, xi) in self.mean.as_mut_slice().iter_mut().zip(x.iter()) {
            *m += w * (xi - *m);
        }
    }

    /// Value-returning form of [`ErgodicAverage::update`].
    pub fn updated(mut self, x: &Vector) -> Self {
        self.update(x);
        self
    }

    pub fn mean(&self) -> &Vector {
        &self.mean
    }

    pub fn count(&self) -> usize {
        self.count
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_values() {
        let a = ErgodicAverage::new(1)
            .updated(&Vector::new(vec![1.0]).unwrap())
            .updated(&Vector::new(vec![3.0]).unwrap());
        assert_eq!(a.mean()[0], 2.0);
        assert_eq!(a.count(), 2);
    }

    #[test]
    fn constant_sequence() {
        let x = Vector::new(vec![0.1, -7.3, 1e6]).unwrap();
        let mut a = ErgodicAverage::new(3);
        for _ in 0..1000 {
            a.update(&x);
        }
        assert!(a.mean().distance(&x) <= 1e-12 * x.norm());
    }
}
