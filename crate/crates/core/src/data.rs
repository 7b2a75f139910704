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

//! Problem data: the overlapping groups and the empirical sample distribution.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::SeededRng;
use crate::vector::Vector;

/// Index sets `S_1, ..., S_g` of the overlapping group regularizer.
///
/// Indices are zero-based. Groups may overlap but are never empty and never
/// repeat an index.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupSpec {
    dimension: usize,
    groups: Vec<Vec<usize>>,
}

impl GroupSpec {
    pub fn new(dimension: usize, groups: Vec<Vec<usize>>) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::invalid("dimension", "must be at least 1"));
        }
        if groups.is_empty() {
            return Err(Error::Empty { what: "group list" });
        }
        for (j, group) in groups.iter().enumerate() {
            if group.is_empty() {
                return Err(Error::InvalidGroup {
                    group: j,
                    reason: "group is empty".into(),
                });
            }
            if let Some(&index) = group.iter().find(|&&i| i >= dimension) {
                return Err(Error::IndexOutOfRange { index, dimension });
            }
            let mut sorted = group.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidGroup {
                    group: j,
                    reason: "repeated index".into(),
                });
            }
        }
        Ok(GroupSpec { dimension, groups })
    }

    /// Chain layout: group `j` starts at `j * (size - overlap)` and holds `size`
    /// consecutive coordinates, wrapping past the end back to coordinate 0.
    /// Consecutive groups therefore share `overlap` coordinates.
    pub fn chain(dimension: usize, count: usize, size: usize, overlap: usize) -> Result<Self> {
        if count == 0 {
            return Err(Error::invalid("groups.count", "must be at least 1"));
        }
        if size == 0 || size > dimension {
            return Err(Error::invalid(
                "groups.size",
                format!("must be in 1..={dimension}, got {size}"),
            ));
        }
        if overlap >= size {
            return Err(Error::invalid(
                "groups.overlap",
                format!("must be smaller than the group size {size}, got {overlap}"),
            ));
        }
        let stride = size - overlap;
        if (count - 1) * stride + size < dimension {
            return Err(Error::invalid(
                "groups.count",
                format!("{count} groups of size {size} with overlap {overlap} do not cover {dimension} coordinates"),
            ));
        }
        let groups = (0..count)
            .map(|j| (0..size).map(|k| (j * stride + k) % dimension).collect())
            .collect();
        GroupSpec::new(dimension, groups)
    }

    /// Disjoint singletons `{0}, {1}, ..., {N-1}`.
    pub fn singletons(dimension: usize) -> Result<Self> {
        GroupSpec::new(dimension, (0..dimension).map(|i| vec![i]).collect())
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Number of groups `g`.
    pub fn count(&self) -> usize {
        self.groups.len()
    }

    pub fn group(&self, j: usize) -> &[usize] {
        &self.groups[j]
    }

    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    pub fn covers_all(&self) -> bool {
        let mut seen = vec![false; self.dimension];
        for g in &self.groups {
            for &i in g {
                seen[i] = true;
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// `sum_j ||x_{S_j}||`.
    pub fn norm_sum(&self, x: &Vector) -> f64 {
        self.groups.iter().map(|g| group_norm(x, g)).sum()
    }
}

pub(crate) fn group_norm(x: &Vector, group: &[usize]) -> f64 {
    let s = x.as_slice();
    group.iter().map(|&i| s[i] * s[i]).sum::<f64>().sqrt()
}

/// Class label `eta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Label {
    Negative,
    Positive,
}

impl Label {
    pub fn from_sign(value: f64) -> Label {
        if value < 0.0 {
            Label::Negative
        } else {
            Label::Positive
        }
    }

    pub fn value(self) -> f64 {
        match self {
            Label::Negative => -1.0,
            Label::Positive => 1.0,
        }
    }

    pub fn flipped(self) -> Label {
        match self {
            Label::Negative => Label::Positive,
            Label::Positive => Label::Negative,
        }
    }
}

impl TryFrom<f64> for Label {
    type Error = Error;

    fn try_from(v: f64) -> Result<Label> {
        if v == 1.0 {
            Ok(Label::Positive)
        } else if v == -1.0 {
            Ok(Label::Negative)
        } else {
            Err(Error::invalid("label", format!("must be -1 or +1, got {v}")))
        }
    }
}

/// One realization `(xi, eta)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Sample {
    pub features: Vector,
    pub label: Label,
}

impl Sample {
    pub fn new(features: Vector, label: Label) -> Self {
        Sample { features, label }
    }

    /// `eta * <x, xi>`.
    pub fn margin(&self, x: &Vector) -> f64 {
        self.label.value() * crate::vector::dot_slices(self.features.as_slice(), x.as_slice())
    }

    /// The direction `a = eta * xi` along which the loss varies.
    pub fn direction(&self) -> Vector {
        self.features.scaled(self.label.value())
    }
}

/// A finite sample set; uniform draws from it define the data distribution.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dataset {
    samples: Vec<Sample>,
}

impl Dataset {
    pub fn new(samples: Vec<Sample>) -> Result<Self> {
        let first = samples.first().ok_or(Error::Empty { what: "dataset" })?;
        let dimension = first.features.len();
        if let Some(bad) = samples.iter().find(|s| s.features.len() != dimension) {
            return Err(Error::DimensionMismatch {
                expected: dimension,
                found: bad.features.len(),
            });
        }
        Ok(Dataset { samples })
    }

    pub fn dimension(&self) -> usize {
        self.samples[0].features.len()
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn samples(&self) -> &[Sample] {
        &self.samples
    }

    pub fn get(&self, i: usize) -> &Sample {
        &self.samples[i]
    }

    /// The same samples with every label flipped.
    pub fn with_flipped_labels(&self) -> Dataset {
        Dataset {
            samples: self
                .samples
                .iter()
                .map(|s| Sample::new(s.features.clone(), s.label.flipped()))
                .collect(),
        }
    }

    pub fn max_feature_norm(&self) -> f64 {
        self.samples
            .iter()
            .map(|s| s.features.norm())
            .fold(0.0, f64::max)
    }
}

/// Index of a uniformly drawn sample.
pub fn draw_index(data: &Dataset, rng: &mut SeededRng) -> usize {
    rng.index(data.len())
}

/// A uniformly drawn sample.
pub fn draw_sample<'a>(data: &'a Dataset, rng: &mut SeededRng) -> &'a Sample {
    data.get(draw_index(data, rng))
}

/// Empirical objective inputs bundled together: hinge loss over `data` plus
/// `weight * sum_j ||x_{S_j}||`.
#[derive(Debug, Clone, PartialEq)]
pub struct Problem {
    pub data: Dataset,
    pub groups: GroupSpec,
    pub weight: f64,
}

impl Problem {
    pub fn new(data: Dataset, groups: GroupSpec, weight: f64) -> Result<Self> {
        crate::error::ensure_positive("weight", weight)?;
        if data.dimension() != groups.dimension() {
            return Err(Error::DimensionMismatch {
                expected: groups.dimension(),
                found: data.dimension(),
            });
        }
        Ok(Problem {
            data,
            groups,
            weight,
        })
    }

    pub fn dimension(&self) -> usize {
        self.groups.dimension()
    }
}
