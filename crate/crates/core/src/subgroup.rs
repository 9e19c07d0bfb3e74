//! One-parameter subgroups of the diagonal torus and the fixed list of
//! twelve numerical types whose permutations decide torus semi-stability.

use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::monomial::{Monomial2, NUM_VARS};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SubgroupError {
    #[error("weights must sum to zero, got {0}")]
    NonzeroSum(i64),
    #[error("weights must not all be zero")]
    AllZero,
    #[error("subgroup is not normalized (weights must be non-increasing)")]
    NotNormalized,
}

/// A diagonal one-parameter subgroup, acting on the variables `a..e` with
/// integer weights summing to zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OneParamSubgroup {
    weights: [i64; NUM_VARS],
}

impl OneParamSubgroup {
    pub fn new(weights: [i64; NUM_VARS]) -> Result<Self, SubgroupError> {
        let sum: i64 = weights.iter().sum();
        if sum != 0 {
            return Err(SubgroupError::NonzeroSum(sum));
        }
        if weights.iter().all(|&w| w == 0) {
            return Err(SubgroupError::AllZero);
        }
        Ok(OneParamSubgroup { weights })
    }

    pub fn weights(&self) -> [i64; NUM_VARS] {
        self.weights
    }

    pub fn is_normalized(&self) -> bool {
        self.weights.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn negated(&self) -> Self {
        OneParamSubgroup {
            weights: std::array::from_fn(|i| -self.weights[i]),
        }
    }

    pub fn scaled(&self, k: i64) -> Result<Self, SubgroupError> {
        Self::new(std::array::from_fn(|i| self.weights[i] * k))
    }

    /// Weight of a quadratic monomial: dot product with the exponent vector.
    pub fn monomial_weight(&self, m: Monomial2) -> i64 {
        let (i, j) = m.vars();
        self.weights[i] + self.weights[j]
    }

    /// The set of achievable quadratic-monomial weights, sorted decreasing.
    pub fn weight_set(&self) -> Vec<i64> {
        let mut ws: Vec<i64> = Monomial2::ALL.iter().map(|&m| self.monomial_weight(m)).collect();
        ws.sort_unstable_by(|a, b| b.cmp(a));
        ws.dedup();
        ws
    }

    /// Squared Euclidean norm, used to compare Hilbert-Mumford values across
    /// subgroups of different magnitudes.
    pub fn norm_squared(&self) -> i64 {
        self.weights.iter().map(|w| w * w).sum()
    }
}

impl std::fmt::Debug for OneParamSubgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({},{},{},{},{})",
            self.weights[0], self.weights[1], self.weights[2], self.weights[3], self.weights[4]
        )
    }
}

/// The twelve numerical types. A net semi-stable against every subgroup of
/// these types inside a fixed torus is semi-stable for that torus.
pub const TWELVE_TYPES: [[i64; NUM_VARS]; 12] = [
    [1, 1, 1, 1, -4],
    [2, 2, 2, -3, -3],
    [3, 3, -2, -2, -2],
    [4, -1, -1, -1, -1],
    [3, 3, 3, -2, -7],
    [4, 4, -1, -1, -6],
    [9, 4, -1, -6, -6],
    [7, 2, 2, -3, -8],
    [12, 7, 2, -8, -13],
    [9, 4, -1, -1, -11],
    [14, 4, -1, -6, -11],
    [13, 8, 3, -7, -17],
];

/// Numerical type of the twelve list, 1-based as usually quoted.
pub fn twelve_type(k: usize) -> OneParamSubgroup {
    assert!((1..=12).contains(&k));
    OneParamSubgroup::new(TWELVE_TYPES[k - 1]).expect("table entries are valid")
}

/// All distinct weight permutations of each of the twelve types, in a fixed
/// deterministic order: type index first, then lexicographic on the weight
/// vector. 620 subgroups in total.
pub static TWELVE_TYPE_PERMUTATIONS: Lazy<Vec<Vec<OneParamSubgroup>>> = Lazy::new(|| {
    TWELVE_TYPES
        .iter()
        .map(|w| distinct_permutations(*w))
        .collect()
});

/// Distinct permutations of a weight vector, sorted lexicographically.
pub fn distinct_permutations(weights: [i64; NUM_VARS]) -> Vec<OneParamSubgroup> {
    use itertools::Itertools;
    let mut perms: Vec<[i64; NUM_VARS]> = (0..NUM_VARS)
        .permutations(NUM_VARS)
        .map(|p| std::array::from_fn(|i| weights[p[i]]))
        .collect();
    perms.sort_unstable();
    perms.dedup();
    perms
        .into_iter()
        .map(|w| OneParamSubgroup::new(w).expect("permutation preserves validity"))
        .collect()
}
