use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

/// Largest supported rank of the type-A root system.
pub const MAX_RANK: usize = 5;

/// A character of the torus, written in the basis of simple roots.
///
/// Coordinates past the rank in use are always zero.
#[derive(Copy, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticeVector(pub [i16; MAX_RANK]);

impl LatticeVector {
    pub const ZERO: LatticeVector = LatticeVector([0; MAX_RANK]);

    /// The simple root `alpha_i` (1-based).
    pub fn simple(i: usize) -> Self {
        assert!((1..=MAX_RANK).contains(&i), "simple root index {i} out of range");
        let mut v = [0; MAX_RANK];
        v[i - 1] = 1;
        LatticeVector(v)
    }

    /// `alpha_i + alpha_{i+1} + ... + alpha_j` (1-based, inclusive).
    pub fn interval(i: usize, j: usize) -> Self {
        assert!(1 <= i && i <= j && j <= MAX_RANK, "bad root interval {i}..={j}");
        let mut v = [0; MAX_RANK];
        for c in &mut v[i - 1..j] {
            *c = 1;
        }
        LatticeVector(v)
    }

    pub fn from_slice(coords: &[i16]) -> Self {
        assert!(coords.len() <= MAX_RANK);
        let mut v = [0; MAX_RANK];
        v[..coords.len()].copy_from_slice(coords);
        LatticeVector(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Positive roots of type A are exactly the nonzero 0/1 interval vectors.
    pub fn is_positive_root(&self) -> bool {
        let ones: Vec<usize> = (0..MAX_RANK).filter(|&k| self.0[k] == 1).collect();
        if ones.is_empty() || self.0.iter().any(|&c| c != 0 && c != 1) {
            return false;
        }
        ones.windows(2).all(|w| w[1] == w[0] + 1)
    }

    pub fn is_root(&self) -> bool {
        self.is_positive_root() || (-*self).is_positive_root()
    }

    pub fn coords(&self, rank: usize) -> &[i16] {
        &self.0[..rank]
    }

    /// Short label such as `1+2+3` for a positive root.
    pub fn root_label(&self) -> String {
        let idx: Vec<String> = (0..MAX_RANK)
            .filter(|&k| self.0[k] != 0)
            .map(|k| (k + 1).to_string())
            .collect();
        idx.join("+")
    }
}

impl Add for LatticeVector {
    type Output = LatticeVector;
    fn add(self, rhs: Self) -> Self {
        let mut v = self.0;
        for (a, b) in v.iter_mut().zip(rhs.0) {
            *a += b;
        }
        LatticeVector(v)
    }
}

impl Sub for LatticeVector {
    type Output = LatticeVector;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> Self {
        LatticeVector(self.0.map(|c| -c))
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}
