use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::{LatticeVector, MAX_RANK};

/// An element of the Weyl group of type `A_n`, stored as a permutation of
/// `{1, .., n+1}` in one-line notation.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    perm: [u8; MAX_RANK + 1],
    size: u8,
}

pub fn check_rank(rank: usize) -> Result<()> {
    if (1..=MAX_RANK).contains(&rank) {
        Ok(())
    } else {
        Err(Error::RankOutOfRange(rank))
    }
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        assert!(rank <= MAX_RANK);
        let mut perm = [0u8; MAX_RANK + 1];
        for (k, p) in perm.iter_mut().enumerate().take(rank + 1) {
            *p = k as u8 + 1;
        }
        WeylElement { perm, size: rank as u8 + 1 }
    }

    /// The simple reflection `s_i` (1-based).
    pub fn simple(rank: usize, i: usize) -> Self {
        Self::identity(rank).mul_simple_right(i)
    }

    pub fn from_one_line(values: &[u8]) -> Result<Self> {
        let size = values.len();
        if !(2..=MAX_RANK + 1).contains(&size) {
            return Err(Error::InvalidPermutation(values.to_vec()));
        }
        let mut seen = [false; MAX_RANK + 2];
        for &v in values {
            if v == 0 || v as usize > size || seen[v as usize] {
                return Err(Error::InvalidPermutation(values.to_vec()));
            }
            seen[v as usize] = true;
        }
        let mut perm = [0u8; MAX_RANK + 1];
        perm[..size].copy_from_slice(values);
        Ok(WeylElement { perm, size: size as u8 })
    }

    /// Product `s_{i_1} ... s_{i_k}`; the word need not be reduced.
    pub fn from_word(rank: usize, word: &[u8]) -> Result<Self> {
        let mut w = Self::identity(rank);
        for &i in word {
            if i == 0 || i as usize > rank {
                return Err(Error::SimpleIndexOutOfRange { index: i as usize, rank });
            }
            w = w.mul_simple_right(i as usize);
        }
        Ok(w)
    }

    pub fn one_line(&self) -> &[u8] {
        &self.perm[..self.size as usize]
    }

    pub fn rank(&self) -> usize {
        self.size as usize - 1
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let p = self.one_line();
        let mut inv = 0;
        for a in 0..p.len() {
            for b in a + 1..p.len() {
                if p[a] > p[b] {
                    inv += 1;
                }
            }
        }
        inv
    }

    pub fn is_identity(&self) -> bool {
        self.one_line().iter().enumerate().all(|(k, &v)| v as usize == k + 1)
    }

    /// `(-1)^{l(w)}`
    pub fn sign(&self) -> i64 {
        if self.length().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// `self * other` as permutations: `k -> self(other(k))`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        debug_assert_eq!(self.size, other.size);
        let mut perm = [0u8; MAX_RANK + 1];
        for k in 0..self.size as usize {
            perm[k] = self.perm[other.perm[k] as usize - 1];
        }
        WeylElement { perm, size: self.size }
    }

    pub fn inverse(&self) -> WeylElement {
        let mut perm = [0u8; MAX_RANK + 1];
        for k in 0..self.size as usize {
            perm[self.perm[k] as usize - 1] = k as u8 + 1;
        }
        WeylElement { perm, size: self.size }
    }

    /// `w s_i < w`
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.perm[i - 1] > self.perm[i]
    }

    /// `s_i w < w`
    pub fn has_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.perm[i - 1] > inv.perm[i]
    }

    pub fn mul_simple_right(&self, i: usize) -> WeylElement {
        assert!(i >= 1 && i < self.size as usize, "simple index {i} out of range");
        let mut w = *self;
        w.perm.swap(i - 1, i);
        w
    }

    pub fn mul_simple_left(&self, i: usize) -> WeylElement {
        assert!(i >= 1 && i < self.size as usize, "simple index {i} out of range");
        let mut w = *self;
        for v in w.perm[..w.size as usize].iter_mut() {
            if *v as usize == i {
                *v = i as u8 + 1;
            } else if *v as usize == i + 1 {
                *v = i as u8;
            }
        }
        w
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (1..=self.rank()).filter(|&i| self.has_right_descent(i)).collect()
    }

    pub fn left_descents(&self) -> Vec<usize> {
        (1..=self.rank()).filter(|&i| self.has_left_descent(i)).collect()
    }

    /// Lexicographically smallest reduced word.
    pub fn canonical_word(&self) -> Vec<u8> {
        let mut word = Vec::with_capacity(self.length());
        let mut w = *self;
        while let Some(i) = (1..=w.rank()).find(|&i| w.has_left_descent(i)) {
            word.push(i as u8);
            w = w.mul_simple_left(i);
        }
        word
    }

    /// All reduced words, sorted.
    pub fn reduced_words(&self) -> Vec<Vec<u8>> {
        if self.is_identity() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for i in self.left_descents() {
            for tail in self.mul_simple_left(i).reduced_words() {
                let mut word = vec![i as u8];
                word.extend(tail);
                out.push(word);
            }
        }
        out
    }

    /// 321-pattern avoidance, which in type A is equivalent to being fully
    /// commutative.
    pub fn is_fully_commutative(&self) -> bool {
        let p = self.one_line();
        let n = p.len();
        for b in 1..n {
            let left_bigger = p[..b].iter().any(|&a| a > p[b]);
            let right_smaller = p[b + 1..].iter().any(|&c| c < p[b]);
            if left_bigger && right_smaller {
                return false;
            }
        }
        true
    }

    /// Image of a root-lattice vector under the reflection representation.
    pub fn act_lattice(&self, v: &LatticeVector) -> LatticeVector {
        // simple-root coordinates -> epsilon coordinates -> permute -> back
        let n1 = self.size as usize;
        let mut eps = [0i32; MAX_RANK + 1];
        for k in 0..n1 {
            let cur = if k < n1 - 1 { v.0[k] as i32 } else { 0 };
            let prev = if k > 0 { v.0[k - 1] as i32 } else { 0 };
            eps[k] = cur - prev;
        }
        let mut moved = [0i32; MAX_RANK + 1];
        for k in 0..n1 {
            moved[self.perm[k] as usize - 1] = eps[k];
        }
        let mut out = [0i16; MAX_RANK];
        let mut acc = 0i32;
        for k in 0..n1 - 1 {
            acc += moved[k];
            out[k] = acc as i16;
        }
        // coordinates beyond the rank are untouched
        out[n1 - 1..].copy_from_slice(&v.0[n1 - 1..]);
        LatticeVector(out)
    }

    /// Matrix of the action in simple-root coordinates: column `j` is
    /// `w(alpha_{j+1})`.
    pub fn lattice_matrix(&self) -> [[i16; MAX_RANK]; MAX_RANK] {
        let mut m = [[0i16; MAX_RANK]; MAX_RANK];
        for j in 0..MAX_RANK {
            let col = self.act_lattice(&LatticeVector::simple(j + 1));
            for i in 0..MAX_RANK {
                m[i][j] = col.0[i];
            }
        }
        m
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line().iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for WeylElement {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let values = parse_indices(s)?;
        WeylElement::from_one_line(&values)
    }
}

/// Parses `"2,1,3"` (spaces allowed). An empty string gives an empty list.
pub fn parse_indices(s: &str) -> Result<Vec<u8>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| p.trim().parse::<u8>().map_err(|_| Error::Parse(format!("bad index list {s:?}"))))
        .collect()
}
