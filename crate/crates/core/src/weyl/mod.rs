//! Type `A_n` root system and Weyl group combinatorics.

mod element;
mod group;
mod parabolic;

use std::fmt;

pub use element::{check_rank, parse_indices, WeylElement};
pub use group::{bruhat_leq, RootSystem, WeylGroup};
pub use parabolic::{j_compatible_words, CosetData, ParabolicSubset};

use crate::error::{Error, Result};
use crate::field::LatticeVector;

/// A reduced word `(i_1, .., i_k)`; reducedness is checked on construction.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedWord {
    rank: usize,
    letters: Vec<u8>,
}

impl ReducedWord {
    pub fn new(rank: usize, letters: &[u8]) -> Result<Self> {
        let w = WeylElement::from_word(rank, letters)?;
        if w.length() != letters.len() {
            return Err(Error::NotReduced(letters.to_vec()));
        }
        Ok(ReducedWord { rank, letters: letters.to_vec() })
    }

    pub fn canonical(w: &WeylElement) -> Self {
        ReducedWord { rank: w.rank(), letters: w.canonical_word() }
    }

    pub fn parse(rank: usize, s: &str) -> Result<Self> {
        Self::new(rank, &parse_indices(s)?)
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn element(&self) -> WeylElement {
        WeylElement::from_word(self.rank, &self.letters).expect("validated on construction")
    }

    /// `beta_j = s_{i_1} .. s_{i_{j-1}} alpha_{i_j}`; these enumerate the
    /// inversion set of the element.
    pub fn prefix_roots(&self) -> Vec<LatticeVector> {
        let mut prefix = WeylElement::identity(self.rank);
        let mut out = Vec::with_capacity(self.letters.len());
        for &i in &self.letters {
            out.push(prefix.act_lattice(&LatticeVector::simple(i as usize)));
            prefix = prefix.mul_simple_right(i as usize);
        }
        out
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|i| i.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}
