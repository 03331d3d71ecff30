//! The Temperley–Lieb quotient in the basis `E_w`, `w` fully commutative,
//! with relations `E_i^2 = -mu E_i`, `E_i E_j E_i = E_i` for `|i-j| = 1`
//! and `E_i E_j = E_j E_i` for `|i-j| > 1`.

use std::collections::{BTreeMap, HashSet, VecDeque};

use crate::field::ScalarT;
use crate::weyl::WeylElement;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TLElement {
    rank: usize,
    terms: BTreeMap<WeylElement, ScalarT>,
}

enum Step {
    Square(usize),
    Braid(usize),
}

fn find_step(word: &[u8]) -> Option<Step> {
    for k in 0..word.len().saturating_sub(1) {
        if word[k] == word[k + 1] {
            return Some(Step::Square(k));
        }
    }
    for k in 0..word.len().saturating_sub(2) {
        if word[k] == word[k + 2] && word[k].abs_diff(word[k + 1]) == 1 {
            return Some(Step::Braid(k));
        }
    }
    None
}

/// Normal form of the word `E_{i_1} .. E_{i_k}`: a scalar times `E_w`.
pub fn normal_form(rank: usize, word: &[u8]) -> (ScalarT, WeylElement) {
    let mut coeff = ScalarT::one();
    let mut current = word.to_vec();
    'outer: loop {
        // search the commutation class for a reducible factor
        let mut seen: HashSet<Vec<u8>> = HashSet::new();
        let mut queue = VecDeque::from([current.clone()]);
        seen.insert(current.clone());
        while let Some(w) = queue.pop_front() {
            match find_step(&w) {
                Some(Step::Square(k)) => {
                    coeff = coeff.mul(&ScalarT::mu().neg());
                    let mut next = w[..k].to_vec();
                    next.extend_from_slice(&w[k + 1..]);
                    current = next;
                    continue 'outer;
                }
                Some(Step::Braid(k)) => {
                    let mut next = w[..k + 1].to_vec();
                    next.extend_from_slice(&w[k + 3..]);
                    current = next;
                    continue 'outer;
                }
                None => {}
            }
            for k in 0..w.len().saturating_sub(1) {
                if w[k].abs_diff(w[k + 1]) > 1 {
                    let mut n = w.clone();
                    n.swap(k, k + 1);
                    if seen.insert(n.clone()) {
                        queue.push_back(n);
                    }
                }
            }
        }
        let element = WeylElement::from_word(rank, &current).expect("letters in range");
        assert!(
            element.length() == current.len() && element.is_fully_commutative(),
            "irreducible TL word {current:?} is not a fully commutative reduced word"
        );
        return (coeff, element);
    }
}

impl TLElement {
    pub fn zero(rank: usize) -> Self {
        TLElement { rank, terms: BTreeMap::new() }
    }

    pub fn generator(rank: usize, i: usize) -> Self {
        Self::basis(WeylElement::simple(rank, i))
    }

    pub fn basis(w: WeylElement) -> Self {
        assert!(w.is_fully_commutative(), "TL basis is indexed by fully commutative elements");
        let mut terms = BTreeMap::new();
        terms.insert(w, ScalarT::one());
        TLElement { rank: w.rank(), terms }
    }

    /// Reads a map of surviving `gamma^-`-coefficients as `E_w`-coefficients.
    pub fn from_coefficients(rank: usize, coeffs: &BTreeMap<WeylElement, ScalarT>) -> Self {
        let mut out = Self::zero(rank);
        for (w, c) in coeffs {
            assert!(w.is_fully_commutative());
            out.add_term(*w, c);
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<WeylElement, ScalarT> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, w: WeylElement, c: &ScalarT) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w).or_default();
        *e = e.add(c);
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(*w, c);
        }
        out
    }

    pub fn scale(&self, c: &ScalarT) -> Self {
        let mut out = Self::zero(self.rank);
        for (w, a) in &self.terms {
            out.add_term(*w, &a.mul(c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.rank);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut word = w1.canonical_word();
                word.extend(w2.canonical_word());
                let (c, w) = normal_form(self.rank, &word);
                out.add_term(w, &c.mul(c1).mul(c2));
            }
        }
        out
    }
}
