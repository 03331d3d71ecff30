use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::LatticeVector;

use super::element::{check_rank, parse_indices, WeylElement};
use super::group::WeylGroup;

/// A subset `J` of the simple indices `{1..n}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ParabolicSubset {
    rank: usize,
    members: Vec<usize>,
}

impl ParabolicSubset {
    pub fn new(rank: usize, members: &[usize]) -> Result<Self> {
        check_rank(rank)?;
        let mut m = members.to_vec();
        m.sort_unstable();
        m.dedup();
        if m.iter().any(|&i| i == 0 || i > rank) {
            return Err(Error::InvalidParabolic(format!("{members:?} for rank {rank}")));
        }
        Ok(ParabolicSubset { rank, members: m })
    }

    pub fn parse(rank: usize, s: &str) -> Result<Self> {
        let idx: Vec<usize> = parse_indices(s)?.into_iter().map(usize::from).collect();
        Self::new(rank, &idx)
    }

    pub fn empty(rank: usize) -> Self {
        ParabolicSubset { rank, members: Vec::new() }
    }

    pub fn full(rank: usize) -> Self {
        ParabolicSubset { rank, members: (1..=rank).collect() }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(&i)
    }

    /// `|J| = n - 1`: the partial flag variety is a Grassmannian.
    pub fn is_maximal(&self) -> bool {
        self.members.len() + 1 == self.rank
    }

    pub fn require_maximal(&self) -> Result<()> {
        if self.is_maximal() {
            Ok(())
        } else {
            Err(Error::NotMaximal(self.to_string()))
        }
    }

    /// Positive roots of the Levi subsystem `Sigma_J`.
    pub fn positive_roots(&self) -> Vec<LatticeVector> {
        let mut out = Vec::new();
        for &i in &self.members {
            let mut j = i;
            loop {
                out.push(LatticeVector::interval(i, j));
                if self.contains(j + 1) {
                    j += 1;
                } else {
                    break;
                }
            }
        }
        out.sort();
        out
    }

    pub fn is_minimal_left(&self, w: &WeylElement) -> bool {
        self.members.iter().all(|&j| !w.has_right_descent(j))
    }

    pub fn is_minimal_right(&self, w: &WeylElement) -> bool {
        self.members.iter().all(|&j| !w.has_left_descent(j))
    }

    pub fn in_subgroup(&self, w: &WeylElement) -> bool {
        w.canonical_word().iter().all(|&i| self.contains(i as usize))
    }

    /// Unique `w = u v` with `u` in `W^J`, `v` in `W_J`, lengths adding.
    pub fn factor(&self, w: &WeylElement) -> (WeylElement, WeylElement) {
        let mut u = *w;
        let mut v = WeylElement::identity(w.rank());
        while let Some(&j) = self.members.iter().find(|&&j| u.has_right_descent(j)) {
            u = u.mul_simple_right(j);
            v = v.mul_simple_left(j);
        }
        (u, v)
    }
}

impl fmt::Display for ParabolicSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for ParabolicSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "J{self}")
    }
}

/// Coset combinatorics of `W_J` inside `W`.
#[derive(Debug, Clone)]
pub struct CosetData {
    pub subset: ParabolicSubset,
    /// `W_J`, ordered as in the ambient enumeration.
    pub subgroup: Vec<WeylElement>,
    /// `W^J`: minimal representatives of left cosets `w W_J`.
    pub min_left: Vec<WeylElement>,
    /// `^J W`: minimal representatives of right cosets `W_J w`.
    pub min_right: Vec<WeylElement>,
    pub longest: WeylElement,
}

impl CosetData {
    pub fn new(group: &WeylGroup, subset: &ParabolicSubset) -> Self {
        let subgroup: Vec<WeylElement> =
            group.elements().iter().filter(|w| subset.in_subgroup(w)).copied().collect();
        let min_left = group.elements().iter().filter(|w| subset.is_minimal_left(w)).copied().collect();
        let min_right = group.elements().iter().filter(|w| subset.is_minimal_right(w)).copied().collect();
        let longest = *subgroup.iter().max_by_key(|w| w.length()).unwrap();
        CosetData { subset: subset.clone(), subgroup, min_left, min_right, longest }
    }

    pub fn factor(&self, w: &WeylElement) -> (WeylElement, WeylElement) {
        self.subset.factor(w)
    }
}

/// Reduced words `I_w = I_u ++ I_v` for `w = u v`, with `I_u`, `I_v` the
/// canonical words.
pub fn j_compatible_words(group: &WeylGroup, subset: &ParabolicSubset) -> BTreeMap<WeylElement, Vec<u8>> {
    group
        .elements()
        .iter()
        .map(|w| {
            let (u, v) = subset.factor(w);
            let mut word = u.canonical_word();
            word.extend(v.canonical_word());
            (*w, word)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_cosets() {
        let g = WeylGroup::new(2).unwrap();
        let j = ParabolicSubset::new(2, &[1]).unwrap();
        let cd = CosetData::new(&g, &j);
        let expected: Vec<WeylElement> = [vec![], vec![2], vec![1, 2]]
            .iter()
            .map(|w| WeylElement::from_word(2, w).unwrap())
            .collect();
        let mut got = cd.min_left.clone();
        got.sort();
        let mut exp = expected.clone();
        exp.sort();
        assert_eq!(got, exp);
        assert_eq!(cd.longest, WeylElement::simple(2, 1));
    }

    #[test]
    fn empty_subset_is_trivial() {
        let g = WeylGroup::new(3).unwrap();
        let cd = CosetData::new(&g, &ParabolicSubset::empty(3));
        assert_eq!(cd.min_left.len(), 24);
        for w in g.elements() {
            assert!(cd.factor(w).1.is_identity());
        }
    }

    #[test]
    fn a4_example_representative() {
        let j = ParabolicSubset::new(4, &[1, 2, 4]).unwrap();
        let u = WeylElement::from_word(4, &[2, 3]).unwrap();
        assert!(j.is_minimal_left(&u));
        let words = j_compatible_words(&WeylGroup::new(4).unwrap(), &j);
        assert_eq!(words[&u], vec![2, 3]);
        // the words the worked example fixes
        for w in [[1u8, 2, 1], [2, 3, 2], [4, 3, 4]] {
            assert_eq!(words[&WeylElement::from_word(4, &w).unwrap()], w.to_vec());
        }
    }

    #[test]
    fn invalid_subsets() {
        assert!(ParabolicSubset::new(2, &[3]).is_err());
        assert!(ParabolicSubset::parse(3, "1,x").is_err());
        assert!(ParabolicSubset::new(3, &[1, 2]).unwrap().is_maximal());
        assert!(!ParabolicSubset::new(3, &[1]).unwrap().is_maximal());
    }
}
