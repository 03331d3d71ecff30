use std::collections::HashMap;

use crate::error::Result;
use crate::field::LatticeVector;

use super::element::{check_rank, WeylElement};

/// Type `A_n` root datum in simple-root coordinates.
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub rank: usize,
    pub simple_roots: Vec<LatticeVector>,
    pub positive_roots: Vec<LatticeVector>,
    pub cartan: Vec<Vec<i32>>,
}

impl RootSystem {
    pub fn new(rank: usize) -> Result<Self> {
        check_rank(rank)?;
        let simple_roots = (1..=rank).map(LatticeVector::simple).collect();
        let mut positive_roots = Vec::new();
        for i in 1..=rank {
            for j in i..=rank {
                positive_roots.push(LatticeVector::interval(i, j));
            }
        }
        positive_roots.sort();
        let cartan = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| match i.abs_diff(j) {
                        0 => 2,
                        1 => -1,
                        _ => 0,
                    })
                    .collect()
            })
            .collect();
        Ok(RootSystem { rank, simple_roots, positive_roots, cartan })
    }

    /// Positive roots lying in the span of the given simple indices.
    pub fn positive_roots_in(&self, simple: &[usize]) -> Vec<LatticeVector> {
        self.positive_roots
            .iter()
            .filter(|r| (0..self.rank).all(|k| r.0[k] == 0 || simple.contains(&(k + 1))))
            .copied()
            .collect()
    }
}

/// The Weyl group `S_{n+1}`, enumerated once.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    rank: usize,
    elements: Vec<WeylElement>,
    index: HashMap<WeylElement, usize>,
}

impl WeylGroup {
    /// All `(n+1)!` elements ordered by length, then one-line notation.
    pub fn new(rank: usize) -> Result<Self> {
        check_rank(rank)?;
        let mut elements = Vec::new();
        let mut perm: Vec<u8> = (1..=rank as u8 + 1).collect();
        permutations(&mut perm, 0, &mut |p| {
            elements.push(WeylElement::from_one_line(p).expect("valid permutation"))
        });
        elements.sort_by(|a, b| a.length().cmp(&b.length()).then_with(|| a.one_line().cmp(b.one_line())));
        let index = elements.iter().enumerate().map(|(k, w)| (*w, k)).collect();
        Ok(WeylGroup { rank, elements, index })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, w: &WeylElement) -> usize {
        self.index[w]
    }

    pub fn identity(&self) -> WeylElement {
        self.elements[0]
    }

    pub fn longest(&self) -> WeylElement {
        *self.elements.last().unwrap()
    }

    pub fn simple(&self, i: usize) -> WeylElement {
        WeylElement::simple(self.rank, i)
    }
}

fn permutations(p: &mut Vec<u8>, k: usize, out: &mut impl FnMut(&[u8])) {
    if k == p.len() {
        out(p);
        return;
    }
    for j in k..p.len() {
        p.swap(k, j);
        permutations(p, k + 1, out);
        p.swap(k, j);
    }
}

/// Bruhat order via the lifting property, which is equivalent to the
/// subword criterion.
pub fn bruhat_leq(u: &WeylElement, w: &WeylElement) -> bool {
    let lu = u.length();
    let lw = w.length();
    if lu > lw {
        return false;
    }
    if lu == lw {
        return u == w;
    }
    if lu == 0 {
        return true;
    }
    let s = w.left_descents()[0];
    let sw = w.mul_simple_left(s);
    if u.has_left_descent(s) {
        bruhat_leq(&u.mul_simple_left(s), &sw)
    } else {
        bruhat_leq(u, &sw)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_sizes_and_order() {
        let g1 = WeylGroup::new(1).unwrap();
        assert_eq!(g1.elements(), &[WeylElement::identity(1), WeylElement::simple(1, 1)]);
        let g2 = WeylGroup::new(2).unwrap();
        let mut lengths: Vec<usize> = g2.elements().iter().map(|w| w.length()).collect();
        lengths.sort();
        assert_eq!(lengths, vec![0, 1, 1, 2, 2, 3]);
        assert_eq!(WeylGroup::new(4).unwrap().len(), 120);
        assert!(WeylGroup::new(0).is_err());
        assert!(WeylGroup::new(6).is_err());
    }

    #[test]
    fn root_counts() {
        for n in 1..=5 {
            let rs = RootSystem::new(n).unwrap();
            assert_eq!(rs.positive_roots.len(), n * (n + 1) / 2);
            assert!(rs.positive_roots.iter().all(|r| r.is_positive_root()));
        }
    }

    #[test]
    fn bruhat_examples() {
        let s1 = WeylElement::simple(2, 1);
        let w0 = WeylElement::from_word(2, &[2, 1, 2]).unwrap();
        assert!(bruhat_leq(&s1, &w0));
        let s1s2 = WeylElement::from_word(2, &[1, 2]).unwrap();
        let s2s1 = WeylElement::from_word(2, &[2, 1]).unwrap();
        assert!(!bruhat_leq(&s1s2, &s2s1));
        for w in WeylGroup::new(3).unwrap().elements() {
            assert!(bruhat_leq(&WeylElement::identity(3), w));
        }
    }
}
