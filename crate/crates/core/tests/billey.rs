use std::collections::BTreeMap;

use proptest::prelude::*;

use klschubert::billey::{billey_coefficient, restriction, FreeDemazureElement, Rewriter};
use klschubert::field::{embed_hyperbolic_chern, FieldElement, Scalar};
use klschubert::hecke::{HeckeContext, TwistedElement};
use klschubert::hyperbolic::{mu_w, x_word, HyperbolicLayer};
use klschubert::reproduce::{golden, reproduce};
use klschubert::weyl::{ParabolicSubset, ReducedWord, WeylElement, WeylGroup};

fn exact(rank: usize) -> HeckeContext<FieldElement> {
    HeckeContext::exact(rank).unwrap()
}

/// Image of `sum_v c_v X_{I_v}` in the twisted group algebra.
fn realize(h: &HeckeContext<FieldElement>, rw: &Rewriter, z: &FreeDemazureElement) -> TwistedElement<FieldElement> {
    z.terms().iter().fold(h.zero(), |acc, (v, c)| h.add(&acc, &h.mul(&h.scalar(c), &x_word(h, rw.chosen_word(v)))))
}

/// `sum over subwords J of I` of `prod_{j in J} x_{beta_j} X_{I|J}`, built directly in the twisted algebra.
fn root_polynomial_oracle(h: &HeckeContext<FieldElement>, word: &ReducedWord) -> TwistedElement<FieldElement> {
    let letters = word.letters();
    let xs: Vec<FieldElement> = word.prefix_roots().into_iter().map(embed_hyperbolic_chern).collect();
    let mut out = h.zero();
    for mask in 0u32..(1 << letters.len()) {
        let picked: Vec<usize> = (0..letters.len()).filter(|j| mask >> j & 1 == 1).collect();
        let sub: Vec<u8> = picked.iter().map(|&j| letters[j]).collect();
        let coeff = picked.iter().fold(FieldElement::one(), |acc, &j| acc.mul(&xs[j]));
        out = h.add(&out, &h.mul(&h.scalar(&coeff), &x_word(h, &sub)));
    }
    out
}

fn canonical_rewriter(group: &WeylGroup) -> Rewriter {
    let words: BTreeMap<WeylElement, Vec<u8>> = group.elements().iter().map(|w| (*w, w.canonical_word())).collect();
    Rewriter::new(words, group.rank())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn word_expansion_matches_twisted_algebra(word in prop::collection::vec(1u8..=3, 0..7)) {
        let h = exact(3);
        let j = ParabolicSubset::new(3, &[1, 3]).unwrap();
        for rw in [Rewriter::for_subset(h.group(), &j), canonical_rewriter(h.group())] {
            let expanded = rw.expand_word(&word);
            prop_assert!(h.sub(&realize(&h, &rw, &expanded), &x_word(&h, &word)).is_zero());
            for c in expanded.terms().values() {
                for i in 1..=3 {
                    prop_assert_eq!(&c.act(&(), &WeylElement::simple(3, i)), c);
                }
            }
        }
    }
}

#[test]
fn root_polynomials_match_subword_expansion() {
    for rank in 2..=3 {
        let h = exact(rank);
        let j = ParabolicSubset::new(rank, &(1..rank).collect::<Vec<_>>()).unwrap();
        let rw = Rewriter::for_subset(h.group(), &j);
        for w in h.elements().iter().step_by(if rank == 2 { 1 } else { 3 }) {
            let word = ReducedWord::canonical(w);
            let r = rw.root_polynomial(&word);
            assert!(h.sub(&realize(&h, &rw, &r), &root_polynomial_oracle(&h, &word)).is_zero(), "w={w}");
        }
    }
}

#[test]
fn root_polynomials_do_not_depend_on_the_word() {
    let g = WeylGroup::new(3).unwrap();
    let j = ParabolicSubset::new(3, &[2, 3]).unwrap();
    let rw = Rewriter::for_subset(&g, &j);
    for w in g.elements() {
        let words = w.reduced_words();
        let first = rw.root_polynomial(&ReducedWord::new(3, &words[0]).unwrap());
        for word in &words[1..] {
            assert_eq!(rw.root_polynomial(&ReducedWord::new(3, word).unwrap()), first, "w={w} word={word:?}");
        }
    }
}

#[test]
fn subword_contributions_sum_to_the_coefficient() {
    let g = WeylGroup::new(3).unwrap();
    let j = ParabolicSubset::new(3, &[1, 2]).unwrap();
    let rw = Rewriter::for_subset(&g, &j);
    let w = g.longest();
    let word = ReducedWord::new(3, rw.chosen_word(&w)).unwrap();
    for u in g.elements().iter().filter(|u| j.is_minimal_left(u)) {
        let sum = rw.subword_contributions(&word, u).iter().fold(FieldElement::zero(), |acc, t| acc.add(&t.value));
        assert_eq!(sum, billey_coefficient(&rw, &w, u, &j).unwrap(), "u={u}");
    }
}

#[test]
fn coefficient_equals_class_restriction() {
    let h = exact(3);
    let layer = HyperbolicLayer::new(&h);
    for members in [[1usize, 2], [1, 3], [2, 3]] {
        let j = ParabolicSubset::new(3, &members).unwrap();
        let rw = Rewriter::for_subset(h.group(), &j);
        for u in h.elements().iter().filter(|u| j.is_minimal_left(u)) {
            let ct = layer.c_tilde(u);
            for w in h.elements() {
                assert_eq!(*ct.at(&h, w), billey_coefficient(&rw, w, u, &j).unwrap(), "J={j} w={w} u={u}");
                assert_eq!(restriction(&rw, u, w, &j).unwrap(), mu_w(u).mul(ct.at(&h, w)));
            }
        }
    }
}

#[test]
fn inputs_are_validated() {
    let g = WeylGroup::new(3).unwrap();
    let j = ParabolicSubset::new(3, &[1, 2]).unwrap();
    let rw = Rewriter::for_subset(&g, &j);
    let w = g.longest();
    assert!(billey_coefficient(&rw, &w, &WeylElement::simple(3, 1), &j).is_err());
    let small = ParabolicSubset::new(3, &[1]).unwrap();
    assert!(billey_coefficient(&rw, &w, &WeylElement::identity(3), &small).is_err());
}

#[test]
fn golden_rank_four_example() {
    let example = golden();
    assert_eq!(example.terms.len(), 8);
    let rep = reproduce().unwrap();
    assert!(rep.rows.iter().all(|r| r.matches));
    assert!(rep.sum_matches_coefficient);
    assert!(rep.restriction_matches);
    assert!(rep.passed());
}
