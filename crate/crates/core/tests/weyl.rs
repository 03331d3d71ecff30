use std::collections::BTreeSet;

use proptest::prelude::*;

use klschubert::field::LatticeVector;
use klschubert::weyl::{bruhat_leq, j_compatible_words, ParabolicSubset, ReducedWord, WeylElement, WeylGroup};

/// Tableau criterion: u <= w iff every sorted prefix of u is dominated by
/// the sorted prefix of w.
fn tableau_leq(u: &WeylElement, w: &WeylElement) -> bool {
    let (a, b) = (u.one_line(), w.one_line());
    (1..a.len()).all(|k| {
        let mut x = a[..k].to_vec();
        let mut y = b[..k].to_vec();
        x.sort();
        y.sort();
        x.iter().zip(&y).all(|(p, q)| p <= q)
    })
}

/// Fully commutative iff no reduced word contains `i, i+-1, i` as a factor.
fn fc_by_words(w: &WeylElement) -> bool {
    w.reduced_words().iter().all(|word| word.windows(3).all(|f| !(f[0] == f[2] && f[0].abs_diff(f[1]) == 1)))
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

#[test]
fn group_orders_and_sorting() {
    for n in 1..=5 {
        let g = WeylGroup::new(n).unwrap();
        assert_eq!(g.len(), factorial(n + 1));
        let keys: Vec<(usize, Vec<u8>)> = g.elements().iter().map(|w| (w.length(), w.one_line().to_vec())).collect();
        assert!(keys.windows(2).all(|p| p[0] < p[1]));
        assert_eq!(g.longest().length(), n * (n + 1) / 2);
    }
}

#[test]
fn bruhat_matches_tableau_criterion() {
    for n in 1..=3 {
        let g = WeylGroup::new(n).unwrap();
        for u in g.elements() {
            for w in g.elements() {
                assert_eq!(bruhat_leq(u, w), tableau_leq(u, w), "u={u} w={w}");
            }
        }
    }
}

#[test]
fn fully_commutative_counts_are_catalan() {
    let catalan = [2, 5, 14, 42];
    for n in 1..=4 {
        let g = WeylGroup::new(n).unwrap();
        let fc: Vec<&WeylElement> = g.elements().iter().filter(|w| w.is_fully_commutative()).collect();
        assert_eq!(fc.len(), catalan[n - 1]);
        for w in g.elements() {
            assert_eq!(w.is_fully_commutative(), fc_by_words(w), "w={w}");
        }
    }
}

#[test]
fn grassmannian_representatives_are_fully_commutative() {
    for n in 2..=4 {
        let g = WeylGroup::new(n).unwrap();
        for k in 1..=n {
            let members: Vec<usize> = (1..=n).filter(|&i| i != k).collect();
            let j = ParabolicSubset::new(n, &members).unwrap();
            for w in g.elements().iter().filter(|w| j.is_minimal_left(w)) {
                assert!(fc_by_words(w), "n={n} J={j} w={w}");
            }
        }
    }
}

#[test]
fn reduced_words_are_reduced_and_complete() {
    let g = WeylGroup::new(3).unwrap();
    for w in g.elements() {
        let words = w.reduced_words();
        let set: BTreeSet<&Vec<u8>> = words.iter().collect();
        assert_eq!(set.len(), words.len());
        for word in &words {
            assert_eq!(word.len(), w.length());
            assert_eq!(WeylElement::from_word(3, word).unwrap(), *w);
        }
        assert_eq!(words.iter().min().unwrap(), &w.canonical_word());
    }
    // the longest element of A_3 has 16 reduced words
    assert_eq!(g.longest().reduced_words().len(), 16);
}

#[test]
fn non_reduced_words_are_rejected() {
    assert!(ReducedWord::new(2, &[1, 1]).is_err());
    assert!(ReducedWord::new(2, &[1, 2, 1]).is_ok());
    assert!(ReducedWord::new(2, &[3]).is_err());
}

#[test]
fn prefix_roots_are_the_inversions() {
    let g = WeylGroup::new(3).unwrap();
    for w in g.elements() {
        let word = ReducedWord::canonical(w);
        let roots: BTreeSet<LatticeVector> = word.prefix_roots().into_iter().collect();
        assert_eq!(roots.len(), w.length());
        for r in &roots {
            assert!(r.is_positive_root());
            // beta is an inversion of w^-1: w^-1(beta) < 0
            assert!(!w.inverse().act_lattice(r).is_positive_root());
        }
    }
}

#[test]
fn parabolic_factorization() {
    for n in 2..=4 {
        let g = WeylGroup::new(n).unwrap();
        for k in 1..=n {
            let members: Vec<usize> = (1..=n).filter(|&i| i != k).collect();
            let j = ParabolicSubset::new(n, &members).unwrap();
            let reps = g.elements().iter().filter(|w| j.is_minimal_left(w)).count();
            // |W^J| = binomial(n+1, k)
            let binom = factorial(n + 1) / (factorial(k) * factorial(n + 1 - k));
            assert_eq!(reps, binom);
            for w in g.elements() {
                let (u, v) = j.factor(w);
                assert!(j.is_minimal_left(&u) && j.in_subgroup(&v));
                assert_eq!(u.compose(&v), *w);
                assert_eq!(u.length() + v.length(), w.length());
            }
            let words = j_compatible_words(&g, &j);
            for (w, word) in &words {
                assert_eq!(WeylElement::from_word(n, word).unwrap(), *w);
                assert_eq!(word.len(), w.length());
            }
        }
    }
}

#[test]
fn parabolic_validation() {
    assert!(ParabolicSubset::new(3, &[4]).is_err());
    assert!(ParabolicSubset::new(3, &[0]).is_err());
    assert!(ParabolicSubset::new(3, &[1]).unwrap().require_maximal().is_err());
    assert!(ParabolicSubset::parse(3, "1,2").unwrap().is_maximal());
}

#[test]
fn rank_bounds() {
    assert!(WeylGroup::new(0).is_err());
    assert!(WeylGroup::new(6).is_err());
}

fn word_strategy(n: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(1..=n as u8, 0..10)
}

proptest! {
    #[test]
    fn lattice_action_is_a_homomorphism(a in word_strategy(4), b in word_strategy(4), coords in prop::collection::vec(-3i16..=3, 4)) {
        let v = WeylElement::from_word(4, &a).unwrap();
        let w = WeylElement::from_word(4, &b).unwrap();
        let lambda = LatticeVector::from_slice(&coords);
        prop_assert_eq!(v.compose(&w).act_lattice(&lambda), v.act_lattice(&w.act_lattice(&lambda)));
    }

    #[test]
    fn length_is_subadditive_and_inverse_preserving(a in word_strategy(4), b in word_strategy(4)) {
        let v = WeylElement::from_word(4, &a).unwrap();
        let w = WeylElement::from_word(4, &b).unwrap();
        prop_assert!(v.compose(&w).length() <= v.length() + w.length());
        prop_assert_eq!(v.inverse().length(), v.length());
        prop_assert!(v.length() <= a.len());
    }

    #[test]
    fn bruhat_is_graded_by_length(a in word_strategy(4), b in word_strategy(4)) {
        let v = WeylElement::from_word(4, &a).unwrap();
        let w = WeylElement::from_word(4, &b).unwrap();
        prop_assert_eq!(bruhat_leq(&v, &w), tableau_leq(&v, &w));
        if bruhat_leq(&v, &w) {
            prop_assert!(v.length() <= w.length());
        }
    }
}
