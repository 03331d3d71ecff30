//! Root polynomials in the free module spanned by `X_{I_v}`, with central
//! coefficients, and the restriction formula they feed.
//!
//! Words in the `X_i` are rewritten with `X_i^2 = -X_i`, commutations and
//! `X_j X_i X_j = X_i X_j X_i + mu^-2 (X_j - X_i)` for `|i - j| = 1`.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::field::{embed_hyperbolic_chern, mu_pow, FieldElement};
use crate::hyperbolic::mu_w;
use crate::weyl::{j_compatible_words, ParabolicSubset, ReducedWord, WeylElement, WeylGroup};

/// `sum_v c_v X_{I_v}` with central coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct FreeDemazureElement {
    rank: usize,
    terms: BTreeMap<WeylElement, FieldElement>,
}

impl FreeDemazureElement {
    pub fn zero(rank: usize) -> Self {
        FreeDemazureElement { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::basis(WeylElement::identity(rank))
    }

    pub fn basis(v: WeylElement) -> Self {
        let mut out = Self::zero(v.rank());
        out.add_term(v, &FieldElement::one());
        out
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &BTreeMap<WeylElement, FieldElement> {
        &self.terms
    }

    pub fn coefficient(&self, v: &WeylElement) -> FieldElement {
        self.terms.get(v).cloned().unwrap_or_else(FieldElement::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, v: WeylElement, c: &FieldElement) {
        if c.is_zero() {
            return;
        }
        let next = match self.terms.get(&v) {
            Some(old) => old.add(c),
            None => c.clone(),
        };
        if next.is_zero() {
            self.terms.remove(&v);
        } else {
            self.terms.insert(v, next);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (v, c) in &other.terms {
            out.add_term(*v, c);
        }
        out
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        let mut out = Self::zero(self.rank);
        for (v, a) in &self.terms {
            out.add_term(*v, &a.mul(c));
        }
        out
    }
}

enum Move {
    Swap,
    Braid { outer: u8, inner: u8 },
}

/// Rewrites `X`-words into the basis `X_{I_v}` for one fixed choice of
/// words, memoizing every word it has seen.
pub struct Rewriter {
    rank: usize,
    words: BTreeMap<WeylElement, Vec<u8>>,
    memo: Mutex<HashMap<Vec<u8>, Arc<FreeDemazureElement>>>,
    mu_inv2: FieldElement,
}

impl Rewriter {
    pub fn new(words: BTreeMap<WeylElement, Vec<u8>>, rank: usize) -> Self {
        Rewriter { rank, words, memo: Mutex::new(HashMap::new()), mu_inv2: mu_pow(-2) }
    }

    /// Rewriter for the `J`-compatible words.
    pub fn for_subset(group: &WeylGroup, subset: &ParabolicSubset) -> Self {
        Self::new(j_compatible_words(group, subset), group.rank())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn chosen_word(&self, v: &WeylElement) -> &[u8] {
        &self.words[v]
    }

    /// `X_{i_1} .. X_{i_k}` in the chosen basis.
    pub fn expand_word(&self, word: &[u8]) -> Arc<FreeDemazureElement> {
        if let Some(hit) = self.memo.lock().unwrap().get(word) {
            return hit.clone();
        }
        let value = Arc::new(self.expand_uncached(word));
        self.memo.lock().unwrap().insert(word.to_vec(), value.clone());
        value
    }

    fn expand_uncached(&self, word: &[u8]) -> FreeDemazureElement {
        if let Some(k) = (1..word.len()).find(|&k| word[k] == word[k - 1]) {
            let mut shorter = word.to_vec();
            shorter.remove(k);
            return self.expand_word(&shorter).scale(&FieldElement::integer(-1));
        }
        let w = WeylElement::from_word(self.rank, word).expect("letters in range");
        let reduced = w.length() == word.len();
        if reduced && self.words[&w] == word {
            return FreeDemazureElement::basis(w);
        }
        let target = |c: &[u8]| if reduced { self.words[&w] == c } else { c.windows(2).any(|p| p[0] == p[1]) };
        let path = self.shortest_path(word, target);
        // X_{word} = X_{end} + corrections picked up along the path
        let mut out = FreeDemazureElement::zero(self.rank);
        let mut current = word.to_vec();
        for (p, mv) in path {
            match mv {
                Move::Swap => current.swap(p, p + 1),
                Move::Braid { outer, inner } => {
                    for (letter, sign) in [(outer, 1), (inner, -1)] {
                        let mut corr = current[..p].to_vec();
                        corr.push(letter);
                        corr.extend_from_slice(&current[p + 3..]);
                        out = out.add(&self.expand_word(&corr).scale(&self.mu_inv2.scale_int(sign)));
                    }
                    current[p] = inner;
                    current[p + 1] = outer;
                    current[p + 2] = inner;
                }
            }
        }
        out.add(&self.expand_word(&current))
    }

    fn shortest_path(&self, start: &[u8], target: impl Fn(&[u8]) -> bool) -> Vec<(usize, Move)> {
        let mut parent: HashMap<Vec<u8>, Option<(Vec<u8>, usize)>> = HashMap::new();
        parent.insert(start.to_vec(), None);
        let mut queue = VecDeque::from([start.to_vec()]);
        let end = loop {
            let w = queue.pop_front().expect("braid class contains a target word");
            if target(&w) {
                break w;
            }
            for p in 0..w.len().saturating_sub(1) {
                let mut next = None;
                if w[p].abs_diff(w[p + 1]) > 1 {
                    let mut n = w.clone();
                    n.swap(p, p + 1);
                    next = Some(n);
                }
                let braid =
                    (p + 2 < w.len() && w[p] == w[p + 2] && w[p].abs_diff(w[p + 1]) == 1).then(|| {
                        let mut n = w.clone();
                        n[p] = w[p + 1];
                        n[p + 1] = w[p];
                        n[p + 2] = w[p + 1];
                        n
                    });
                for n in next.into_iter().chain(braid) {
                    if !parent.contains_key(&n) {
                        parent.insert(n.clone(), Some((w.clone(), p)));
                        queue.push_back(n);
                    }
                }
            }
        };
        let mut steps = Vec::new();
        let mut cur = end;
        while let Some(Some((prev, p))) = parent.get(&cur) {
            let (prev, p) = (prev.clone(), *p);
            let mv = if prev[p].abs_diff(prev[p + 1]) > 1 {
                Move::Swap
            } else {
                Move::Braid { outer: prev[p], inner: prev[p + 1] }
            };
            steps.push((p, mv));
            cur = prev;
        }
        steps.reverse();
        steps
    }

    /// Product with central coefficients: `X_{I_v} X_{I_u}` is the expansion
    /// of the concatenated word.
    pub fn mul(&self, a: &FreeDemazureElement, b: &FreeDemazureElement) -> FreeDemazureElement {
        let mut out = FreeDemazureElement::zero(self.rank);
        for (v, c) in &a.terms {
            for (u, d) in &b.terms {
                let mut word = self.words[v].clone();
                word.extend_from_slice(&self.words[u]);
                out = out.add(&self.expand_word(&word).scale(&c.mul(d)));
            }
        }
        out
    }

    /// `R_I = prod_j (1 + x_{beta_j} X_{i_j})`.
    pub fn root_polynomial(&self, word: &ReducedWord) -> FreeDemazureElement {
        let roots = word.prefix_roots();
        let mut acc = FreeDemazureElement::one(self.rank);
        for (&i, beta) in word.letters().iter().zip(roots) {
            let x = embed_hyperbolic_chern(beta);
            let mut shifted = FreeDemazureElement::zero(self.rank);
            for (v, c) in &acc.terms {
                let mut w = self.words[v].clone();
                w.push(i);
                shifted = shifted.add(&self.expand_word(&w).scale(c));
            }
            acc = acc.add(&shifted.scale(&x));
        }
        acc
    }

    /// Nonzero contributions of individual subwords of `I` to the
    /// coefficient of `X_{I_u}` in `R_I`.
    pub fn subword_contributions(&self, word: &ReducedWord, u: &WeylElement) -> Vec<SubwordTerm> {
        let letters = word.letters();
        let xs: Vec<FieldElement> = word.prefix_roots().into_iter().map(embed_hyperbolic_chern).collect();
        let mut out = Vec::new();
        for mask in 0u32..(1 << letters.len()) {
            let picked: Vec<usize> = (0..letters.len()).filter(|j| mask >> j & 1 == 1).collect();
            if picked.len() < u.length() {
                continue;
            }
            let sub: Vec<u8> = picked.iter().map(|&j| letters[j]).collect();
            let c = self.expand_word(&sub).coefficient(u);
            if c.is_zero() {
                continue;
            }
            let value = picked.iter().fold(c, |acc, &j| acc.mul(&xs[j]));
            let positions = (0..letters.len()).map(|j| (mask >> j & 1 == 1).then_some(letters[j])).collect();
            out.push(SubwordTerm { positions, value });
        }
        out
    }
}

/// One subword: the letters kept (`None` for skipped) and its contribution.
#[derive(Clone, Debug)]
pub struct SubwordTerm {
    pub positions: Vec<Option<u8>>,
    pub value: FieldElement,
}

impl SubwordTerm {
    /// `(s2,-,s3,-,-,-)`.
    pub fn label(&self) -> String {
        let parts: Vec<String> =
            self.positions.iter().map(|p| p.map_or_else(|| "-".to_string(), |i| format!("s{i}"))).collect();
        format!("({})", parts.join(","))
    }
}

fn check_inputs(subset: &ParabolicSubset, u: &WeylElement) -> Result<()> {
    subset.require_maximal()?;
    if !subset.is_minimal_left(u) {
        return Err(Error::NotMinimalRepresentative(format!("{u}")));
    }
    Ok(())
}

/// `b-hat'^h_{w,I_u}`: the coefficient of `X_{I_u}` in `R_{I_w}`.
pub fn billey_coefficient(rewriter: &Rewriter, w: &WeylElement, u: &WeylElement, subset: &ParabolicSubset) -> Result<FieldElement> {
    check_inputs(subset, u)?;
    let word = ReducedWord::new(w.rank(), rewriter.chosen_word(w))?;
    Ok(rewriter.root_polynomial(&word).coefficient(u))
}

/// `mu_u b-hat'^h_{w,I_u}`.
pub fn restriction(rewriter: &Rewriter, u: &WeylElement, w: &WeylElement, subset: &ParabolicSubset) -> Result<FieldElement> {
    Ok(mu_w(u).mul(&billey_coefficient(rewriter, w, u, subset)?))
}
