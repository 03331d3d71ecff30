//! The worked A_4 root-polynomial example, diffed against `data/a4_billey.json`.

use serde::{Deserialize, Serialize};

use crate::billey::{billey_coefficient, restriction, Rewriter};
use crate::error::{Error, Result};
use crate::field::{embed_hyperbolic_chern, mu_pow, FieldElement, LatticeVector};
use crate::hyperbolic::mu_w;
use crate::weyl::{ParabolicSubset, ReducedWord, WeylElement, WeylGroup};

const GOLDEN: &str = include_str!("../data/a4_billey.json");

#[derive(Clone, Debug, Deserialize)]
pub struct GoldenTerm {
    pub subword: String,
    pub sign: i8,
    pub mu_power: i32,
    pub roots: Vec<Vec<i16>>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct GoldenExample {
    pub rank: usize,
    pub subset: Vec<usize>,
    pub w: Vec<u8>,
    pub u: Vec<u8>,
    pub terms: Vec<GoldenTerm>,
}

impl GoldenTerm {
    /// `sign * mu^{mu_power} * prod x^h_beta`.
    pub fn value(&self) -> FieldElement {
        let base = mu_pow(self.mu_power).scale_int(self.sign as i128);
        self.roots.iter().fold(base, |acc, r| acc.mul(&embed_hyperbolic_chern(LatticeVector::from_slice(r))))
    }

    /// Factored form, e.g. `mu^-2 x_2 x_{1+2}`.
    pub fn notation(&self) -> String {
        let mut parts = Vec::new();
        if self.mu_power != 0 {
            parts.push(format!("mu^{}", self.mu_power));
        }
        for r in &self.roots {
            let idx: Vec<String> = r.iter().enumerate().filter(|(_, &c)| c != 0).map(|(k, _)| (k + 1).to_string()).collect();
            parts.push(if idx.len() == 1 { format!("x_{}", idx[0]) } else { format!("x_{{{}}}", idx.join("+")) });
        }
        let body = parts.join(" ");
        if self.sign < 0 {
            format!("-{body}")
        } else {
            body
        }
    }
}

pub fn golden() -> GoldenExample {
    serde_json::from_str(GOLDEN).expect("embedded golden file parses")
}

#[derive(Clone, Debug, Serialize)]
pub struct TermRow {
    pub subword: String,
    /// Factored golden value, if the subword is in the golden table.
    pub expected: Option<String>,
    pub matches: bool,
    /// Full computed value, only reported on a mismatch.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub computed: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Reproduction {
    pub w: String,
    pub u: String,
    pub subset: String,
    pub rows: Vec<TermRow>,
    /// Sum of the computed terms equals the root-polynomial coefficient.
    pub sum_matches_coefficient: bool,
    /// `restriction(u, w, J) = mu^{l(u)} * sum`.
    pub restriction_matches: bool,
    pub sum: String,
}

impl Reproduction {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.matches) && self.sum_matches_coefficient && self.restriction_matches
    }
}

pub fn reproduce() -> Result<Reproduction> {
    let g = golden();
    let rank = g.rank;
    let group = WeylGroup::new(rank)?;
    let subset = ParabolicSubset::new(rank, &g.subset)?;
    let w = WeylElement::from_word(rank, &g.w)?;
    let u = WeylElement::from_word(rank, &g.u)?;
    let rw = Rewriter::for_subset(&group, &subset);
    if rw.chosen_word(&w) != g.w.as_slice() {
        return Err(Error::Parse(format!("chosen word for {w} differs from the example word")));
    }
    let terms = rw.subword_contributions(&ReducedWord::new(rank, &g.w)?, &u);

    let mut rows = Vec::new();
    for t in &terms {
        let label = t.label();
        let expected = g.terms.iter().find(|e| e.subword == label);
        let matches = expected.is_some_and(|e| e.value() == t.value);
        rows.push(TermRow {
            subword: label,
            expected: expected.map(GoldenTerm::notation),
            matches,
            computed: (!matches).then(|| t.value.render(rank)),
        });
    }
    for e in &g.terms {
        if !terms.iter().any(|t| t.label() == e.subword) {
            rows.push(TermRow { subword: e.subword.clone(), expected: Some(e.notation()), matches: false, computed: None });
        }
    }
    // table order
    rows.sort_by_key(|r| g.terms.iter().position(|e| e.subword == r.subword).unwrap_or(usize::MAX));

    let sum = FieldElement::sum(terms.iter().map(|t| t.value.clone()));
    let coeff = billey_coefficient(&rw, &w, &u, &subset)?;
    let res = restriction(&rw, &u, &w, &subset)?;
    Ok(Reproduction {
        w: word_label(&g.w),
        u: word_label(&g.u),
        subset: format!("{subset}"),
        rows,
        sum_matches_coefficient: sum == coeff,
        restriction_matches: res == mu_w(&u).mul(&sum),
        sum: sum.render(rank),
    })
}

fn word_label(word: &[u8]) -> String {
    word.iter().map(|i| format!("s{i}")).collect()
}
