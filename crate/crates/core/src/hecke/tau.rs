use std::collections::BTreeMap;

use crate::field::ScalarT;
use crate::klpoly::KLTable;
use crate::weyl::WeylElement;

/// Element of the Hecke algebra in the basis `tau_w`, coefficients in
/// `Z[t, t^-1]`. Multiplication uses `tau_w tau_s = tau_{ws}` when
/// `ws > w` and `(t^-1 - t) tau_w + tau_{ws}` otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement {
    rank: usize,
    terms: BTreeMap<WeylElement, ScalarT>,
}

/// Which of the two Kazhdan–Lusztig bases.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn symbol(&self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

impl std::str::FromStr for Sign {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "+" | "plus" | "p" => Ok(Sign::Plus),
            "-" | "minus" | "m" => Ok(Sign::Minus),
            _ => Err(crate::Error::Parse(format!("unknown sign {s:?} (expected + or -)"))),
        }
    }
}

impl HeckeElement {
    pub fn zero(rank: usize) -> Self {
        HeckeElement { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::tau(WeylElement::identity(rank))
    }

    pub fn tau(w: WeylElement) -> Self {
        Self::monomial(w, ScalarT::one())
    }

    pub fn monomial(w: WeylElement, c: ScalarT) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        HeckeElement { rank: w.rank(), terms }
    }

    pub fn from_terms(rank: usize, pairs: impl IntoIterator<Item = (WeylElement, ScalarT)>) -> Self {
        let mut out = Self::zero(rank);
        for (w, c) in pairs {
            out.add_term(w, &c);
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &BTreeMap<WeylElement, ScalarT> {
        &self.terms
    }

    pub fn coeff(&self, w: &WeylElement) -> ScalarT {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, w: WeylElement, c: &ScalarT) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w).or_default();
        *entry = entry.add(c);
        if entry.is_zero() {
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

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&ScalarT::from_pairs(&[(0, -1)])))
    }

    pub fn scale(&self, c: &ScalarT) -> Self {
        Self::from_terms(self.rank, self.terms.iter().map(|(w, a)| (*w, a.mul(c))))
    }

    pub fn mul_simple_right(&self, i: usize) -> Self {
        let q = ScalarT::quadratic_coeff();
        let mut out = Self::zero(self.rank);
        for (w, c) in &self.terms {
            let ws = w.mul_simple_right(i);
            if w.has_right_descent(i) {
                out.add_term(*w, &c.mul(&q));
            }
            out.add_term(ws, c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.rank);
        for (v, c) in &other.terms {
            let mut part = self.clone();
            for &i in &v.canonical_word() {
                part = part.mul_simple_right(i as usize);
            }
            out = out.add(&part.scale(c));
        }
        out
    }

    /// The anti-involution `i`: `tau_w -> tau_{w^-1}`, `t -> t`.
    pub fn anti_involution(&self) -> Self {
        Self::from_terms(self.rank, self.terms.iter().map(|(w, c)| (w.inverse(), c.clone())))
    }

    /// `gamma^+_v = sum_w t^{l(v)-l(w)} P_{w,v}(t^-2) tau_w` and
    /// `gamma^-_v = sum_w e_w e_v t^{l(w)-l(v)} P_{w,v}(t^2) tau_w`.
    pub fn kl_basis(kl: &KLTable, v: &WeylElement, sign: Sign) -> Self {
        let lv = v.length() as i32;
        let mut out = Self::zero(v.rank());
        for w in kl.group().elements() {
            let p = kl.get(w, v);
            if p.is_zero() {
                continue;
            }
            let lw = w.length() as i32;
            let c = match sign {
                Sign::Plus => p.at_t_power(-2).shift(lv - lw),
                Sign::Minus => p.at_t_power(2).shift(lw - lv).scale((w.sign() * v.sign()) as i128),
            };
            out.add_term(*w, &c);
        }
        out
    }

    /// Coefficients in the basis `{gamma^-_v}` (unitriangular change of
    /// basis, so the result stays in `Z[t, t^-1]`).
    pub fn to_gamma_minus(&self, kl: &KLTable) -> BTreeMap<WeylElement, ScalarT> {
        let mut rest = self.clone();
        let mut out = BTreeMap::new();
        while let Some(v) = rest.terms.keys().max_by_key(|w| (w.length(), **w)).copied() {
            let c = rest.coeff(&v);
            rest = rest.sub(&Self::kl_basis(kl, &v, Sign::Minus).scale(&c));
            out.insert(v, c);
        }
        out
    }

    pub fn from_gamma_minus(kl: &KLTable, rank: usize, coeffs: &BTreeMap<WeylElement, ScalarT>) -> Self {
        coeffs
            .iter()
            .fold(Self::zero(rank), |acc, (v, c)| acc.add(&Self::kl_basis(kl, v, Sign::Minus).scale(c)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_relation() {
        let s = WeylElement::simple(2, 1);
        let tau = HeckeElement::tau(s);
        let expected = HeckeElement::from_terms(2, [(s, ScalarT::quadratic_coeff()), (WeylElement::identity(2), ScalarT::one())]);
        assert_eq!(tau.mul(&tau), expected);
    }

    #[test]
    fn gamma_minus_roundtrip() {
        let kl = KLTable::for_rank(3).unwrap();
        let w = WeylElement::from_word(3, &[2, 1, 3, 2]).unwrap();
        let h = HeckeElement::tau(w).add(&HeckeElement::one(3).scale(&ScalarT::mu()));
        let g = h.to_gamma_minus(&kl);
        assert_eq!(HeckeElement::from_gamma_minus(&kl, 3, &g), h);
    }
}
