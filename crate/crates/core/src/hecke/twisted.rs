use std::collections::BTreeMap;

use crate::field::Scalar;
use crate::weyl::WeylElement;

/// `sum_w c_w delta_w` with `(a delta_w)(b delta_v) = a w(b) delta_{wv}`.
#[derive(Clone, Debug)]
pub struct TwistedElement<S> {
    rank: usize,
    terms: BTreeMap<WeylElement, S>,
}

impl<S: Scalar> TwistedElement<S> {
    pub fn zero(rank: usize) -> Self {
        TwistedElement { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize, ctx: &S::Ctx) -> Self {
        Self::scalar(rank, S::one(ctx))
    }

    /// `a delta_e`.
    pub fn scalar(rank: usize, a: S) -> Self {
        Self::monomial(WeylElement::identity(rank), a)
    }

    pub fn delta(w: WeylElement, ctx: &S::Ctx) -> Self {
        Self::monomial(w, S::one(ctx))
    }

    pub fn monomial(w: WeylElement, a: S) -> Self {
        let mut terms = BTreeMap::new();
        if !a.is_zero() {
            terms.insert(w, a);
        }
        TwistedElement { rank: w.rank(), terms }
    }

    pub fn from_terms(rank: usize, terms: impl IntoIterator<Item = (WeylElement, S)>) -> Self {
        let terms = terms.into_iter().filter(|(_, a)| !a.is_zero()).collect();
        TwistedElement { rank, terms }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &BTreeMap<WeylElement, S> {
        &self.terms
    }

    pub fn coefficient(&self, w: &WeylElement) -> Option<&S> {
        self.terms.get(w)
    }

    /// The `delta_w`-coefficient.
    pub fn coefficient_at(&self, w: &WeylElement, ctx: &S::Ctx) -> S {
        self.terms.get(w).cloned().unwrap_or_else(|| S::zero(ctx))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = &WeylElement> {
        self.terms.keys()
    }

    pub fn add(&self, other: &Self, ctx: &S::Ctx) -> Self {
        Self::combine(self.rank, [self, other].into_iter().flat_map(|z| z.terms.iter().map(|(w, a)| (*w, a.clone()))), ctx)
    }

    pub fn sub(&self, other: &Self, ctx: &S::Ctx) -> Self {
        self.add(&other.neg(), ctx)
    }

    pub fn neg(&self) -> Self {
        TwistedElement { rank: self.rank, terms: self.terms.iter().map(|(w, a)| (*w, a.neg())).collect() }
    }

    /// Sums `sum_k a_k delta_{w_k}`, grouping equal `w`.
    pub fn combine(rank: usize, pieces: impl IntoIterator<Item = (WeylElement, S)>, ctx: &S::Ctx) -> Self {
        let mut grouped: BTreeMap<WeylElement, Vec<S>> = BTreeMap::new();
        for (w, a) in pieces {
            grouped.entry(w).or_default().push(a);
        }
        let terms = grouped
            .into_iter()
            .filter_map(|(w, v)| {
                let s = if v.len() == 1 { v.into_iter().next().unwrap() } else { S::sum(ctx, v) };
                (!s.is_zero()).then_some((w, s))
            })
            .collect();
        TwistedElement { rank, terms }
    }

    pub fn sum(rank: usize, items: &[Self], ctx: &S::Ctx) -> Self {
        Self::combine(rank, items.iter().flat_map(|z| z.terms.iter().map(|(w, a)| (*w, a.clone()))), ctx)
    }

    /// `a z`.
    pub fn scale_left(&self, a: &S) -> Self {
        if a.is_zero() {
            return Self::zero(self.rank);
        }
        Self::from_terms(self.rank, self.terms.iter().map(|(w, c)| (*w, a.mul(c))))
    }

    /// `z a = sum_w c_w w(a) delta_w`.
    pub fn scale_right(&self, a: &S, ctx: &S::Ctx) -> Self {
        if a.is_zero() {
            return Self::zero(self.rank);
        }
        Self::from_terms(self.rank, self.terms.iter().map(|(w, c)| (*w, c.mul(&a.act(ctx, w)))))
    }

    pub fn mul(&self, other: &Self, ctx: &S::Ctx) -> Self {
        let mut pieces = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (w, a) in &self.terms {
            for (v, b) in &other.terms {
                pieces.push((w.compose(v), a.mul(&b.act(ctx, w))));
            }
        }
        Self::combine(self.rank, pieces, ctx)
    }

    /// `(self * other)|_x` without forming the whole product.
    pub fn product_coefficient(&self, other: &Self, x: &WeylElement, ctx: &S::Ctx) -> S {
        let parts: Vec<S> = self
            .terms
            .iter()
            .filter_map(|(w, a)| other.terms.get(&w.inverse().compose(x)).map(|b| a.mul(&b.act(ctx, w))))
            .collect();
        S::sum(ctx, parts)
    }

    pub fn product(rank: usize, factors: &[&Self], ctx: &S::Ctx) -> Self {
        factors.iter().fold(Self::one(rank, ctx), |acc, f| acc.mul(f, ctx))
    }

    pub fn equals(&self, other: &Self) -> bool {
        let keys: std::collections::BTreeSet<&WeylElement> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter().all(|w| match (self.terms.get(w), other.terms.get(w)) {
            (Some(a), Some(b)) => a.equals(b),
            (Some(a), None) | (None, Some(a)) => a.is_zero(),
            (None, None) => true,
        })
    }

    pub fn map_coefficients(&self, f: impl Fn(&WeylElement, &S) -> S) -> Self {
        Self::from_terms(self.rank, self.terms.iter().map(|(w, a)| (*w, f(w, a))))
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(w, a)| format!("[{}] delta_{{{}}}", a.render(self.rank), w))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}
