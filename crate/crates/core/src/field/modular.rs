//! Probabilistic scalars: a rational function is represented by its values
//! modulo a large prime at the Weyl orbit of one random point, which is
//! closed under the Weyl action. Distinct rational functions of bounded
//! degree collide with negligible probability.

use std::collections::HashMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::weyl::{WeylElement, WeylGroup};

use super::element::FieldElement;
use super::lattice::{LatticeVector, MAX_RANK};
use super::modp;
use super::scalar::Scalar;

/// The evaluation frame shared by all [`ModScalar`]s of one computation.
#[derive(Debug)]
pub struct ModFrame {
    rank: usize,
    elements: Vec<WeylElement>,
    index: HashMap<WeylElement, usize>,
    t: u64,
    /// `points[k][i]` is the value of `e^{alpha_i}` seen by `w_k(f)`.
    points: Vec<[u64; MAX_RANK]>,
    /// `right[k][j] = index(w_k w_j)`.
    right: Vec<Vec<u32>>,
}

impl ModFrame {
    pub fn new(rank: usize, seed: u64) -> Result<Arc<Self>> {
        let group = WeylGroup::new(rank)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut draw = || rng.gen_range(2..modp::MODULUS - 1);
        let t = draw();
        let mut base = [1u64; MAX_RANK];
        for b in base.iter_mut().take(rank) {
            *b = draw();
        }
        let elements = group.elements().to_vec();
        let index: HashMap<WeylElement, usize> = elements.iter().enumerate().map(|(k, w)| (*w, k)).collect();
        let points = elements
            .iter()
            .map(|w| {
                let mut p = [1u64; MAX_RANK];
                for (i, slot) in p.iter_mut().enumerate().take(rank) {
                    let image = w.act_lattice(&LatticeVector::simple(i + 1));
                    let mut v = 1;
                    for (j, &c) in image.0.iter().enumerate().take(rank) {
                        v = modp::mul(v, modp::pow_signed(base[j], c as i64).expect("nonzero base point"));
                    }
                    *slot = v;
                }
                p
            })
            .collect();
        let right = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&a.compose(b)] as u32).collect())
            .collect();
        Ok(Arc::new(ModFrame { rank, elements, index, t, points, right }))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    fn len(&self) -> usize {
        self.elements.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModScalar {
    vals: Vec<u64>,
}

impl ModScalar {
    pub fn values(&self) -> &[u64] {
        &self.vals
    }

    fn constant(frame: &ModFrame, v: u64) -> Self {
        ModScalar { vals: vec![v; frame.len()] }
    }

    fn zip(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        ModScalar { vals: self.vals.iter().zip(&other.vals).map(|(&a, &b)| f(a, b)).collect() }
    }
}

impl Scalar for ModScalar {
    type Ctx = Arc<ModFrame>;

    fn lift(ctx: &Arc<ModFrame>, x: &FieldElement) -> Self {
        let vals = ctx
            .points
            .iter()
            .map(|p| x.eval_mod(ctx.t, p).expect("evaluation point avoids every denominator"))
            .collect();
        ModScalar { vals }
    }
    fn zero(ctx: &Arc<ModFrame>) -> Self {
        Self::constant(ctx, 0)
    }
    fn one(ctx: &Arc<ModFrame>) -> Self {
        Self::constant(ctx, 1)
    }
    fn is_zero(&self) -> bool {
        self.vals.iter().all(|&v| v == 0)
    }
    fn add(&self, other: &Self) -> Self {
        self.zip(other, modp::add)
    }
    fn sub(&self, other: &Self) -> Self {
        self.zip(other, modp::sub)
    }
    fn mul(&self, other: &Self) -> Self {
        self.zip(other, modp::mul)
    }
    fn neg(&self) -> Self {
        ModScalar { vals: self.vals.iter().map(|&v| modp::sub(0, v)).collect() }
    }
    fn inv(&self) -> Result<Self> {
        let vals = self.vals.iter().map(|&v| modp::inv(v).ok_or(Error::DivisionByZero)).collect::<Result<_>>()?;
        Ok(ModScalar { vals })
    }
    fn act(&self, ctx: &Arc<ModFrame>, w: &WeylElement) -> Self {
        if w.is_identity() {
            return self.clone();
        }
        let j = ctx.index[w];
        ModScalar { vals: (0..ctx.len()).map(|k| self.vals[ctx.right[k][j] as usize]).collect() }
    }
    fn render(&self, _rank: usize) -> String {
        format!("<mod value {}>", self.vals.first().copied().unwrap_or(0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn action_matches_exact_action() {
        let frame = ModFrame::new(2, 7).unwrap();
        let x = FieldElement::one().sub(&FieldElement::exp(-LatticeVector::simple(1)));
        let y = FieldElement::t().add(&FieldElement::exp(LatticeVector::simple(2)));
        let f = x.div(&y).unwrap();
        for w in WeylGroup::new(2).unwrap().elements() {
            let exact = ModScalar::lift(&frame, &Scalar::act(&f, &(), w));
            let fast = ModScalar::lift(&frame, &f).act(&frame, w);
            assert_eq!(exact, fast);
        }
    }
}
