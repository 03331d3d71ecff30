//! Seeded random inputs for identity checks.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::field::{chern_mult, FieldElement, LatticeVector, Mono, Scalar, Theory};
use crate::hecke::{HeckeContext, TwistedElement};
use crate::localization::DualClass;
use crate::weyl::{ParabolicSubset, WeylElement};

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_lattice(rng: &mut ChaCha8Rng, rank: usize) -> LatticeVector {
    let coords: Vec<i16> = (0..rank).map(|_| rng.gen_range(-1..=1)).collect();
    LatticeVector::from_slice(&coords)
}

/// A small Laurent polynomial in `t` and `e^lambda`, divided by one
/// `x_alpha` half of the time.
pub fn random_field(rng: &mut ChaCha8Rng, rank: usize) -> FieldElement {
    let terms = rng.gen_range(1..=3);
    let mut out = FieldElement::zero();
    for _ in 0..terms {
        let mut c: i128 = rng.gen_range(-3..=3);
        if c == 0 {
            c = 1;
        }
        let m = Mono::exp(random_lattice(rng, rank)).mul(&Mono::t_pow(rng.gen_range(-2..=2)));
        out = out.add(&FieldElement::monomial(m, c));
    }
    if out.is_zero() {
        out = FieldElement::one();
    }
    if rng.gen_bool(0.5) {
        let roots = ParabolicSubset::full(rank).positive_roots();
        let alpha = *roots.choose(rng).unwrap();
        out = out.div(&chern_mult(alpha)).expect("x_alpha is nonzero");
    }
    out
}

pub fn random_nonzero_field(rng: &mut ChaCha8Rng, rank: usize) -> FieldElement {
    loop {
        let x = random_field(rng, rank);
        if !x.is_zero() {
            return x;
        }
    }
}

pub fn random_element(rng: &mut ChaCha8Rng, elements: &[WeylElement]) -> WeylElement {
    *elements.choose(rng).unwrap()
}

/// `sum a_w delta_w` over a few random `w`.
pub fn random_twisted<S: Scalar>(h: &HeckeContext<S>, rng: &mut ChaCha8Rng, terms: usize) -> TwistedElement<S> {
    let pieces: Vec<(WeylElement, S)> = (0..terms)
        .map(|_| (random_element(rng, h.elements()), h.lift(&random_field(rng, h.rank()))))
        .collect();
    TwistedElement::combine(h.rank(), pieces, h.ctx())
}

/// A class with random values at a few fixed points.
pub fn random_class<S: Scalar>(h: &HeckeContext<S>, rng: &mut ChaCha8Rng, theory: Theory, support: usize) -> DualClass<S> {
    let chosen: Vec<WeylElement> = (0..support).map(|_| random_element(rng, h.elements())).collect();
    let values: Vec<FieldElement> = chosen.iter().map(|_| random_field(rng, h.rank())).collect();
    DualClass::from_fn(h, theory, |w| {
        let parts: Vec<S> = chosen.iter().zip(&values).filter(|(v, _)| *v == w).map(|(_, a)| h.lift(a)).collect();
        S::sum(h.ctx(), parts)
    })
}

/// `count` random pairs, or all pairs when there are at most that many.
pub fn pairs(
    rng: &mut ChaCha8Rng,
    left: &[WeylElement],
    right: &[WeylElement],
    count: usize,
) -> Vec<(WeylElement, WeylElement)> {
    if left.len() * right.len() <= count {
        return left.iter().flat_map(|w| right.iter().map(move |u| (*w, *u))).collect();
    }
    (0..count).map(|_| (random_element(rng, left), random_element(rng, right))).collect()
}
