use proptest::prelude::*;

use klschubert::field::{
    chern_mult, embed_hyperbolic_chern, fgl_hyperbolic, fgl_mult, hyperbolic_to_mult, mu, FieldElement, LatticeVector, ModFrame,
    ModScalar, Scalar,
};
use klschubert::sample;
use klschubert::weyl::WeylElement;

const RANK: usize = 3;

fn field(seed: u64) -> FieldElement {
    sample::random_field(&mut sample::rng(seed), RANK)
}

fn element(word: &[u8]) -> WeylElement {
    WeylElement::from_word(RANK, word).unwrap()
}

fn root(coords: &[i16]) -> LatticeVector {
    LatticeVector::from_slice(coords)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let (x, y, z) = (field(a), field(b), field(c));
        prop_assert_eq!(x.add(&y), y.add(&x));
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        prop_assert!(x.sub(&x).is_zero());
        prop_assert_eq!(x.mul(&FieldElement::one()), x.clone());
    }

    #[test]
    fn division_inverts_multiplication(a in any::<u64>(), b in any::<u64>()) {
        let (x, y) = (field(a), field(b));
        prop_assume!(!y.is_zero());
        let q = x.div(&y).unwrap();
        prop_assert_eq!(q.mul(&y), x);
        prop_assert!(y.inv().unwrap().mul(&y).is_one());
    }

    #[test]
    fn weyl_action_is_a_ring_automorphism(a in any::<u64>(), b in any::<u64>(), w in prop::collection::vec(1u8..=3, 0..6), v in prop::collection::vec(1u8..=3, 0..6)) {
        let (x, y) = (field(a), field(b));
        let (w, v) = (element(&w), element(&v));
        prop_assert_eq!(x.mul(&y).act(&(), &w), x.act(&(), &w).mul(&y.act(&(), &w)));
        prop_assert_eq!(x.add(&y).act(&(), &w), x.act(&(), &w).add(&y.act(&(), &w)));
        prop_assert_eq!(x.act(&(), &v.compose(&w)), x.act(&(), &w).act(&(), &v));
    }

    #[test]
    fn json_round_trip(a in any::<u64>()) {
        let x = field(a);
        let back = FieldElement::from_json(&x.to_json(RANK)).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn modular_lift_is_a_homomorphism(a in any::<u64>(), b in any::<u64>(), w in prop::collection::vec(1u8..=3, 0..6)) {
        let frame = ModFrame::new(RANK, 17).unwrap();
        let (x, y) = (field(a), field(b));
        let w = element(&w);
        let lift = |f: &FieldElement| ModScalar::lift(&frame, f);
        prop_assert_eq!(lift(&x.add(&y)), lift(&x).add(&lift(&y)));
        prop_assert_eq!(lift(&x.mul(&y)), lift(&x).mul(&lift(&y)));
        prop_assert_eq!(lift(&x.act(&(), &w)), lift(&x).act(&frame, &w));
        prop_assert_eq!(lift(&x).is_zero(), x.is_zero());
    }
}

#[test]
fn equality_is_semantic() {
    let a = chern_mult(LatticeVector::simple(1));
    let b = chern_mult(LatticeVector::simple(2));
    let left = a.mul(&b).div(&b).unwrap();
    assert_eq!(left, a);
    // 1 - e^{-2a} = (1 - e^{-a})(1 + e^{-a})
    let twice = chern_mult(root(&[2, 0, 0]));
    let one_plus = FieldElement::one().add(&FieldElement::exp(-LatticeVector::simple(1)));
    assert_eq!(twice, a.mul(&one_plus));
    assert_ne!(twice, a);
}

#[test]
fn formal_group_laws() {
    let roots: Vec<LatticeVector> = vec![root(&[1, 0, 0]), root(&[0, 1, 0]), root(&[1, 1, 0]), root(&[0, -1, 1]), root(&[2, 1, 1])];
    for a in &roots {
        for b in &roots {
            assert_eq!(fgl_mult(&chern_mult(*a), &chern_mult(*b)), chern_mult(*a + *b));
            let xh = fgl_hyperbolic(&embed_hyperbolic_chern(*a), &embed_hyperbolic_chern(*b));
            assert_eq!(xh, embed_hyperbolic_chern(*a + *b));
        }
        assert!(fgl_mult(&chern_mult(*a), &chern_mult(-*a)).is_zero());
    }
}

#[test]
fn hyperbolic_chern_class_closed_form() {
    // x^h = (t^2 + 1)(1 - e^{-a}) / (t^2 - e^{-a})
    let a = root(&[0, 1, 1]);
    let t2 = FieldElement::t_pow(2);
    let em = FieldElement::exp(-a);
    let expected = t2.add(&FieldElement::one()).mul(&FieldElement::one().sub(&em)).div(&t2.sub(&em)).unwrap();
    assert_eq!(embed_hyperbolic_chern(a), expected);
    assert_eq!(hyperbolic_to_mult(&embed_hyperbolic_chern(a)).unwrap(), chern_mult(a));
}

#[test]
fn mu_is_t_plus_t_inverse() {
    assert_eq!(mu(), FieldElement::t().add(&FieldElement::t_pow(-1)));
}

#[test]
fn simple_reflection_sends_x_alpha_to_x_minus_alpha() {
    let s = WeylElement::simple(RANK, 2);
    let a = LatticeVector::simple(2);
    assert_eq!(chern_mult(a).act(&(), &s), chern_mult(-a));
    assert_eq!(embed_hyperbolic_chern(a).act(&(), &s), embed_hyperbolic_chern(-a));
}

#[test]
fn division_by_zero_is_an_error() {
    assert!(FieldElement::one().div(&FieldElement::zero()).is_err());
    assert!(FieldElement::zero().inv().is_err());
}
