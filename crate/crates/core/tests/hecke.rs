use klschubert::field::{chern_mult, mu, FieldElement, LatticeVector, Scalar, ScalarT, Theory};
use klschubert::hecke::{BasisTag, HeckeContext, HeckeElement, PushPullMode, Sign, TwistedElement};
use klschubert::sample;
use klschubert::weyl::{bruhat_leq, ParabolicSubset, WeylElement};

fn exact(rank: usize) -> HeckeContext<FieldElement> {
    HeckeContext::exact(rank).unwrap()
}

#[test]
fn twisted_product_follows_the_defining_rule() {
    let h = exact(3);
    let mut rng = sample::rng(3);
    for _ in 0..20 {
        let (w, v) = (sample::random_element(&mut rng, h.elements()), sample::random_element(&mut rng, h.elements()));
        let (a, b) = (sample::random_field(&mut rng, 3), sample::random_field(&mut rng, 3));
        let lhs = h.mul(&TwistedElement::from_terms(3, [(w, a.clone())]), &TwistedElement::from_terms(3, [(v, b.clone())]));
        let rhs = TwistedElement::from_terms(3, [(w.compose(&v), a.mul(&b.act(&(), &w)))]);
        assert!(h.sub(&lhs, &rhs).is_zero());
    }
}

#[test]
fn tau_is_independent_of_reduced_word() {
    let h = exact(3);
    for w in h.elements() {
        let target = h.tau(w);
        for word in w.reduced_words() {
            let factors: Vec<TwistedElement<FieldElement>> = word.iter().map(|&i| h.tau_simple(i as usize)).collect();
            let refs: Vec<&TwistedElement<FieldElement>> = factors.iter().collect();
            let prod = if refs.is_empty() { h.one() } else { h.product(&refs) };
            assert!(h.sub(&prod, &target).is_zero(), "w={w} word={word:?}");
        }
    }
}

#[test]
fn tau_squares_by_the_quadratic_relation() {
    let h = exact(2);
    let q = h.scalar(&ScalarT::quadratic_coeff().to_field());
    for i in 1..=2 {
        let t = h.tau_simple(i);
        assert!(h.sub(&h.mul(&t, &t), &h.add(&h.mul(&q, &t), &h.one())).is_zero());
    }
}

#[test]
fn simple_kl_elements_are_quasi_idempotent() {
    let h = exact(2);
    let m = h.scalar(&mu());
    for i in 1..=2 {
        let gp = h.gamma_simple(i, Sign::Plus);
        let gm = h.gamma_simple(i, Sign::Minus);
        assert!(h.sub(&h.mul(&gp, &gp), &h.mul(&m, &gp)).is_zero());
        assert!(h.add(&h.mul(&gm, &gm), &h.mul(&m, &gm)).is_zero());
    }
}

#[test]
fn kl_basis_matches_abstract_hecke_algebra() {
    for n in 1..=3 {
        let h = exact(n);
        for w in h.elements() {
            for sign in [Sign::Plus, Sign::Minus] {
                let abstract_elt = HeckeElement::kl_basis(h.kl(), w, sign);
                assert!(h.sub(&h.from_hecke(&abstract_elt), &h.gamma(w, sign)).is_zero());
                assert!(abstract_elt.terms().keys().all(|v| bruhat_leq(v, w)));
                assert_eq!(abstract_elt.coeff(w), ScalarT::one());
            }
        }
    }
}

#[test]
fn to_hecke_inverts_from_hecke() {
    let h = exact(2);
    for w in h.elements() {
        let abstract_elt = HeckeElement::kl_basis(h.kl(), w, Sign::Minus);
        assert_eq!(h.to_hecke(&h.from_hecke(&abstract_elt)).unwrap(), abstract_elt);
    }
    let outside = h.scalar(&FieldElement::one().div(&chern_mult(LatticeVector::simple(1))).unwrap());
    assert!(h.to_hecke(&outside).is_err());
    assert!(h.anti_involution_i(&outside).is_err());
}

#[test]
fn expansion_round_trips_on_random_elements() {
    let h = exact(2);
    let mut rng = sample::rng(11);
    for _ in 0..10 {
        let z = sample::random_twisted(&h, &mut rng, 3);
        for tag in [BasisTag::Tau, BasisTag::GammaPlus, BasisTag::GammaMinus] {
            let exp = h.expand(&z, tag, None);
            assert!(h.sub(&h.recombine(&exp, None), &z).is_zero());
        }
    }
}

#[test]
fn push_pull_elements() {
    let h = exact(3);
    for theory in [Theory::Multiplicative, Theory::Hyperbolic] {
        let full = ParabolicSubset::full(3);
        let y = h.push_pull(&full, PushPullMode::Full, theory);
        assert_eq!(y.support().count(), 24);
        // Y_Pi absorbs every delta_w from the left
        for w in h.elements() {
            assert!(h.sub(&h.mul(&h.delta(w), &y), &y).is_zero());
        }
        let j = ParabolicSubset::new(3, &[1, 2]).unwrap();
        let yj = h.push_pull(&j, PushPullMode::Full, theory);
        assert_eq!(yj.support().count(), 6);
        assert!(h.sub(&h.mul(&h.push_pull(&j, PushPullMode::Relative, theory), &yj), &y).is_zero());
    }
}

#[test]
fn gamma_hat_is_the_product_of_simple_gammas() {
    let h = exact(3);
    let word = [2u8, 1, 3, 2];
    let factors: Vec<TwistedElement<FieldElement>> = word.iter().map(|&i| h.gamma_simple(i as usize, Sign::Minus)).collect();
    let refs: Vec<&TwistedElement<FieldElement>> = factors.iter().collect();
    assert!(h.sub(&h.product(&refs), &h.gamma_hat(&word, Sign::Minus)).is_zero());
}

#[test]
fn klcom_in_rank_one() {
    let h = exact(1);
    let (e, s) = (WeylElement::identity(1), WeylElement::simple(1, 1));
    let a = h.a_w0();
    // a_{w0} = (t - t^-1 e^{-a}) / (1 - e^{-a})
    let alpha = LatticeVector::simple(1);
    let expected = FieldElement::t()
        .sub(&FieldElement::t_pow(-1).mul(&FieldElement::exp(-alpha)))
        .div(&chern_mult(alpha))
        .unwrap();
    assert_eq!(a, expected);
    assert_eq!(h.klcom_value(&e, &e), a);
    assert_eq!(h.klcom_value(&s, &s), a);
    assert!(h.klcom_value(&e, &s).is_zero());
    assert!(h.klcom_value(&s, &e).is_zero());
}

#[test]
fn modular_and_exact_products_agree() {
    let exact_ctx = exact(2);
    let modular = HeckeContext::modular(2, 5).unwrap();
    for w in exact_ctx.elements() {
        for v in exact_ctx.elements() {
            let z = exact_ctx.mul(&exact_ctx.gamma(w, Sign::Plus), &exact_ctx.gamma(v, Sign::Minus));
            let zm = modular.mul(&modular.gamma(w, Sign::Plus), &modular.gamma(v, Sign::Minus));
            for x in exact_ctx.elements() {
                let lifted = modular.lift(&z.coefficient_at(x, &()));
                assert!(lifted.equals(&zm.coefficient_at(x, modular.ctx())));
            }
        }
    }
}
