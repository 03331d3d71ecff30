use klschubert::field::{embed_hyperbolic_chern, mu_pow, FieldElement, LatticeVector, Theory};
use klschubert::hecke::HeckeContext;
use klschubert::hyperbolic::{divided_difference, mu_w, x_word, ClassVariant, HyperbolicLayer, OperatorKind};
use klschubert::localization::{is_invariant, DualClass};
use klschubert::weyl::{ParabolicSubset, WeylElement};

fn exact(rank: usize) -> HeckeContext<FieldElement> {
    HeckeContext::exact(rank).unwrap()
}

#[test]
fn rank_one_classes() {
    let h = exact(1);
    let layer = HyperbolicLayer::new(&h);
    let (e, s) = (WeylElement::identity(1), WeylElement::simple(1, 1));
    let x = embed_hyperbolic_chern(LatticeVector::simple(1));
    let xm = embed_hyperbolic_chern(-LatticeVector::simple(1));
    assert!(layer.c(&e).equals(&DualClass::point(&h, Theory::Hyperbolic, &e)));
    // x_Pi is a product over the negative roots
    assert_eq!(*layer.point(&e).at(&h, &e), xm);
    assert_eq!(*layer.point(&s).at(&h, &s), x);
    // C~_{w0} is the point class at w0, C~_e is the unit
    assert!(layer.c_tilde(&s).equals(&layer.point(&s)));
    assert!(layer.c_tilde(&e).equals(&DualClass::unit(&h, Theory::Hyperbolic)));
}

#[test]
fn divided_differences_satisfy_their_relations() {
    let h = exact(3);
    let minus_one = h.scalar(&FieldElement::integer(-1));
    let mu_inv2 = h.scalar(&mu_pow(-2));
    for i in 1..=3 {
        let x = divided_difference(&h, i, OperatorKind::X);
        assert!(h.sub(&h.mul(&x, &x), &h.mul(&minus_one, &x)).is_zero());
        let y = divided_difference(&h, i, OperatorKind::Y);
        assert!(h.sub(&y, &h.add(&h.one(), &x)).is_zero());
    }
    for (i, j) in [(1u8, 2u8), (2, 1), (2, 3), (3, 2)] {
        let lhs = x_word(&h, &[j, i, j]);
        let rhs = h.add(&x_word(&h, &[i, j, i]), &h.mul(&mu_inv2, &h.sub(&x_word(&h, &[j]), &x_word(&h, &[i]))));
        assert!(h.sub(&lhs, &rhs).is_zero(), "i={i} j={j}");
    }
    assert!(h.sub(&x_word(&h, &[1, 3]), &x_word(&h, &[3, 1])).is_zero());
}

#[test]
fn full_duality_in_rank_two() {
    let h = exact(2);
    let layer = HyperbolicLayer::new(&h);
    assert!(layer.check_full_duality().is_empty());
    assert!(layer.check_dual_basis().is_empty());
    assert!(layer.check_corollary_dual(h.elements()).is_empty());
}

#[test]
fn parabolic_duality() {
    for (rank, members) in [(2, vec![1]), (2, vec![2]), (3, vec![1, 2]), (3, vec![1, 3])] {
        let h = exact(rank);
        let layer = HyperbolicLayer::new(&h);
        let j = ParabolicSubset::new(rank, &members).unwrap();
        assert!(layer.check_parabolic_duality(&j).unwrap().is_empty(), "J={j}");
        assert!(layer.check_gamma_plus_longest(&j));
        for u in h.elements().iter().filter(|u| j.is_minimal_left(u)) {
            assert!(is_invariant(&h, &layer.c_j(u, &j).unwrap(), &j));
        }
    }
}

#[test]
fn dual_basis_rescales_to_opposite_classes() {
    let h = exact(3);
    let layer = HyperbolicLayer::new(&h);
    for w in h.elements() {
        let dual = layer.class(w, ClassVariant::DualBasis, None).unwrap().class;
        assert!(dual.scale(&mu_w(w)).equals(&layer.c_tilde(w)), "w={w}");
    }
}

#[test]
fn b_inverts_a() {
    let h = exact(2);
    let layer = HyperbolicLayer::new(&h);
    for w in h.elements() {
        for v in h.elements() {
            let sum = h.elements().iter().fold(FieldElement::zero(), |acc, u| acc.add(&layer.b(w, u).mul(&layer.a(u, v))));
            let expected = if w == v { FieldElement::one() } else { FieldElement::zero() };
            assert_eq!(sum, expected, "w={w} v={v}");
        }
    }
}

#[test]
fn parabolic_variants_need_minimal_representatives() {
    let h = exact(2);
    let layer = HyperbolicLayer::new(&h);
    let j = ParabolicSubset::new(2, &[1]).unwrap();
    let s1 = WeylElement::simple(2, 1);
    assert!(layer.c_j(&s1, &j).is_err());
    assert!(layer.class(&s1, ClassVariant::CTildeJ, Some(&j)).is_err());
    assert!(layer.class(&s1, ClassVariant::CJ, None).is_err());
    assert!(layer.class_restriction(&s1, &s1, &j).is_err());
}
