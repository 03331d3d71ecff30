//! The dual module `(Q_W)^*`: classes as functions on `W` (coefficients of
//! `f_w`), the two actions of `Q_W`, point classes and pushforwards.

use crate::error::{Error, Result};
use crate::field::{FieldElement, Scalar, Theory};
use crate::hecke::{pairing_scalar, HeckeContext, PushPullMode, Sign, TwistedElement};
use crate::linalg;
use crate::weyl::{ParabolicSubset, WeylElement};

/// A class `sum_w c_w f_w`, stored densely in the group's enumeration order.
#[derive(Clone, Debug)]
pub struct DualClass<S> {
    pub theory: Theory,
    coeffs: Vec<S>,
}

impl<S: Scalar> DualClass<S> {
    pub fn from_fn(h: &HeckeContext<S>, theory: Theory, f: impl Fn(&WeylElement) -> S) -> Self {
        DualClass { theory, coeffs: h.elements().iter().map(f).collect() }
    }

    pub fn zero(h: &HeckeContext<S>, theory: Theory) -> Self {
        Self::from_fn(h, theory, |_| h.zero_scalar())
    }

    /// The unit: every coefficient `1`.
    pub fn unit(h: &HeckeContext<S>, theory: Theory) -> Self {
        Self::from_fn(h, theory, |_| h.one_scalar())
    }

    /// `f_w`.
    pub fn fixed_point(h: &HeckeContext<S>, theory: Theory, w: &WeylElement) -> Self {
        Self::from_fn(h, theory, |v| if v == w { h.one_scalar() } else { h.zero_scalar() })
    }

    /// `pt_w = w(x_Pi) f_w`.
    pub fn point(h: &HeckeContext<S>, theory: Theory, w: &WeylElement) -> Self {
        let x = h.act(w, &h.x_pi(theory));
        Self::from_fn(h, theory, |v| if v == w { x.clone() } else { h.zero_scalar() })
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn at(&self, h: &HeckeContext<S>, w: &WeylElement) -> &S {
        &self.coeffs[h.group().index_of(w)]
    }

    pub fn add(&self, other: &Self) -> Self {
        DualClass { theory: self.theory, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        DualClass { theory: self.theory, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.sub(b)).collect() }
    }

    /// Componentwise product: `f_w f_v = delta_{w,v} f_w`.
    pub fn product(&self, other: &Self) -> Self {
        DualClass { theory: self.theory, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.mul(b)).collect() }
    }

    pub fn scale(&self, a: &S) -> Self {
        DualClass { theory: self.theory, coeffs: self.coeffs.iter().map(|c| a.mul(c)).collect() }
    }

    pub fn equals(&self, other: &Self) -> bool {
        self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a.equals(b))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// `Some(c)` if the class is `c` times the unit.
    pub fn as_constant(&self) -> Option<S> {
        let first = self.coeffs.first()?.clone();
        self.coeffs.iter().all(|c| c.equals(&first)).then_some(first)
    }

    pub fn support(&self, h: &HeckeContext<S>) -> Vec<WeylElement> {
        h.elements().iter().zip(&self.coeffs).filter(|(_, c)| !c.is_zero()).map(|(w, _)| *w).collect()
    }
}

/// `a delta_w . b f_v = b (v w^-1)(a) f_{v w^-1}`.
pub fn bullet<S: Scalar>(h: &HeckeContext<S>, z: &TwistedElement<S>, f: &DualClass<S>) -> DualClass<S> {
    let g = h.group();
    let coeffs = h
        .elements()
        .iter()
        .map(|u| {
            let parts: Vec<S> = z
                .terms()
                .iter()
                .filter_map(|(w, a)| {
                    let b = &f.coeffs[g.index_of(&u.compose(w))];
                    (!b.is_zero()).then(|| b.mul(&h.act(u, a)))
                })
                .collect();
            S::sum(h.ctx(), parts)
        })
        .collect();
    DualClass { theory: f.theory, coeffs }
}

/// `a delta_w (.) b f_v = a w(b) f_{wv}`.
pub fn odot<S: Scalar>(h: &HeckeContext<S>, z: &TwistedElement<S>, f: &DualClass<S>) -> DualClass<S> {
    let g = h.group();
    let coeffs = h
        .elements()
        .iter()
        .map(|u| {
            let parts: Vec<S> = z
                .terms()
                .iter()
                .filter_map(|(w, a)| {
                    let b = &f.coeffs[g.index_of(&w.inverse().compose(u))];
                    (!b.is_zero()).then(|| a.mul(&h.act(w, b)))
                })
                .collect();
            S::sum(h.ctx(), parts)
        })
        .collect();
    DualClass { theory: f.theory, coeffs }
}

/// `delta_w . f = f` for all `w` in `W_J`.
pub fn is_invariant<S: Scalar>(h: &HeckeContext<S>, f: &DualClass<S>, subset: &ParabolicSubset) -> bool {
    subset.members().iter().all(|&i| {
        let s = WeylElement::simple(h.rank(), i);
        bullet(h, &h.delta(&s), f).equals(f)
    })
}

/// Target of a pushforward.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum PushMode {
    /// `Y_J . f`
    ToParabolic,
    /// `Y_Pi . f`
    ToPoint,
    /// `Y_{Pi/J} . f` on a `W_J`-invariant class
    Relative,
}

pub fn pushforward<S: Scalar>(
    h: &HeckeContext<S>,
    f: &DualClass<S>,
    subset: &ParabolicSubset,
    mode: PushMode,
) -> Result<DualClass<S>> {
    Pushforward::new(h, subset, mode, f.theory).apply(h, f)
}

/// A pushforward with its push-pull element computed once, for repeated use.
#[derive(Clone, Debug)]
pub struct Pushforward<S: Scalar> {
    y: TwistedElement<S>,
    subset: ParabolicSubset,
    mode: PushMode,
    theory: Theory,
}

impl<S: Scalar> Pushforward<S> {
    pub fn new(h: &HeckeContext<S>, subset: &ParabolicSubset, mode: PushMode, theory: Theory) -> Self {
        let y = match mode {
            PushMode::ToParabolic => h.push_pull(subset, PushPullMode::Full, theory),
            PushMode::ToPoint => h.push_pull(&ParabolicSubset::full(h.rank()), PushPullMode::Full, theory),
            PushMode::Relative => h.push_pull(subset, PushPullMode::Relative, theory),
        };
        Pushforward { y, subset: subset.clone(), mode, theory }
    }

    pub fn to_point(h: &HeckeContext<S>, theory: Theory) -> Self {
        Self::new(h, &ParabolicSubset::full(h.rank()), PushMode::ToPoint, theory)
    }

    pub fn apply(&self, h: &HeckeContext<S>, f: &DualClass<S>) -> Result<DualClass<S>> {
        if f.theory != self.theory {
            return Pushforward::new(h, &self.subset, self.mode, f.theory).apply(h, f);
        }
        if self.mode == PushMode::Relative && !is_invariant(h, f, &self.subset) {
            return Err(Error::NotInvariant);
        }
        Ok(bullet(h, &self.y, f))
    }
}

/// `Y_Pi . f`, a multiple of the unit.
pub fn push_to_point<S: Scalar>(h: &HeckeContext<S>, f: &DualClass<S>) -> DualClass<S> {
    pushforward(h, f, &ParabolicSubset::full(h.rank()), PushMode::ToPoint).expect("full pushforward has no precondition")
}

/// `g_w = sum_{v in W_J} f_{wv}` for `w` in `W^J`.
pub fn invariant_basis<S: Scalar>(
    h: &HeckeContext<S>,
    subset: &ParabolicSubset,
    theory: Theory,
) -> Vec<(WeylElement, DualClass<S>)> {
    let members: Vec<WeylElement> = h.elements().iter().filter(|w| subset.in_subgroup(w)).copied().collect();
    h.elements()
        .iter()
        .filter(|w| subset.is_minimal_left(w))
        .map(|w| {
            let coset: Vec<WeylElement> = members.iter().map(|v| w.compose(v)).collect();
            (*w, DualClass::from_fn(h, theory, |x| if coset.contains(x) { h.one_scalar() } else { h.zero_scalar() }))
        })
        .collect()
}

/// Coefficients of `f` in the span of the given classes, if it lies there.
pub fn solve_in_span<S: Scalar>(h: &HeckeContext<S>, basis: &[DualClass<S>], f: &DualClass<S>) -> Option<Vec<S>> {
    let n = h.elements().len();
    let a: Vec<Vec<S>> = (0..n).map(|r| basis.iter().map(|b| b.coeffs[r].clone()).collect()).collect();
    linalg::solve(h.ctx(), &a, &f.coeffs)
}

/// `gamma^-_w (.) pt_e`.
pub fn schubert_class<S: Scalar>(h: &HeckeContext<S>, w: &WeylElement, theory: Theory) -> DualClass<S> {
    let pt = DualClass::point(h, theory, &WeylElement::identity(h.rank()));
    odot(h, &h.gamma(w, Sign::Minus), &pt)
}

/// `gamma^+_{v^-1 w0} . pt_{w0}`.
pub fn opposite_class<S: Scalar>(h: &HeckeContext<S>, v: &WeylElement, theory: Theory) -> DualClass<S> {
    let w0 = h.group().longest();
    let pt = DualClass::point(h, theory, &w0);
    bullet(h, &h.gamma(&v.inverse().compose(&w0), Sign::Plus), &pt)
}

/// One entry of a duality pairing matrix.
#[derive(Clone, Debug)]
pub struct PairingEntry<S> {
    pub w: WeylElement,
    pub u: WeylElement,
    /// `Some(c)` when the pushforward is `c` times the unit.
    pub value: Option<S>,
}

/// Entries `Y_Pi . ((gamma^-_w (.) pt_e)(gamma^+_{u^-1 w0} . pt_{w0}))`, or
/// with `J` given, `Y_{Pi/J} . ((Y_J . (gamma^-_w (.) pt_e)) (gamma^+_{u^-1 w0} . pt_{w0}))`.
pub fn k_duality_pairing<S: Scalar>(
    h: &HeckeContext<S>,
    pairs: &[(WeylElement, WeylElement)],
    subset: Option<&ParabolicSubset>,
) -> Result<Vec<PairingEntry<S>>> {
    use rayon::prelude::*;
    let theory = Theory::Multiplicative;
    let mut ws: Vec<WeylElement> = pairs.iter().map(|p| p.0).collect();
    let mut us: Vec<WeylElement> = pairs.iter().map(|p| p.1).collect();
    ws.sort();
    ws.dedup();
    us.sort();
    us.dedup();
    let left: Vec<(WeylElement, DualClass<S>)> = ws
        .par_iter()
        .map(|w| {
            let c = schubert_class(h, w, theory);
            let c = match subset {
                Some(j) => pushforward(h, &c, j, PushMode::ToParabolic).expect("no precondition"),
                None => c,
            };
            (*w, c)
        })
        .collect();
    let right: Vec<(WeylElement, DualClass<S>)> = us.par_iter().map(|u| (*u, opposite_class(h, u, theory))).collect();
    let find = |list: &[(WeylElement, DualClass<S>)], x: &WeylElement| list.iter().find(|e| e.0 == *x).unwrap().1.clone();
    let push = match subset {
        Some(j) => Pushforward::new(h, j, PushMode::Relative, theory),
        None => Pushforward::to_point(h, theory),
    };
    pairs
        .par_iter()
        .map(|(w, u)| {
            let prod = find(&left, w).product(&find(&right, u));
            let pushed = push.apply(h, &prod)?;
            Ok(PairingEntry { w: *w, u: *u, value: pushed.as_constant() })
        })
        .collect()
}

/// Checks that every entry is `delta_{w,u} prod_{alpha>0}(t - t^-1 e^{-alpha})`.
pub fn pairing_is_diagonal<S: Scalar>(h: &HeckeContext<S>, entries: &[PairingEntry<S>]) -> Vec<(WeylElement, WeylElement)> {
    let expected = h.lift(&pairing_scalar(h.rank()));
    entries
        .iter()
        .filter(|e| {
            let target = if e.w == e.u { expected.clone() } else { h.zero_scalar() };
            !e.value.as_ref().is_some_and(|v| v.equals(&target))
        })
        .map(|e| (e.w, e.u))
        .collect()
}

impl DualClass<FieldElement> {
    pub fn render(&self, h: &HeckeContext<FieldElement>) -> Vec<(WeylElement, String)> {
        h.elements().iter().zip(&self.coeffs).map(|(w, c)| (*w, c.render(h.rank()))).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_classes() {
        let h = HeckeContext::exact(2).unwrap();
        let e = WeylElement::identity(2);
        let w0 = h.group().longest();
        let pt_e = DualClass::point(&h, Theory::Multiplicative, &e);
        assert_eq!(pt_e.support(&h), vec![e]);
        let pushed = push_to_point(&h, &pt_e);
        assert!(pushed.equals(&DualClass::unit(&h, Theory::Multiplicative)));
        let pt_w0 = DualClass::point(&h, Theory::Multiplicative, &w0);
        assert!(pt_e.product(&pt_w0).is_zero());
        for w in h.elements() {
            let via_odot = odot(&h, &h.delta(w), &pt_e);
            assert!(via_odot.equals(&DualClass::point(&h, Theory::Multiplicative, w)));
        }
    }
}
