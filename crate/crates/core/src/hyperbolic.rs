//! Hyperbolic classes: the operators `X_i`, `Y_i`, the map `psi`, the
//! KL-Schubert classes and their dual bases.
//!
//! Hyperbolic Chern classes are written in the multiplicative coordinates
//! through [`embed_hyperbolic_chern`], so `psi` does not change coefficients.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{embed_hyperbolic_chern, mu_pow, FieldElement, LatticeVector, Scalar, Theory};
use crate::hecke::{BasisTag, HeckeContext, PushPullMode, Sign, TwistedElement};
use crate::localization::{bullet, odot, pushforward, DualClass, PushMode, Pushforward};
use crate::weyl::{j_compatible_words, ParabolicSubset, WeylElement};

const H: Theory = Theory::Hyperbolic;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum OperatorKind {
    X,
    Y,
}

/// `X_i = (delta_i - 1)/x_i` or `Y_i = 1 + X_i`, with hyperbolic `x_i`.
pub fn divided_difference<S: Scalar>(h: &HeckeContext<S>, i: usize, kind: OperatorKind) -> TwistedElement<S> {
    let inv = h.lift(&embed_hyperbolic_chern(LatticeVector::simple(i)).inv().expect("x_i is nonzero"));
    let e = WeylElement::identity(h.rank());
    let s = WeylElement::simple(h.rank(), i);
    let c0 = match kind {
        OperatorKind::X => inv.neg(),
        OperatorKind::Y => h.one_scalar().sub(&inv),
    };
    TwistedElement::from_terms(h.rank(), [(e, c0), (s, inv)])
}

/// `X_{i_1} .. X_{i_k}`.
pub fn x_word<S: Scalar>(h: &HeckeContext<S>, word: &[u8]) -> TwistedElement<S> {
    word.iter().fold(h.one(), |acc, &i| h.mul(&acc, &divided_difference(h, i as usize, OperatorKind::X)))
}

/// `psi`: the identity on coefficients in the chosen embedding.
pub fn psi<S: Scalar>(z: &TwistedElement<S>) -> TwistedElement<S> {
    z.clone()
}

/// `mu_w = mu^{l(w)}`.
pub fn mu_w(w: &WeylElement) -> FieldElement {
    mu_pow(w.length() as i32)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum ClassVariant {
    C,
    CTilde,
    CJ,
    CTildeJ,
    DualBasis,
}

impl std::str::FromStr for ClassVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "c" => Ok(ClassVariant::C),
            "ctilde" | "c-tilde" => Ok(ClassVariant::CTilde),
            "cj" | "c-j" => Ok(ClassVariant::CJ),
            "ctildej" | "c-tilde-j" => Ok(ClassVariant::CTildeJ),
            "dual" | "dual-basis" => Ok(ClassVariant::DualBasis),
            _ => Err(Error::Parse(format!("unknown class variant {s:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct KLSchubertClass<S> {
    pub class: DualClass<S>,
    pub element: WeylElement,
    pub subset: Option<ParabolicSubset>,
    pub variant: ClassVariant,
}

/// Per-rank hyperbolic data: `psi(gamma^-_w) = sum_v a_{w,v} delta_v` and
/// the inverse matrix `b`, with `delta_w = sum_u b_{w,u} psi(gamma^-_u)`.
pub struct HyperbolicLayer<'a, S: Scalar> {
    pub hecke: &'a HeckeContext<S>,
    b: Vec<BTreeMap<WeylElement, S>>,
}

impl<'a, S: Scalar> HyperbolicLayer<'a, S> {
    pub fn new(hecke: &'a HeckeContext<S>) -> Self {
        let b = hecke
            .elements()
            .iter()
            .map(|w| hecke.expand(&hecke.delta(w), BasisTag::GammaMinus, None).coeffs)
            .collect();
        HyperbolicLayer { hecke, b }
    }

    pub fn rank(&self) -> usize {
        self.hecke.rank()
    }

    /// `b^h_{w,u}`.
    pub fn b(&self, w: &WeylElement, u: &WeylElement) -> S {
        let row = &self.b[self.hecke.group().index_of(w)];
        row.get(u).cloned().unwrap_or_else(|| self.hecke.zero_scalar())
    }

    /// `a_{w,v}`: coefficient of `delta_v` in `psi(gamma^-_w)`.
    pub fn a(&self, w: &WeylElement, v: &WeylElement) -> S {
        psi(&self.hecke.gamma(w, Sign::Minus)).coefficient_at(v, self.hecke.ctx())
    }

    /// `b-hat^h_{w,I_u}` for every `u`, using the `J`-compatible words.
    pub fn b_hat_row(&self, w: &WeylElement, subset: &ParabolicSubset) -> BTreeMap<WeylElement, S> {
        let words = j_compatible_words(self.hecke.group(), subset);
        self.hecke.expand(&self.hecke.delta(w), BasisTag::GammaHatMinus, Some(&words)).coeffs
    }

    pub fn b_hat(&self, w: &WeylElement, u: &WeylElement, subset: &ParabolicSubset) -> S {
        self.b_hat_row(w, subset).remove(u).unwrap_or_else(|| self.hecke.zero_scalar())
    }

    fn mu_inv(&self, w: &WeylElement) -> S {
        self.hecke.lift(&mu_pow(-(w.length() as i32)))
    }

    /// `pt^h_w = w(x^h_Pi) f_w`.
    pub fn point(&self, w: &WeylElement) -> DualClass<S> {
        DualClass::point(self.hecke, H, w)
    }

    /// `C_w = mu_w^-1 psi(gamma^-_w) (.) pt_e`.
    pub fn c(&self, w: &WeylElement) -> DualClass<S> {
        let h = self.hecke;
        odot(h, &psi(&h.gamma(w, Sign::Minus)), &self.point(&WeylElement::identity(h.rank()))).scale(&self.mu_inv(w))
    }

    /// `C~_u = mu_{u^-1 w0}^-1 psi(gamma^+_{u^-1 w0}) . pt_{w0}`.
    pub fn c_tilde(&self, u: &WeylElement) -> DualClass<S> {
        let h = self.hecke;
        let w0 = h.group().longest();
        let v = u.inverse().compose(&w0);
        bullet(h, &psi(&h.gamma(&v, Sign::Plus)), &self.point(&w0)).scale(&self.mu_inv(&v))
    }

    /// `C^J_w = mu_w^-1 Y^h_J . (psi(gamma^-_w) (.) pt_e)`.
    pub fn c_j(&self, w: &WeylElement, subset: &ParabolicSubset) -> Result<DualClass<S>> {
        if !subset.is_minimal_left(w) {
            return Err(Error::NotMinimalRepresentative(format!("{w}")));
        }
        pushforward(self.hecke, &self.c(w), subset, PushMode::ToParabolic)
    }

    /// `psi(gamma^-_v)^* = sum_x b_{x,v} f_x`.
    pub fn dual_basis(&self, v: &WeylElement) -> DualClass<S> {
        DualClass::from_fn(self.hecke, H, |x| self.b(x, v))
    }

    pub fn class(&self, w: &WeylElement, variant: ClassVariant, subset: Option<&ParabolicSubset>) -> Result<KLSchubertClass<S>> {
        let class = match variant {
            ClassVariant::C => self.c(w),
            ClassVariant::CTilde => self.c_tilde(w),
            ClassVariant::DualBasis => self.dual_basis(w),
            ClassVariant::CJ | ClassVariant::CTildeJ => {
                let j = subset.ok_or_else(|| Error::InvalidParabolic("a parabolic variant needs J".into()))?;
                if variant == ClassVariant::CJ {
                    self.c_j(w, j)?
                } else {
                    if !j.is_minimal_left(w) {
                        return Err(Error::NotMinimalRepresentative(format!("{w}")));
                    }
                    self.c_tilde(w)
                }
            }
        };
        Ok(KLSchubertClass { class, element: *w, subset: subset.cloned(), variant })
    }

    /// The true restriction `C~^J_u|_w`, read off the class.
    pub fn class_restriction(&self, u: &WeylElement, w: &WeylElement, subset: &ParabolicSubset) -> Result<S> {
        if !subset.is_minimal_left(u) {
            return Err(Error::NotMinimalRepresentative(format!("{u}")));
        }
        Ok(self.c_tilde(u).at(self.hecke, w).clone())
    }
}

/// Mismatching pairs `(w, u)` of a pairing that should be `delta_{w,u} * expected(w)`.
pub fn pairing_mismatches<S: Scalar>(
    h: &HeckeContext<S>,
    rows: &[WeylElement],
    left: impl Fn(&WeylElement) -> DualClass<S>,
    right: impl Fn(&WeylElement) -> DualClass<S>,
    mut push: impl FnMut(&DualClass<S>) -> DualClass<S>,
    expected: impl Fn(&WeylElement) -> S,
) -> Vec<(WeylElement, WeylElement)> {
    let lefts: Vec<DualClass<S>> = rows.iter().map(&left).collect();
    let rights: Vec<DualClass<S>> = rows.iter().map(&right).collect();
    let mut bad = Vec::new();
    for (i, w) in rows.iter().enumerate() {
        for (j, u) in rows.iter().enumerate() {
            let target = if i == j { expected(w) } else { h.zero_scalar() };
            let value = push(&lefts[i].product(&rights[j]));
            if !value.as_constant().is_some_and(|c| c.equals(&target)) {
                bad.push((*w, *u));
            }
        }
    }
    bad
}

impl<S: Scalar> HyperbolicLayer<'_, S> {
    /// `Y^h_Pi . (C_w C~_u) = delta_{w,u}`.
    pub fn check_full_duality(&self) -> Vec<(WeylElement, WeylElement)> {
        let h = self.hecke;
        let push = Pushforward::to_point(h, H);
        pairing_mismatches(h, h.elements(), |w| self.c(w), |u| self.c_tilde(u), |f| push.apply(h, f).expect("no precondition"), |_| h.one_scalar())
    }

    /// `Y^h_Pi . (C_w psi(gamma^-_u)^*) = delta_{w,u} mu_w^-1`.
    pub fn check_dual_basis(&self) -> Vec<(WeylElement, WeylElement)> {
        let h = self.hecke;
        let push = Pushforward::to_point(h, H);
        pairing_mismatches(h, h.elements(), |w| self.c(w), |u| self.dual_basis(u), |f| push.apply(h, f).expect("no precondition"), |w| self.mu_inv(w))
    }

    /// Elements `w` where `mu_w psi(gamma^-_w)^* != C~_w`.
    pub fn check_corollary_dual(&self, elements: &[WeylElement]) -> Vec<WeylElement> {
        let h = self.hecke;
        elements
            .iter()
            .filter(|w| !self.dual_basis(w).scale(&h.lift(&mu_w(w))).equals(&self.c_tilde(w)))
            .copied()
            .collect()
    }

    /// `Y^h_{Pi/J} . (C^J_w C~^J_u) = delta_{w,u}` over `W^J`.
    pub fn check_parabolic_duality(&self, subset: &ParabolicSubset) -> Result<Vec<(WeylElement, WeylElement)>> {
        let h = self.hecke;
        let reps: Vec<WeylElement> = h.elements().iter().filter(|w| subset.is_minimal_left(w)).copied().collect();
        let push = Pushforward::new(h, subset, PushMode::Relative, H);
        let mut err = None;
        let bad = pairing_mismatches(
            h,
            &reps,
            |w| self.c_j(w, subset).expect("w is minimal"),
            |u| self.c_tilde(u),
            |f| match push.apply(h, f) {
                Ok(g) => g,
                Err(e) => {
                    err.get_or_insert(e);
                    DualClass::zero(h, H)
                }
            },
            |_| h.one_scalar(),
        );
        match err {
            Some(e) => Err(e),
            None => Ok(bad),
        }
    }

    /// `psi(gamma^+_{w_J}) = mu_{w_J} Y^h_J`.
    pub fn check_gamma_plus_longest(&self, subset: &ParabolicSubset) -> bool {
        let h = self.hecke;
        let wj = h.elements().iter().filter(|w| subset.in_subgroup(w)).max_by_key(|w| w.length()).copied().unwrap();
        let lhs = psi(&h.gamma(&wj, Sign::Plus));
        let rhs = h.push_pull(subset, PushPullMode::Full, H).scale_left(&h.lift(&mu_w(&wj)));
        h.sub(&lhs, &rhs).is_zero()
    }
}
