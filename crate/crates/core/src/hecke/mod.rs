//! The twisted group algebra `Q_W`, Demazure–Lusztig operators, the two
//! Kazhdan–Lusztig bases, push-pull elements and the Temperley–Lieb
//! quotient.

mod tau;
mod tl;
mod twisted;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

pub use tau::{HeckeElement, Sign};
pub use tl::{normal_form, TLElement};
pub use twisted::TwistedElement;

use crate::error::{Error, Result};
use crate::field::{x_pi, x_pi_over_j, x_products, FieldElement, LatticeVector, ModFrame, ModScalar, Scalar, Theory};
use crate::klpoly::KLTable;
use crate::linalg;
use crate::weyl::{ParabolicSubset, WeylElement, WeylGroup};

/// Basis in which an element of `Q_W` is expanded.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum BasisTag {
    Delta,
    Tau,
    GammaMinus,
    GammaPlus,
    GammaHatMinus,
}

impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BasisTag::Delta => "delta",
            BasisTag::Tau => "tau",
            BasisTag::GammaMinus => "gamma-minus",
            BasisTag::GammaPlus => "gamma-plus",
            BasisTag::GammaHatMinus => "gamma-hat-minus",
        };
        f.write_str(s)
    }
}

/// Coefficients of an element in a chosen basis.
#[derive(Clone, Debug)]
pub struct HeckeExpansion<S> {
    pub basis: BasisTag,
    pub coeffs: BTreeMap<WeylElement, S>,
}

/// Push-pull elements `Y_J` (sum over `W_J`) or `Y_{Pi/J}` (sum over coset
/// representatives).
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum PushPullMode {
    Full,
    Relative,
}

/// Shared state for computations in `Q_W` at one rank: the group, the KL
/// table and write-once caches of `tau_w` and `gamma^pm_w`.
pub struct HeckeContext<S: Scalar> {
    rank: usize,
    group: Arc<WeylGroup>,
    kl: Arc<KLTable>,
    ctx: S::Ctx,
    tau: Vec<OnceLock<TwistedElement<S>>>,
    gamma_plus: Vec<OnceLock<TwistedElement<S>>>,
    gamma_minus: Vec<OnceLock<TwistedElement<S>>>,
}

impl HeckeContext<FieldElement> {
    pub fn exact(rank: usize) -> Result<Self> {
        let group = Arc::new(WeylGroup::new(rank)?);
        let kl = Arc::new(KLTable::new(group.clone()));
        Ok(Self::new(kl, ()))
    }
}

impl HeckeContext<ModScalar> {
    pub fn modular(rank: usize, seed: u64) -> Result<Self> {
        let group = Arc::new(WeylGroup::new(rank)?);
        let kl = Arc::new(KLTable::new(group.clone()));
        Ok(Self::new(kl, ModFrame::new(rank, seed)?))
    }
}

impl<S: Scalar> HeckeContext<S> {
    pub fn new(kl: Arc<KLTable>, ctx: S::Ctx) -> Self {
        let group = kl.group().clone();
        let n = group.len();
        let cells = || (0..n).map(|_| OnceLock::new()).collect::<Vec<_>>();
        HeckeContext { rank: group.rank(), group, kl, ctx, tau: cells(), gamma_plus: cells(), gamma_minus: cells() }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        &self.group
    }

    pub fn elements(&self) -> &[WeylElement] {
        self.group.elements()
    }

    pub fn kl(&self) -> &Arc<KLTable> {
        &self.kl
    }

    pub fn ctx(&self) -> &S::Ctx {
        &self.ctx
    }

    pub fn lift(&self, x: &FieldElement) -> S {
        S::lift(&self.ctx, x)
    }

    pub fn zero_scalar(&self) -> S {
        S::zero(&self.ctx)
    }

    pub fn one_scalar(&self) -> S {
        S::one(&self.ctx)
    }

    pub fn zero(&self) -> TwistedElement<S> {
        TwistedElement::zero(self.rank)
    }

    pub fn one(&self) -> TwistedElement<S> {
        TwistedElement::one(self.rank, &self.ctx)
    }

    pub fn delta(&self, w: &WeylElement) -> TwistedElement<S> {
        TwistedElement::delta(*w, &self.ctx)
    }

    pub fn scalar(&self, a: &FieldElement) -> TwistedElement<S> {
        TwistedElement::scalar(self.rank, self.lift(a))
    }

    pub fn simple(&self, i: usize) -> Result<WeylElement> {
        if i == 0 || i > self.rank {
            return Err(Error::SimpleIndexOutOfRange { index: i, rank: self.rank });
        }
        Ok(WeylElement::simple(self.rank, i))
    }

    pub fn mul(&self, a: &TwistedElement<S>, b: &TwistedElement<S>) -> TwistedElement<S> {
        a.mul(b, &self.ctx)
    }

    pub fn add(&self, a: &TwistedElement<S>, b: &TwistedElement<S>) -> TwistedElement<S> {
        a.add(b, &self.ctx)
    }

    pub fn sub(&self, a: &TwistedElement<S>, b: &TwistedElement<S>) -> TwistedElement<S> {
        a.sub(b, &self.ctx)
    }

    pub fn product(&self, factors: &[&TwistedElement<S>]) -> TwistedElement<S> {
        TwistedElement::product(self.rank, factors, &self.ctx)
    }

    pub fn act(&self, w: &WeylElement, a: &S) -> S {
        a.act(&self.ctx, w)
    }

    /// The Demazure–Lusztig operator
    /// `tau_i = (t^-1 - t)/x_i + (t - t^-1 e^{-alpha_i})/x_i delta_i`.
    pub fn tau_simple(&self, i: usize) -> TwistedElement<S> {
        let s = WeylElement::simple(self.rank, i);
        self.tau(&s)
    }

    fn tau_simple_uncached(&self, i: usize) -> TwistedElement<S> {
        let alpha = LatticeVector::simple(i);
        let x = FieldElement::one().sub(&FieldElement::exp(-alpha));
        let t = FieldElement::t();
        let tinv = FieldElement::t_pow(-1);
        let c0 = tinv.sub(&t).div(&x).expect("x_alpha is nonzero");
        let c1 = t.sub(&tinv.mul(&FieldElement::exp(-alpha))).div(&x).expect("x_alpha is nonzero");
        TwistedElement::from_terms(
            self.rank,
            [(WeylElement::identity(self.rank), self.lift(&c0)), (WeylElement::simple(self.rank, i), self.lift(&c1))],
        )
    }

    /// `tau_w = tau_{i_1} .. tau_{i_k}` for any reduced word of `w`.
    pub fn tau(&self, w: &WeylElement) -> TwistedElement<S> {
        let idx = self.group.index_of(w);
        self.tau[idx]
            .get_or_init(|| {
                if w.is_identity() {
                    return self.one();
                }
                let i = *w.right_descents().last().unwrap();
                if w.length() == 1 {
                    return self.tau_simple_uncached(i);
                }
                let head = w.mul_simple_right(i);
                self.mul(&self.tau(&head), &self.tau_simple(i))
            })
            .clone()
    }

    /// Image of a Hecke algebra element in `Q_W`.
    pub fn from_hecke(&self, h: &HeckeElement) -> TwistedElement<S> {
        let parts: Vec<TwistedElement<S>> =
            h.terms().iter().map(|(w, c)| self.tau(w).scale_left(&self.lift(&c.to_field()))).collect();
        TwistedElement::sum(self.rank, &parts, &self.ctx)
    }

    pub fn gamma(&self, v: &WeylElement, sign: Sign) -> TwistedElement<S> {
        let idx = self.group.index_of(v);
        let cell = match sign {
            Sign::Plus => &self.gamma_plus[idx],
            Sign::Minus => &self.gamma_minus[idx],
        };
        cell.get_or_init(|| self.from_hecke(&HeckeElement::kl_basis(&self.kl, v, sign))).clone()
    }

    pub fn gamma_simple(&self, i: usize, sign: Sign) -> TwistedElement<S> {
        self.gamma(&WeylElement::simple(self.rank, i), sign)
    }

    /// `hat gamma^pm_I = gamma^pm_{i_1} .. gamma^pm_{i_k}`.
    pub fn gamma_hat(&self, word: &[u8], sign: Sign) -> TwistedElement<S> {
        word.iter().fold(self.one(), |acc, &i| self.mul(&acc, &self.gamma_simple(i as usize, sign)))
    }

    pub fn x_pi(&self, theory: Theory) -> S {
        self.lift(&x_pi(self.rank, theory))
    }

    /// `Y_J = sum_{w in W_J} delta_w (1/x_J)`, or
    /// `Y_{Pi/J} = sum_{w in reps} delta_w (1/x_{Pi/J})` with `reps = W^J`.
    pub fn push_pull(&self, subset: &ParabolicSubset, mode: PushPullMode, theory: Theory) -> TwistedElement<S> {
        match mode {
            PushPullMode::Full => {
                let members: Vec<WeylElement> =
                    self.elements().iter().filter(|w| subset.in_subgroup(w)).copied().collect();
                self.push_pull_over(&members, &x_products(subset, theory))
            }
            PushPullMode::Relative => {
                let reps: Vec<WeylElement> =
                    self.elements().iter().filter(|w| subset.is_minimal_left(w)).copied().collect();
                self.push_pull_relative_with(subset, &reps, theory)
            }
        }
    }

    /// `Y_{Pi/J}` for an arbitrary set of left coset representatives.
    pub fn push_pull_relative_with(
        &self,
        subset: &ParabolicSubset,
        reps: &[WeylElement],
        theory: Theory,
    ) -> TwistedElement<S> {
        self.push_pull_over(reps, &x_pi_over_j(subset, theory))
    }

    fn push_pull_over(&self, elements: &[WeylElement], x: &FieldElement) -> TwistedElement<S> {
        let inv = self.lift(&x.inv().expect("x_J is nonzero"));
        TwistedElement::from_terms(self.rank, elements.iter().map(|w| (*w, self.act(w, &inv))))
    }

    /// `iota(p delta_w) = delta_{w^-1} p w(x_Pi)/x_Pi`.
    pub fn iota(&self, z: &TwistedElement<S>, theory: Theory) -> TwistedElement<S> {
        let xp = self.x_pi(theory);
        let pieces = z.terms().iter().map(|(w, p)| {
            let winv = w.inverse();
            let ratio = xp.div(&self.act(&winv, &xp)).expect("x_Pi is nonzero");
            (winv, self.act(&winv, p).mul(&ratio))
        });
        TwistedElement::combine(self.rank, pieces, &self.ctx)
    }

    /// The basis element with index `v` for a triangular basis.
    pub fn basis_element(
        &self,
        basis: BasisTag,
        v: &WeylElement,
        words: Option<&BTreeMap<WeylElement, Vec<u8>>>,
    ) -> TwistedElement<S> {
        match basis {
            BasisTag::Delta => self.delta(v),
            BasisTag::Tau => self.tau(v),
            BasisTag::GammaMinus => self.gamma(v, Sign::Minus),
            BasisTag::GammaPlus => self.gamma(v, Sign::Plus),
            BasisTag::GammaHatMinus => {
                let word = words.and_then(|m| m.get(v)).cloned().unwrap_or_else(|| v.canonical_word());
                self.gamma_hat(&word, Sign::Minus)
            }
        }
    }

    /// Coefficients of `z` in a basis whose element `B_v` is supported on
    /// `{u <= v}` with invertible top coefficient. Elements are peeled off
    /// by decreasing length.
    pub fn expand(
        &self,
        z: &TwistedElement<S>,
        basis: BasisTag,
        words: Option<&BTreeMap<WeylElement, Vec<u8>>>,
    ) -> HeckeExpansion<S> {
        let mut rest = z.clone();
        let mut coeffs = BTreeMap::new();
        while let Some(v) = rest.support().max_by_key(|w| (w.length(), **w)).copied() {
            let b = self.basis_element(basis, &v, words);
            let top = b.coefficient_at(&v, &self.ctx);
            let c = rest.coefficient_at(&v, &self.ctx).div(&top).expect("triangular basis has invertible diagonal");
            rest = rest.sub(&b.scale_left(&c), &self.ctx);
            coeffs.insert(v, c);
        }
        HeckeExpansion { basis, coeffs }
    }

    pub fn recombine(
        &self,
        expansion: &HeckeExpansion<S>,
        words: Option<&BTreeMap<WeylElement, Vec<u8>>>,
    ) -> TwistedElement<S> {
        let parts: Vec<TwistedElement<S>> = expansion
            .coeffs
            .iter()
            .map(|(v, c)| self.basis_element(expansion.basis, v, words).scale_left(c))
            .collect();
        TwistedElement::sum(self.rank, &parts, &self.ctx)
    }

    /// Some `z` with `z g = y`, found by an exact linear solve, or `None`.
    pub fn solve_right_factor(&self, y: &TwistedElement<S>, g: &TwistedElement<S>) -> Option<TwistedElement<S>> {
        let els = self.elements();
        let n = els.len();
        // column w of the system: delta_w g
        let cols: Vec<TwistedElement<S>> = els.iter().map(|w| self.mul(&self.delta(w), g)).collect();
        let a: Vec<Vec<S>> = (0..n).map(|u| (0..n).map(|w| cols[w].coefficient_at(&els[u], &self.ctx)).collect()).collect();
        let b: Vec<S> = els.iter().map(|u| y.coefficient_at(u, &self.ctx)).collect();
        let x = linalg::solve(&self.ctx, &a, &b)?;
        Some(TwistedElement::from_terms(self.rank, els.iter().copied().zip(x)))
    }

    /// The anti-involution `i`: `tau_w -> tau_{w^-1}`. Fails when a
    /// `tau`-coefficient is detectably outside `Z[t, t^-1]`.
    pub fn anti_involution_i(&self, z: &TwistedElement<S>) -> Result<TwistedElement<S>> {
        let exp = self.expand(z, BasisTag::Tau, None);
        if let Some((w, _)) = exp.coeffs.iter().find(|(_, c)| c.is_laurent() == Some(false)) {
            return Err(Error::NotInHecke(format!("tau-coefficient at {w} is not a Laurent polynomial in t")));
        }
        let flipped = HeckeExpansion {
            basis: BasisTag::Tau,
            coeffs: exp.coeffs.into_iter().map(|(w, c)| (w.inverse(), c)).collect(),
        };
        Ok(self.recombine(&flipped, None))
    }

    /// `a_{w0} = prod_{alpha>0} (t - t^-1 e^{-alpha}) / w0(x_Pi)`.
    pub fn a_w0(&self) -> S {
        self.lift(&a_w0_exact(self.rank))
    }

    /// `(gamma^+_w gamma^-_{u^-1 w0})|_{w0}`.
    pub fn klcom_value(&self, w: &WeylElement, u: &WeylElement) -> S {
        let w0 = self.group.longest();
        let v = u.inverse().compose(&w0);
        self.gamma(w, Sign::Plus).product_coefficient(&self.gamma(&v, Sign::Minus), &w0, &self.ctx)
    }
}

/// `prod_{alpha>0} (t - t^-1 e^{-alpha})`.
pub fn pairing_scalar(rank: usize) -> FieldElement {
    let t = FieldElement::t();
    let tinv = FieldElement::t_pow(-1);
    ParabolicSubset::full(rank)
        .positive_roots()
        .into_iter()
        .fold(FieldElement::one(), |acc, a| acc.mul(&t.sub(&tinv.mul(&FieldElement::exp(-a)))))
}

pub fn a_w0_exact(rank: usize) -> FieldElement {
    let w0x = ParabolicSubset::full(rank)
        .positive_roots()
        .into_iter()
        .fold(FieldElement::one(), |acc, a| acc.mul(&crate::field::chern_mult(a)));
    pairing_scalar(rank).div(&w0x).expect("product of x_alpha is nonzero")
}

impl HeckeContext<FieldElement> {
    /// `tau`-coefficients of a Hecke algebra element.
    pub fn to_hecke(&self, z: &TwistedElement<FieldElement>) -> Result<HeckeElement> {
        let exp = self.expand(z, BasisTag::Tau, None);
        let mut terms = Vec::new();
        for (w, c) in exp.coeffs {
            let l = c
                .to_laurent()
                .ok_or_else(|| Error::NotInHecke(format!("tau-coefficient at {w} is {}", c.render(self.rank))))?;
            terms.push((w, l));
        }
        Ok(HeckeElement::from_terms(self.rank, terms))
    }

    /// Image in the Temperley–Lieb quotient: the `gamma^-`-coefficients at
    /// fully commutative elements.
    pub fn tl_project(&self, z: &TwistedElement<FieldElement>) -> Result<TLElement> {
        Ok(tl_project_hecke(&self.kl, &self.to_hecke(z)?))
    }
}

pub fn tl_project_hecke(kl: &KLTable, h: &HeckeElement) -> TLElement {
    let coeffs: BTreeMap<WeylElement, crate::field::ScalarT> =
        h.to_gamma_minus(kl).into_iter().filter(|(w, _)| w.is_fully_commutative()).collect();
    TLElement::from_coefficients(h.rank(), &coeffs)
}
