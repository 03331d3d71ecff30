//! First Chern classes of line bundles in the two theories, and the
//! products `x_J` over negative roots of a Levi subsystem.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::weyl::ParabolicSubset;

use super::element::FieldElement;
use super::lattice::LatticeVector;

/// Multiplicative (K-theory) or hyperbolic formal group law.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Theory {
    Multiplicative,
    Hyperbolic,
}

impl Theory {
    pub fn chern(&self, lambda: LatticeVector) -> FieldElement {
        match self {
            Theory::Multiplicative => chern_mult(lambda),
            Theory::Hyperbolic => embed_hyperbolic_chern(lambda),
        }
    }

    pub fn fgl(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        match self {
            Theory::Multiplicative => fgl_mult(x, y),
            Theory::Hyperbolic => fgl_hyperbolic(x, y),
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Theory::Multiplicative => "m",
            Theory::Hyperbolic => "h",
        }
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Theory {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "m" | "mult" | "k" => Ok(Theory::Multiplicative),
            "h" | "hyp" => Ok(Theory::Hyperbolic),
            _ => Err(Error::Parse(format!("unknown theory {s:?} (expected m or h)"))),
        }
    }
}

/// `mu = t + t^{-1}`.
pub fn mu() -> FieldElement {
    FieldElement::t().add(&FieldElement::t_pow(-1))
}

pub fn mu_pow(k: i32) -> FieldElement {
    mu().pow(k).expect("mu is invertible")
}

/// `1 - e^{-lambda}`.
pub fn chern_mult(lambda: LatticeVector) -> FieldElement {
    FieldElement::one().sub(&FieldElement::exp(-lambda))
}

/// `(t^2 + 1)(1 - e^{-lambda}) / (t^2 - e^{-lambda})`, the preimage of
/// `1 - e^{-lambda}` under `g(x) = (1 - t^2) x / (x - (t^2 + 1))`.
pub fn embed_hyperbolic_chern(lambda: LatticeVector) -> FieldElement {
    if lambda.is_zero() {
        return FieldElement::zero();
    }
    let t2 = FieldElement::t_pow(2);
    let num = t2.add(&FieldElement::one()).mul(&chern_mult(lambda));
    let den = t2.sub(&FieldElement::exp(-lambda));
    num.div(&den).expect("t^2 - e^{-lambda} is nonzero")
}

/// `g(x) = (1 - t^2) x / (x - (t^2 + 1))`.
pub fn hyperbolic_to_mult(x: &FieldElement) -> Result<FieldElement> {
    let t2 = FieldElement::t_pow(2);
    let num = FieldElement::one().sub(&t2).mul(x);
    num.div(&x.sub(&t2.add(&FieldElement::one())))
}

/// `F_m(x, y) = x + y - xy`.
pub fn fgl_mult(x: &FieldElement, y: &FieldElement) -> FieldElement {
    FieldElement::sum([x.clone(), y.clone(), x.mul(y).neg()])
}

/// `F_h(x, y) = (x + y - xy) / (1 - mu^{-2} xy)`.
pub fn fgl_hyperbolic(x: &FieldElement, y: &FieldElement) -> FieldElement {
    let xy = x.mul(y);
    let den = FieldElement::one().sub(&mu_pow(-2).mul(&xy));
    fgl_mult(x, y).div(&den).expect("denominator of F_h is nonzero")
}

/// `x_J`: product of `x_alpha` over the negative roots of `Sigma_J`.
pub fn x_products(subset: &ParabolicSubset, theory: Theory) -> FieldElement {
    subset
        .positive_roots()
        .into_iter()
        .fold(FieldElement::one(), |acc, r| acc.mul(&theory.chern(-r)))
}

/// `x_Pi` for the full root system of the given rank.
pub fn x_pi(rank: usize, theory: Theory) -> FieldElement {
    x_products(&ParabolicSubset::full(rank), theory)
}

/// `x_{Pi/J} = x_Pi / x_J`: the negative roots outside `Sigma_J`.
pub fn x_pi_over_j(subset: &ParabolicSubset, theory: Theory) -> FieldElement {
    let levi = subset.positive_roots();
    ParabolicSubset::full(subset.rank())
        .positive_roots()
        .into_iter()
        .filter(|r| !levi.contains(r))
        .fold(FieldElement::one(), |acc, r| acc.mul(&theory.chern(-r)))
}
