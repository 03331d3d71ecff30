use std::fmt::Debug;

use crate::error::Result;
use crate::weyl::WeylElement;

use super::element::FieldElement;

/// Coefficient domain of the twisted group algebra: either exact field
/// elements or their images under evaluation (see [`super::ModScalar`]).
pub trait Scalar: Clone + Send + Sync + Debug + 'static {
    type Ctx: Send + Sync;

    fn lift(ctx: &Self::Ctx, x: &FieldElement) -> Self;
    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;
    /// The Weyl group action on scalars, `e^lambda -> e^{w lambda}`.
    fn act(&self, ctx: &Self::Ctx, w: &WeylElement) -> Self;
    fn render(&self, rank: usize) -> String;

    fn sum(ctx: &Self::Ctx, items: Vec<Self>) -> Self {
        items.into_iter().fold(Self::zero(ctx), |acc, x| acc.add(&x))
    }

    fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    fn equals(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }

    /// `Some(true)` when the value is certainly a Laurent polynomial in `t`,
    /// `None` when the domain cannot tell.
    fn is_laurent(&self) -> Option<bool> {
        None
    }
}

impl Scalar for FieldElement {
    type Ctx = ();

    fn lift(_: &(), x: &FieldElement) -> Self {
        x.clone()
    }
    fn zero(_: &()) -> Self {
        FieldElement::zero()
    }
    fn one(_: &()) -> Self {
        FieldElement::one()
    }
    fn is_zero(&self) -> bool {
        FieldElement::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        FieldElement::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        FieldElement::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        FieldElement::mul(self, other)
    }
    fn neg(&self) -> Self {
        FieldElement::neg(self)
    }
    fn inv(&self) -> Result<Self> {
        FieldElement::inv(self)
    }
    fn act(&self, _: &(), w: &WeylElement) -> Self {
        if w.is_identity() {
            self.clone()
        } else {
            self.act_matrix(&w.lattice_matrix())
        }
    }
    fn render(&self, rank: usize) -> String {
        FieldElement::render(self, rank)
    }
    fn sum(_: &(), items: Vec<Self>) -> Self {
        let refs: Vec<&FieldElement> = items.iter().collect();
        FieldElement::sum_refs(&refs)
    }
    fn equals(&self, other: &Self) -> bool {
        self == other
    }
    fn is_laurent(&self) -> Option<bool> {
        Some(self.to_laurent().is_some())
    }
}
