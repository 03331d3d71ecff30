//! The coefficient field `Frac(Z[t, t^-1][Lambda])` and its Weyl action.

mod chern;
mod element;
mod format;
mod lattice;
mod laurent;
pub mod modp;
mod modular;
mod poly;
mod scalar;

pub use chern::{
    chern_mult, embed_hyperbolic_chern, fgl_hyperbolic, fgl_mult, hyperbolic_to_mult, mu, mu_pow, x_pi, x_pi_over_j,
    x_products, Theory,
};
pub use element::FieldElement;
pub use format::{FieldJson, LaurentJson, TermJson};
pub use lattice::{LatticeVector, MAX_RANK};
pub use laurent::ScalarT;
pub use modular::{ModFrame, ModScalar};
pub use poly::{Mono, Poly};
pub use scalar::Scalar;

/// Elements of the group algebra `Z[t, t^-1][Lambda]`.
pub type GroupAlgebraElement = Poly;
