//! Kazhdan–Lusztig Schubert calculus in type A: exact twisted group
//! algebras, localization, hyperbolic KL-Schubert classes and root
//! polynomial restriction formulas.

pub mod billey;
pub mod checks;
pub mod error;
pub mod field;
pub mod hecke;
pub mod hyperbolic;
pub mod klpoly;
pub mod linalg;
pub mod localization;
pub mod reproduce;
pub mod sample;
pub mod weyl;

pub use error::{Error, Result};
