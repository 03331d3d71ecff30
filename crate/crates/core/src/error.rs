use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank {0} out of range (supported ranks are 1..=5)")]
    RankOutOfRange(usize),
    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<u8>),
    #[error("simple index {index} out of range for rank {rank}")]
    SimpleIndexOutOfRange { index: usize, rank: usize },
    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<u8>),
    #[error("invalid parabolic subset: {0}")]
    InvalidParabolic(String),
    #[error("parabolic subset must be maximal proper (|J| = n-1), got {0}")]
    NotMaximal(String),
    #[error("element {0} is not a minimal length coset representative")]
    NotMinimalRepresentative(String),
    #[error("element is not in the Hecke subalgebra: {0}")]
    NotInHecke(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("class is not invariant under the parabolic subgroup")]
    NotInvariant,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
