use thiserror::Error;

use crate::scalar::Field;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a supported prime modulus")]
    NotPrime(u64),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("algebras must have positive dimension")]
    ZeroDimension,
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("product is not associative at basis triple ({0}, {1}, {2})")]
    NonAssociative(usize, usize, usize),
    #[error("base product is not associative at basis triple ({0}, {1}, {2})")]
    NonAssociativeBase(usize, usize, usize),
    #[error("endomorphism is not in the centroid")]
    NotInCentroid,
    #[error("element is not in the annihilator")]
    NotInAnnihilator,
    #[error("quiver has an oriented cycle")]
    CyclicQuiver,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("polynomial has a nonzero constant term")]
    NonzeroConstantTerm,
    #[error("alphabet mismatch: {0} vs {1} variables")]
    AlphabetMismatch(usize, usize),
    #[error("expected {expected} variable(s), got {found}")]
    WrongVariableCount { expected: String, found: usize },
    #[error("star map fails the extension condition at ({0}, {1}, {2})")]
    ConditionNotVerified(usize, usize, usize),
    #[error("char-2 enumeration needs {needed} members, cap is {cap}")]
    Undecided { needed: u128, cap: u128 },
    #[error("compatibility routes disagree: sum associative = {sum_associative}, identity holds = {identity_holds}")]
    InternalContradiction {
        sum_associative: bool,
        identity_holds: bool,
    },
    #[error("parse error: {0}")]
    Parse(String),
}
