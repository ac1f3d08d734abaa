use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
    #[error("zero denominator in {0:?}")]
    DenominatorZero(String),
    #[error("denominator of {text:?} is not invertible modulo {p}")]
    DenominatorNotInvertible { text: String, p: u64 },
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("subspace is not a subalgebra")]
    NotASubalgebra,
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("algebra is not solvable non-nilpotent with one-dimensional derived subalgebra")]
    NotTK,
    #[error("operation requires a prime field")]
    NotFiniteField,
    #[error("enumeration needs {needed} subspaces, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("internal theorem check failed: {0}")]
    TheoremViolation(String),
    #[error("invalid algebra file: {0}")]
    Format(String),
    #[error("unknown example {0:?}")]
    UnknownExample(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
