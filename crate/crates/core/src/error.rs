use thiserror::Error;

use crate::hopf::Basis;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A literal did not match the grammar. `column` is 1-based.
    #[error("{what} literal `{input}` is malformed at column {column}: {message}")]
    Parse {
        what: &'static str,
        input: String,
        column: usize,
        message: String,
    },

    #[error("compositions cannot contain the zero element (entry {index})")]
    ZeroEntry { index: usize },

    #[error("theta is undefined on the zero element")]
    ThetaOfZero,

    #[error("{0} is only defined for compositions without epsilon entries")]
    EpsilonEntry(&'static str),

    #[error("coarsening composition sums to {got}, expected the length {expected}")]
    CoarseningLength { expected: usize, got: usize },

    #[error("coarsening compositions must have positive parts")]
    CoarseningZeroPart,

    #[error("expected an element in the {expected} basis, found the {found} basis")]
    BasisMismatch { expected: Basis, found: Basis },

    #[error("series over {left} and {right} variables cannot be combined")]
    VariableCountMismatch { left: usize, right: usize },

    #[error("{0} is too large to enumerate")]
    TooLarge(String),
}
