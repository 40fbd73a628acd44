use thiserror::Error;

/// Errors raised by the exact-arithmetic pipeline.
///
/// Most of these signal a broken invariant rather than bad user input: the
/// recursions divide by `(t - 1)` and the divisions are exact whenever the
/// inputs are consistent.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChowError {
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("inexact division in {context}: nonzero remainder")]
    InexactDivision { context: String },
    #[error("plethysm with an inner series that has a constant term")]
    ConstantTerm,
    #[error("plethysm with an inner series that has degree-0 terms in t")]
    DegreeZeroInner,
    #[error("series is not homogeneous of degree {0}")]
    NotHomogeneous(usize),
    #[error("character missing on cycle type {0}")]
    MissingCycleType(String),
    #[error("bell polynomial needs {needed} arguments, got {got}")]
    InsufficientArguments { needed: usize, got: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, ChowError>;
