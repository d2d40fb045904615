use thiserror::Error;

/// Errors raised by the engine, the text formats and the expression language.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rows {first} and {second} both map to {value}")]
    InjectivityViolation { first: usize, second: usize, value: i128 },
    #[error("row {row} maps to {value}, inside the tail image starting at {tail_start}")]
    TailCollision { row: usize, value: i128, tail_start: i128 },
    #[error("row {row} maps to negative value {value}")]
    NegativeValue { row: usize, value: i128 },
    #[error("tail start N+k = {0} is negative")]
    NegativeTail(i128),
    #[error("arithmetic overflow")]
    Overflow,
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("element is not a unit")]
    NotAUnit,
    #[error("element is the identity and moves no point")]
    IsIdentity,
    #[error("domain and range complements differ in size (index {0})")]
    IndexNonzero(i128),
    #[error("idempotents are not strictly descending at position {0}")]
    NotAChain(usize),
    #[error("chain is empty")]
    EmptyChain,
    #[error("point {0} is not in the domain of the chain's top idempotent")]
    PointOutsideDomain(i128),
    #[error("prefix repeats point {0}")]
    RepeatedPoint(i128),
    #[error("hole sequence is not eventually consecutive")]
    NonRepresentable,
    #[error("chain position must be at least 1")]
    ZeroPosition,
    #[error("window of width {width} is below the required {required}")]
    WindowTooSmall { width: usize, required: usize },
    #[error("complement of size {size} exceeds the enumeration bound {bound}")]
    BoundExceeded { size: usize, bound: usize },
    #[error("internal consistency check failed: {0}")]
    InvariantViolation(&'static str),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid literal: {0}")]
    Validation(String),
}

impl Error {
    /// Parse and literal-validation failures, as opposed to domain errors.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. }
                | Error::Validation(_)
                | Error::InjectivityViolation { .. }
                | Error::TailCollision { .. }
                | Error::NegativeValue { .. }
                | Error::NegativeTail(_)
                | Error::PointOutsideDomain(_)
                | Error::RepeatedPoint(_)
                | Error::ZeroPosition
        )
    }
}
