use thiserror::Error;

use crate::scalar::ParamError;

/// Errors raised by scalar arithmetic and parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse scalar from {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("value has a pole at the primitive {order}-th root of unity")]
    Pole { order: u32 },
}

/// Errors raised by the algebraic operations of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlobError {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error("{what} index {index} out of range {lo}..={hi}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        lo: usize,
        hi: usize,
    },
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("weight {lambda} is not in Lambda_{n}")]
    WeightOutOfRange { n: usize, lambda: i64 },
    #[error("weight {lambda} = ±n is degenerate for this operation (n = {n})")]
    DegenerateWeight { n: usize, lambda: i64 },
    #[error("tensor length {n} exceeds the configured cap {cap}")]
    DimensionCap { n: usize, cap: usize },
    #[error("a generator moved a basis vector out of the weight space")]
    WeightNotPreserved,
    #[error("invalid word {0:?}: letters must be '1' or '2'")]
    BadWord(String),
    #[error("parameter backend l = {params} does not match scalar backend l = {scalar}")]
    BackendMismatch { params: u32, scalar: u32 },
    #[error("cyclotomic order {0} is not compiled into this build")]
    UnsupportedOrder(u32),
    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),
    #[error("{0}")]
    Precondition(String),
}

pub type Result<T, E = BlobError> = std::result::Result<T, E>;
