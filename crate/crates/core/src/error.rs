use num_bigint::BigInt;
use thiserror::Error;

/// Part of a factorization recovered before the iteration budget ran out.
///
/// `sign * product(factors) * cofactor` reconstructs the original integer;
/// every prime in `factors` is certified, `cofactor` is the unsplit remainder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialSplit {
    pub sign: i8,
    pub factors: Vec<(BigInt, u32)>,
    pub cofactor: BigInt,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("singular curve: the discriminant vanishes")]
    SingularCurve,

    #[error("coordinate change does not produce integral coefficients")]
    NonIntegralTransform,

    #[error("factorization budget exhausted; unsplit cofactor {}", .partial.cofactor)]
    FactorizationBudgetExceeded { partial: Box<PartialSplit> },

    #[error("identity `{check}` fails at coefficient index {index}: got {got}, expected {expected}")]
    SymbolicMismatch {
        check: String,
        index: usize,
        got: BigInt,
        expected: BigInt,
    },

    #[error("verified claim failed at step `{step}`: {detail}")]
    TheoremViolation { step: String, detail: String },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
