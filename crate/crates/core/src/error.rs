use thiserror::Error;

/// Errors raised by the algebraic operations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: expected {expected} variables, found {found}")]
    RingMismatch { expected: usize, found: usize },

    #[error("degree mismatch: expected degree {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("enumeration cap exceeded: {needed} monomials requested, cap is {cap}")]
    CapExceeded { needed: String, cap: usize },

    #[error("undecided: enumeration cap {cap} reached while checking {what}")]
    Undecided { what: &'static str, cap: usize },

    #[error("degree cap {cap} reached before stabilization (partial result through degree {reached})")]
    DegreeCap { cap: usize, reached: usize },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("regularity {reg} exceeds the requested bound {bound}")]
    RegularityTooLarge { reg: usize, bound: usize },

    #[error("sequence is not admissible: {0}")]
    Inadmissible(String),

    #[error("Hilbert data rejected at condition {tag}: {detail}")]
    Characterization { tag: &'static str, detail: String },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
