//! Error types shared across the crate.

use thiserror::Error;

/// Errors raised by the exact algebra and the numeric oracle.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// Sum of two numbers carrying different nontrivial formal radicals.
    /// The radical part is multiplicative-only; use
    /// [`crate::gelfond::GelfondNumber::rationalize`] to clear it first.
    #[error("incompatible radicals: sqrt({0}) vs sqrt({1})")]
    IncompatibleRadicals(String, String),

    /// Field inverse of zero.
    #[error("division by zero")]
    DivisionByZero,

    /// Binary Heisenberg operation on elements over different dualities.
    #[error("duality mismatch: {0} vs {1}")]
    DualityMismatch(String, String),

    /// Valuation of the zero element is undefined.
    #[error("valuation of the zero element")]
    ZeroElement,

    /// Similarity scaling by zero.
    #[error("similarity scale must be nonzero")]
    ZeroScale,

    /// Binary operation on finite signals of different shapes.
    #[error("shape mismatch: {0:?} vs {1:?}")]
    ShapeMismatch(Vec<u32>, Vec<u32>),

    /// Binary operation on Laurent signals of different rank.
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),

    /// Finite-signal entry outside the cyclotomic subfield.
    #[error("invalid finite-signal entry: {0}")]
    InvalidEntry(String),

    /// Input text rejected by one of the grammars.
    #[error("parse error at {line}:{col}: {msg}")]
    Parse {
        /// 1-based line of the offending token.
        line: usize,
        /// 1-based column of the offending token.
        col: usize,
        /// What was expected or found.
        msg: String,
    },

    /// Adaptive quadrature failed to reach the requested tolerance.
    #[error("quadrature did not converge: {0}")]
    NoConvergence(String),

    /// Rewrite engine exceeded its step budget.
    #[error("rewrite fuel exhausted after {0} steps")]
    FuelExhausted(u64),

    /// Catch-all for malformed domain values.
    #[error("{0}")]
    Domain(String),
}

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse_at(offset_line: usize, offset_col: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line: offset_line,
            col: offset_col,
            msg: msg.into(),
        }
    }
}
