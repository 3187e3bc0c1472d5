use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incompatible sizes: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("not a permutation of 1..={len}: {detail}")]
    NotBijective { len: usize, detail: String },

    #[error("cannot parse `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("patterns must have length at least 1")]
    EmptyPattern,

    #[error("a chain needs at least one level")]
    EmptyChain,

    #[error("n = {n} exceeds the enumeration bound {bound}; pass force to run anyway")]
    EnumerationBound { n: usize, bound: usize },

    #[error("{what} is undefined for n = {n}: requires {requirement}")]
    Domain {
        what: String,
        n: usize,
        requirement: String,
    },

    #[error("integer overflow evaluating {0}")]
    Overflow(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
