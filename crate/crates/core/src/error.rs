use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or out-of-range input (bad vertex id, violated precondition, ...).
    #[error("invalid input: {0}")]
    Input(String),

    /// A text file did not follow its format.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A search ran out of budget. Carries the best bounds established so far.
    #[error("{what}: budget exhausted after {nodes} search nodes (best bounds {lower}..={upper})")]
    Resource {
        what: &'static str,
        nodes: u64,
        lower: u64,
        upper: u64,
    },

    /// A maximisation ran out of budget; `best` is the largest value found.
    #[error("{what}: budget exhausted after {nodes} search nodes (best so far {best})")]
    ResourceBest {
        what: &'static str,
        nodes: u64,
        best: crate::Rational,
    },

    /// A size guard rejected a construction before it was attempted.
    #[error("{what}: estimated size {estimate} exceeds cap {cap}")]
    TooLarge {
        what: &'static str,
        estimate: u128,
        cap: u128,
    },

    /// A guaranteed bound was violated. This indicates a bug.
    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
