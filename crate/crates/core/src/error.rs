//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A sequence does not cover the index range a statistic needs.
    #[error("insufficient range: need {needed} values of {what}, have {have}")]
    InsufficientRange {
        what: &'static str,
        needed: u64,
        have: u64,
    },

    #[error("unsupported modulus {q}: character construction is limited to q <= {max}")]
    UnsupportedModulus { q: u64, max: u64 },

    /// A block product or odometer was not realized deeply enough.
    #[error("needs more blocks: depth {required} required, only {available} available")]
    NeedsMoreBlocks { required: usize, available: usize },

    #[error("letter {letter} does not start its own image; cannot iterate to a fixed point")]
    NotAFixedPointSeed { letter: char },

    #[error("no inverse: gcd({s}, {modulus}) != 1")]
    NoInverse { s: u64, modulus: u64 },

    #[error("invalid tower: {k} does not divide n_t = {n}")]
    InvalidTower { k: u64, n: u64 },

    #[error("gaps not divergent: {0}")]
    GapsNotDivergent(String),

    #[error("witness exhausted: {0}")]
    WitnessExhausted(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn insufficient(what: &'static str, needed: u64, have: u64) -> Self {
        Error::InsufficientRange { what, needed, have }
    }
}
