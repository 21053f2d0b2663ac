use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A character outside `{O, M, P}`; `position` is 1-based.
    #[error("invalid letter {found:?} at position {position} (expected one of O, M, P)")]
    InvalidLetter { position: usize, found: char },

    #[error("length mismatch: code of {letters} letters describes n = {implied}, but n = {given} was given")]
    LengthMismatch {
        letters: usize,
        implied: usize,
        given: usize,
    },

    #[error("an empty code needs an explicit chain length n = 1 or n = 2")]
    AmbiguousEmptyCode,

    #[error("chain length must be at least {min}, got {n}")]
    ChainTooShort { n: usize, min: usize },

    #[error("weight index k must be >= 1, got {0}")]
    InvalidWeightIndex(usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("vertex {vertex} out of range for graph with {vertex_count} vertices")]
    InvalidVertex { vertex: usize, vertex_count: usize },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("{what}: {numerator} is not divisible by {divisor}")]
    NotDivisible {
        what: &'static str,
        numerator: i128,
        divisor: i128,
    },

    #[error("homogeneous polynomial requested for non-constant code {0}")]
    NonConstantCode(String),

    #[error("n = {n} exceeds the exhaustive enumeration limit of {limit}")]
    LimitExceeded { n: usize, limit: usize },
}
