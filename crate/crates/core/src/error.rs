use thiserror::Error;

/// Errors surfaced by conversion maps, enumerators, and character calculators.
///
/// Partial crystal operators do not use this type: an `E`/`F` that sends an
/// element to the zero symbol returns `None`, which is a value, not a failure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The multisegment does not satisfy the level bound for the given weight.
    #[error("multisegment is not cyclotomic for the given weight: {0}")]
    NotCyclotomic(String),

    /// Input is not of level-1 form (starts consecutive descending, each once,
    /// ends strictly decreasing).
    #[error("not a level-1 multisegment: {0}")]
    MalformedLevel1(String),

    /// Input segments do not all share the same end.
    #[error("not a single-end multisegment: {0}")]
    MalformedSingleEnd(String),

    /// A word was queried against a character of a different length.
    #[error("word length {got} does not match character length {expected}")]
    LengthMismatch { expected: usize, got: usize },

    /// A size parameter exceeds the configured enumeration bound.
    #[error("requested size {requested} exceeds bound {max}")]
    BoundExceeded { requested: usize, max: usize },

    /// A crystal-path transport step failed; on valid input this indicates a
    /// bug or an unsound weight, never an expected condition.
    #[error("transport failure: {0}")]
    TransportFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
