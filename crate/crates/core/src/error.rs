use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The word is not a permutation of `1..=n`, or is empty.
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    /// An argument fell outside the documented domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("{0} is not a Baxter permutation")]
    NotBaxter(String),

    #[error("word and weights differ in length ({word} vs {weights})")]
    LengthMismatch { word: usize, weights: usize },

    #[error("invalid Motzkin word: {0}")]
    InvalidWord(String),

    #[error("malformed history: {0}")]
    MalformedHistory(String),

    /// Consecutive middle-path step starts are not a unit step apart.
    #[error("malformed middle path at step {step}: jump ({dx},{dy}) is not a unit step")]
    MalformedMiddle { step: usize, dx: i64, dy: i64 },

    #[error("path triple is not in the image: {0}")]
    NotInImage(String),

    #[error("path triple violates an invariant: {0}")]
    InvalidTriple(String),

    #[error("inexact polynomial division: {0}")]
    InexactDivision(String),

    #[error("parse error: {0}")]
    Parse(String),
}
