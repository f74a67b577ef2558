//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Everything that can go wrong when computing invariants or building
/// flat models.
#[derive(Debug, Error)]
pub enum Error {
    /// The input is not a positive discriminant (must be > 0 and ≡ 0, 1 mod 4).
    #[error("{0} is not a discriminant: a discriminant is positive and congruent to 0 or 1 mod 4")]
    NotADiscriminant(i64),

    /// A precondition on a numeric argument was violated.
    #[error("domain error: {0}")]
    Domain(String),

    /// Square discriminants D = d² have extra boundary components and are out of scope.
    #[error("square discriminant {0} is out of scope")]
    SquareDiscriminant(u64),

    /// The orbifold Euler formula did not solve to a nonnegative integer,
    /// which means two of the invariant computations disagree.
    #[error("orbifold Euler formula for D={d} solves to non-integral genus {value}")]
    NonIntegralGenus { d: u64, value: String },

    /// An internal consistency check failed; this is a bug, not bad input.
    #[error("internal error: {0}")]
    Internal(String),

    /// A polygon parameter outside the embeddability region (or zero).
    #[error("degenerate polygon parameter: {0}")]
    DegenerateParameter(String),

    /// Edge identifications of an unfolded cover could not be matched by translation.
    #[error("edge gluing failed: {0}")]
    Gluing(String),

    /// A corpus file could not be parsed or fails its format invariants.
    #[error("corpus error: {0}")]
    Corpus(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
