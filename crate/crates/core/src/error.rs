//! Error type shared by the whole crate.

/// Errors surfaced by the exact-arithmetic and search layers.
///
/// `Inconclusive` is deliberately distinct from failure: a splitting pattern
/// at a prime dividing the discriminant, or a ramification check without an
/// Eisenstein witness, must never be reported as a definite answer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("polynomial is not squarefree")]
    NotSquarefree,

    /// An operation produced an element outside the working ring Z[θ][1/2],
    /// i.e. a denominator with an odd prime factor.
    #[error("element is not representable in Z[θ][1/2]: {0}")]
    NotRepresentable(String),

    /// A ramified-prime context could not be established for the presentation.
    #[error("invalid prime context: {0}")]
    InvalidContext(String),

    #[error("inconclusive: {0}")]
    Inconclusive(String),

    /// An internal invariant failed. These signal arithmetic bugs and are
    /// asserted loudly instead of being silently repaired.
    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
