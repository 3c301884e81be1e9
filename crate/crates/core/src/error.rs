use thiserror::Error;

/// Failure modes shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The graph admits no satisfying permutation; carries one witness cycle
    /// `v1 -> v2 -> ... -> vk -> v1` as the vertex list `[v1, ..., vk]`.
    #[error("graph contains an oriented cycle: {cycle:?}")]
    CyclicGraph { cycle: Vec<u32> },

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: u32, n: usize },

    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: u32 },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("sequence is not a bijection on 1..=n")]
    NotABijection,

    #[error("n={n} exceeds enumeration limit {limit}")]
    LimitExceeded { n: usize, limit: usize },

    /// The requested family is empty. Singleton families are not an error;
    /// diameter operations report 0 for them.
    #[error("family is empty")]
    NotAdmissible,

    /// The element of maximum or minimum inversion number is not unique, so
    /// the two-endpoint diameter formula does not apply.
    #[error("extreme inversion-number element is not unique")]
    NonUniqueExtremes,

    /// Defensive error for states that are unreachable on valid inputs.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
