use thiserror::Error;

/// Errors reported by the library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument violates a documented precondition (bad node id, crossing
    /// laminar sets, negative weight, degenerate instance, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The digraph has no spanning arborescence rooted at the requested node.
    #[error("no spanning arborescence rooted at node {0}")]
    NoArborescence(usize),

    /// An exhaustive reference computation was asked to run on an instance
    /// beyond its size guard.
    #[error("instance too large for exhaustive search: {0}")]
    ResourceLimit(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
