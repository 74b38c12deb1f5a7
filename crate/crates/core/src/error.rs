use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Error)]
pub enum GeometryError {
    /// A structure violates a construction invariant (bad index, duplicate
    /// line, and so on). The message names the offending line.
    #[error("malformed structure: {0}")]
    Malformed(String),

    /// An operation was called outside its domain (equal points for a
    /// collinearity query, mismatched universes, a non-hyperplane where a
    /// hyperplane is required, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// The input is too large for the search budget of the operation.
    #[error("capacity exceeded: {0}")]
    Capacity(String),
}

pub type Result<T> = std::result::Result<T, GeometryError>;
