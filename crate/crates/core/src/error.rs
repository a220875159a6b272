//! Error taxonomy shared by the whole crate.

use thiserror::Error;

/// Errors produced by connective evaluation, evolution and the solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input value lies outside the domain of the requested operation
    /// (outside `[0,1]`, outside `{0,1}` for the boolean family, a seed of
    /// zero, a rule whose quiescent state is nonzero, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A root or limit solver could not produce a certified answer
    /// (invalid bracket, no root in range, uniqueness violated, ...).
    #[error("solver error: {0}")]
    Solver(String),

    /// The operation has no meaning for this logic family or numeric
    /// backend (no polynomial form, no exact p-th root, ...).
    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn solver(msg: impl Into<String>) -> Self {
        Error::Solver(msg.into())
    }

    pub fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
