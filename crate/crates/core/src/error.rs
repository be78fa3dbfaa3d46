use thiserror::Error;

/// Errors raised across the workbench.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
    /// A ring or module failed one of its axioms.
    #[error("{axiom} fails at indices {indices:?}")]
    Axiom {
        axiom: &'static str,
        indices: Vec<usize>,
    },
    #[error("lattice containment fails: vector {witness} is not in the larger lattice")]
    NotContained { witness: String },
    #[error("cap exceeded: {what} needs {needed}, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        needed: String,
        cap: usize,
    },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    /// A certificate did not reproduce on recomputation.
    #[error("certificate rejected: {0}")]
    Certificate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
