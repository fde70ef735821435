use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph has no nodes")]
    EmptyGraph,

    #[error("node index {node} out of range for graph with {n} nodes")]
    NodeOutOfRange { node: usize, n: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("{measure} did not converge after {iterations} iterations (residual {residual:e}){hint}")]
    NonConvergence {
        measure: &'static str,
        iterations: usize,
        residual: f64,
        hint: &'static str,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Computation failures (as opposed to bad input) map to a distinct exit code in the CLI.
    pub fn is_computational(&self) -> bool {
        matches!(self, Error::NonConvergence { .. })
    }
}
