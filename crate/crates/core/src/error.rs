//! Error type shared by every module of the crate.

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Failures reported by graph construction, linear algebra and detection routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    Dimension { expected: usize, actual: usize },

    #[error("node id {id} out of range for {n} nodes")]
    NodeOutOfRange { id: usize, n: usize },

    #[error("self-loop at node {0}")]
    SelfLoop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("graph has {n} nodes, above the brute-force cap of {cap}")]
    SizeLimit { n: usize, cap: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("not a Gremban graph: {0}")]
    NotGremban(String),

    #[error("subset is not Gremban-symmetric: {0}")]
    SymmetryViolation(String),

    #[error("matrix is not symmetric (max deviation {0:e})")]
    Asymmetric(f64),

    #[error("matrix order {0} is odd")]
    OddOrder(usize),

    #[error("node {0} has degree zero")]
    DegenerateDegree(usize),

    #[error("eigenvector tag is mixed; cannot threshold")]
    Ambiguous,

    #[error("value {value} outside the convergence disk of radius {radius}")]
    Divergent { value: f64, radius: f64 },

    #[error("integer overflow while computing walk counts at power {0}")]
    Overflow(usize),

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
