//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by graph construction, generators, exact linear algebra,
/// and bound evaluation.
#[derive(Debug, Error)]
pub enum Error {
    #[error("a bipartite graph needs at least one vertex on each side")]
    EmptySide,

    #[error("vertex index {index} out of range for side of size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("duplicate edge ({i}, {j})")]
    DuplicateEdge { i: usize, j: usize },

    #[error("graph has {total} vertices; the bit-set representation caps n + m at {max}")]
    TooManyVertices { total: usize, max: usize },

    #[error("partition must have at least one part")]
    EmptyPartition,

    #[error("partition parts must be positive and weakly decreasing")]
    InvalidPartition,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph has {edges} edges; the enumeration guardrail is {max} (override with TREECOUNT_MAX_EDGES)")]
    TooLarge { edges: usize, max: usize },

    #[error("exhaustive search over {cells} adjacency cells exceeds the 2^20 pattern guardrail")]
    SearchTooLarge { cells: usize },

    #[error("infeasible generator spec: {0}")]
    InfeasibleSpec(String),

    #[error("no connected graph found after {attempts} attempts")]
    ConnectivityRetriesExhausted { attempts: usize },

    #[error("matrix is not symmetric")]
    NonSymmetric,

    #[error("Jacobi iteration did not converge")]
    NoConvergence,

    #[error("matrix is not positive semidefinite")]
    NotPsd,

    #[error("matrix is not singular")]
    NotSingular,

    #[error("interpolated determinant has a non-integer coefficient (internal bug)")]
    NonIntegerInterpolation,

    #[error("{0}")]
    TooSmall(String),

    #[error("invalid theta: {0}")]
    InvalidTheta(String),

    #[error("theta must be strictly less than the first-class degree a")]
    ThetaGeqA,

    #[error("infeasible degree threshold: {0}")]
    InfeasibleK(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
