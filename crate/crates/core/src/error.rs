use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("a graph needs at least one vertex")]
    NoVertices,

    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge ({i}, {j}) is already present; multiple edges are not allowed")]
    DuplicateEdge { i: usize, j: usize },

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("matrix rows have inconsistent lengths")]
    Ragged,

    #[error("tolerance must be a positive finite number, got {0}")]
    InvalidTolerance(f64),

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off:e})")]
    NoConvergence { sweeps: usize, off: f64 },

    #[error("operation needs at least {min} vertices, graph has {n}")]
    TooFewVertices { n: usize, min: usize },

    #[error("operation is defined for loopless graphs only")]
    HasSelfLoops,

    #[error("order {order} exceeds the supported maximum of {max}")]
    OrderTooLarge { order: usize, max: usize },

    #[error("matrix entry ({row}, {col}) = {value} is not an integer")]
    NonIntegerEntry { row: usize, col: usize, value: f64 },

    #[error("root isolation found {found} of {expected} roots in [{lo}, {hi}]")]
    BracketFailure {
        found: usize,
        expected: usize,
        lo: f64,
        hi: f64,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("probability {name} = {value} is outside [0, 1]")]
    InvalidProbability { name: &'static str, value: f64 },

    #[error("no graph satisfying the constraint after {attempts} attempts (seed {seed})")]
    RetryCapExhausted { attempts: usize, seed: u64 },

    #[error("exhaustive enumeration supports n <= {max}, got {n}")]
    EnumerationTooLarge { n: usize, max: usize },
}
