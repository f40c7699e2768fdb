use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("index tuple has {got} components, tensor order is {order}")]
    EntryLength { order: usize, got: usize },

    #[error("order must be at least {min}, got {got}")]
    InvalidOrder { min: usize, got: usize },

    #[error("dimension must be at least 1")]
    EmptyDimension,

    #[error("vector entry {index} is not strictly positive ({value})")]
    NonpositiveEntry { index: usize, value: f64 },

    #[error("tensor has a negative entry {value} at {index:?}")]
    NegativeTensorEntry { index: Vec<usize>, value: f64 },

    #[error("diagonal entry {index} is zero")]
    ZeroDiagonal { index: usize },

    #[error("negative base {base} with fractional exponent {exponent}")]
    NegativeBaseFractionalPower { base: f64, exponent: f64 },

    #[error("unsupported product of orders {left} and {right}; only matrix cases are implemented")]
    UnsupportedProduct { left: usize, right: usize },

    #[error("split {split} out of range for dimension {dim}")]
    SplitOutOfRange { split: usize, dim: usize },

    #[error("invalid (k, s) = ({k}, {s}) for a generalized power construction")]
    InvalidPowerParams { k: usize, s: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("hypergraph is not odd-bipartite")]
    NotOddBipartite,

    #[error("Laplacian largest eigenvalue route requires even edge size, got k = {k}")]
    LaplacianOddOrder { k: usize },

    #[error("operator is not weakly irreducible; solve per component instead")]
    NotWeaklyIrreducible,

    #[error("eigenvalue {lambda} must exceed 1 for the closed-form Perron vector")]
    LambdaNotAboveOne { lambda: f64 },

    #[error("graph is not regular")]
    NotRegular,

    #[error("graph must be connected")]
    Disconnected,

    #[error("power iteration did not converge after {iterations} iterations; last bracket [{lower}, {upper}]")]
    NonConvergence {
        iterations: usize,
        lower: f64,
        upper: f64,
    },

    #[error("invalid solver configuration: {0}")]
    InvalidConfig(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
