use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("graph is not a split graph")]
    NotSplit,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("instance has {size} vertices, above the oracle cap of {cap} (raise it with --oracle-cap)")]
    OracleCapExceeded { size: usize, cap: usize },

    #[error("instance has {size} edges, above the oracle cap of {cap} (raise it with --oracle-edge-cap)")]
    OracleEdgeCapExceeded { size: usize, cap: usize },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("generator failed: {0}")]
    Generator(String),

    #[error("certificate violated: {0}")]
    Certificate(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
