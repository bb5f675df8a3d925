use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown molecule `{0}`")]
    UnknownMolecule(String),

    #[error("malformed molecule file: {0}")]
    MalformedFile(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },

    #[error("node {node} out of range 1..={node_count}")]
    NodeOutOfRange { node: usize, node_count: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error(
        "singular or ill-conditioned matrix (condition estimate {condition:e}, limit {limit:e})"
    )]
    IllConditioned { condition: f64, limit: f64 },

    #[error("eigendecomposition failed: {0}")]
    Eigen(String),

    #[error("walk operator is not unitary: {0}")]
    NonUnitary(String),

    #[error("sampling grids differ between {0} and {1}")]
    GridMismatch(String, String),

    #[error("empty series")]
    EmptySeries,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors caused by bad input or configuration rather than by
    /// a failed computation.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::UnknownMolecule(_)
                | Error::MalformedFile(_)
                | Error::InvalidGraph(_)
                | Error::Disconnected { .. }
                | Error::NodeOutOfRange { .. }
                | Error::DimensionMismatch(_)
                | Error::InvalidParameter(_)
                | Error::GridMismatch(..)
        )
    }
}
