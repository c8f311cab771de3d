use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("matrix is singular over GF(2)")]
    SingularMatrix,

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown architecture `{0}`")]
    UnknownArchitecture(String),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("architecture graph is disconnected")]
    DisconnectedGraph,

    #[error("path endpoints coincide at vertex {0}")]
    SameVertex(usize),

    #[error("distance {0} has no CNOT cost (must be at least 1)")]
    InvalidDistance(usize),

    #[error("invalid placement: {0}")]
    InvalidPlacement(String),

    #[error("{logical} logical qubits do not fit on {physical} physical vertices")]
    TooManyQubits { logical: usize, physical: usize },

    #[error("exhaustive search over {count} placements exceeds the bound {bound}")]
    InstanceTooLarge { count: u128, bound: u128 },

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("routed circuit failed verification: {0}")]
    VerificationFailed(String),

    #[error("benchmark circuit with seed {seed} failed: {source}")]
    BenchCircuit { seed: u64, source: Box<Error> },

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
