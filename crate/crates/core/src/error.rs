use thiserror::Error;

/// Every fallible operation in the crate reports one of these.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("index out of range: {0}")]
    Index(String),
    #[error("range error: {0}")]
    Range(String),
    #[error("point ({0}, {1}) is outside the tiling domain")]
    Domain(i64, i64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular")]
    Singular,
    #[error("tiling is not tame: {0}")]
    NotTame(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("not admissible: {0}")]
    Admissibility(String),
    #[error("principal minor of order {1} on diagonal {0} vanishes")]
    SingularFringe(i64, i64),
    #[error("zero divisor at {0}")]
    Singularity(String),
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("incomplete initial data: {0}")]
    IncompleteData(String),
    #[error("no affine map found: {0}")]
    MappingNotFound(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
