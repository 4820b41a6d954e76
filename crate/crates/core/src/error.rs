use thiserror::Error;

/// Every failure the library can report.
///
/// The `Display` form starts with a stable, machine-readable kind
/// (`size-mismatch:`, `model-violation:` ...) so the command-line driver can
/// print it verbatim as a one-line error.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid-part: partition parts must be positive, got {0}")]
    InvalidPart(i64),

    #[error("size-mismatch: partitions of {left} and {right} are incomparable")]
    IncomparableSizes { left: usize, right: usize },

    #[error("empty-input: {0}")]
    EmptyInput(&'static str),

    #[error("dimension-mismatch: {0}")]
    DimensionMismatch(String),

    #[error("domain-mismatch: {0}")]
    DomainMismatch(String),

    #[error("not-square: matrix is {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("not-nilpotent: matrix is not nilpotent")]
    NotNilpotent,

    #[error("not-unipotent: matrix minus identity is not nilpotent")]
    NotUnipotent,

    #[error("unsupported-domain: {0}")]
    UnsupportedDomain(String),

    #[error("singular: matrix is not invertible")]
    Singular,

    #[error("invalid-modulus: {0} is not a prime below 2^32")]
    InvalidModulus(u64),

    #[error("invalid-argument: {0}")]
    InvalidArgument(String),

    #[error("size-mismatch: {0}")]
    SizeMismatch(String),

    #[error("unknown-point: {0}")]
    UnknownPoint(String),

    #[error("unknown-component: {0}")]
    UnknownComponent(String),

    #[error("model-violation: point {0}")]
    ModelViolation(String),

    #[error("resource-limit: {required} required, cap is {cap}")]
    ResourceLimit { required: String, cap: u128 },

    #[error("parse: {0}")]
    Parse(String),

    #[error("io: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
