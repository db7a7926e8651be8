use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },

    #[error("operation is undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("polynomials are not coprime: gcd = {gcd}")]
    NotCoprime { gcd: String },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("classes live on different Grassmannians: G({0},{1}) and G({2},{3})")]
    MismatchedGrassmannian(usize, usize, usize, usize),

    #[error("ideal is not zero-dimensional: {0}")]
    NotZeroDimensional(String),

    #[error("unsupported Dynkin type: {0}")]
    UnsupportedType(String),

    #[error("invalid support partition: {0}")]
    InvalidSupport(String),

    #[error("fano index mismatch: collection has {collection}, variety has {variety}")]
    FanoIndexMismatch { collection: usize, variety: usize },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("no Borel-Weil-Bott backend for {0}")]
    UnsupportedBackend(String),

    #[error("unknown collection: {0}")]
    UnknownCollection(String),

    #[error("invalid data file {path}: {msg}")]
    DataFile { path: String, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
