use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid geometry: {0}")]
    Geometry(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("precision too small: {0}")]
    Precision(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
