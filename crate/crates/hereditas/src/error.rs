use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid ring: {0}")]
    BadRing(String),
    #[error("invalid input: {0}")]
    BadInput(String),
    #[error("unsupported operation: {0}")]
    Unsupported(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
