use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("domain error: {0}")]
    Domain(String),

    /// An enumeration or expansion bound was exceeded. Kept distinct from
    /// `Domain` so verification runs can report a capped check without
    /// treating it as a failed one.
    #[error("cap exceeded: {0}")]
    CapExceeded(String),

    #[error("unknown identifier: {0}")]
    UnknownId(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
