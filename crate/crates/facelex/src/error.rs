use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("vertex has {found} coordinates, document declares {expected}")]
    Dimension { expected: usize, found: usize },
    #[error(transparent)]
    Core(#[from] facelex_core::Error),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("bad argument: {0}")]
    Argument(String),
}
