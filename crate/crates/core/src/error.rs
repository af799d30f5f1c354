use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoreError {
    /// Map has no mass where the operation requires some.
    #[error("degenerate map: {0}")]
    DegenerateMap(String),

    #[error("validation error: {0}")]
    Validation(String),

    #[error("image error: {0}")]
    Image(#[from] image::ImageError),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
