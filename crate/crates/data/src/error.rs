use thiserror::Error;

#[derive(Debug, Error)]
pub enum DataError {
    /// A fully black screenshot cannot be cropped to content.
    #[error("degenerate screenshot: no non-black content")]
    DegenerateScreenshot,

    /// A fixation lies outside the raster it belongs to.
    #[error("fixation ({x}, {y}) outside {h}x{w} raster")]
    OutOfBounds { x: f64, y: f64, h: usize, w: usize },

    /// Sample member missing or inconsistent at export time.
    #[error("validation failed for member {member:?} of sample {stem:?}")]
    Validation { member: String, stem: String },

    #[error("duplicate sample stem {0:?}")]
    DuplicateStem(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid split spec: {0}")]
    InvalidSplitSpec(String),

    #[error("csv error: {0}")]
    Csv(String),

    #[error("json error: {0}")]
    Json(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Core(#[from] webgaze_core::CoreError),

    #[error(transparent)]
    Mask(#[from] webgaze_masks::MaskError),
}
