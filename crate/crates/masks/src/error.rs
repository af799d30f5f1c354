use thiserror::Error;

use crate::detector::DetectorError;

#[derive(Debug, Error)]
pub enum MaskError {
    #[error("box ({x0},{y0})..({x1},{y1}) outside {h}x{w} raster")]
    OutOfBounds {
        x0: usize,
        y0: usize,
        x1: usize,
        y1: usize,
        h: usize,
        w: usize,
    },

    #[error("invalid box: {0}")]
    InvalidBox(String),

    #[error("detector produces {got:?} masks, {expected:?} required")]
    WrongDetectorKind {
        expected: webgaze_core::MaskKind,
        got: webgaze_core::MaskKind,
    },

    #[error(transparent)]
    Detector(#[from] DetectorError),

    #[error("serialization: {0}")]
    Serialization(String),

    #[error(transparent)]
    Core(#[from] webgaze_core::CoreError),
}
