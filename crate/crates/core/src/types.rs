use ndarray::{Array2, Array3};
use serde::{Deserialize, Serialize};

use crate::error::CoreError;

/// Which corpus a screenshot was taken from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OriginDataset {
    GazeMining,
    ContrastiveWebsite,
    Fiwi,
    Synthetic,
}

/// Raster image of a rendered webpage, the model input.
///
/// Pixels are stored `(H, W, 3)` row-major, 8-bit RGB.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Screenshot {
    pixels: Array3<u8>,
    pub source_id: String,
    pub origin: OriginDataset,
}

impl Screenshot {
    pub fn new(
        pixels: Array3<u8>,
        source_id: impl Into<String>,
        origin: OriginDataset,
    ) -> Result<Self, CoreError> {
        let (h, w, c) = pixels.dim();
        if h == 0 || w == 0 {
            return Err(CoreError::Validation(format!(
                "screenshot must be at least 1x1, got {h}x{w}"
            )));
        }
        if c != 3 {
            return Err(CoreError::Validation(format!(
                "screenshot must have 3 channels, got {c}"
            )));
        }
        Ok(Self {
            pixels,
            source_id: source_id.into(),
            origin,
        })
    }

    pub fn pixels(&self) -> &Array3<u8> {
        &self.pixels
    }

    pub fn height(&self) -> usize {
        self.pixels.dim().0
    }

    pub fn width(&self) -> usize {
        self.pixels.dim().1
    }

    /// `(H, W)` of the raster.
    pub fn dims(&self) -> (usize, usize) {
        let (h, w, _) = self.pixels.dim();
        (h, w)
    }
}

/// One eye-gaze fixation: position in pixel coordinates plus its duration.
///
/// `x` is the pixel column, `y` the pixel row; both may be fractional.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FixationRecord {
    pub x: f64,
    pub y: f64,
    pub duration_ms: f64,
}

impl FixationRecord {
    pub fn new(x: f64, y: f64, duration_ms: f64) -> Self {
        Self { x, y, duration_ms }
    }

    /// Checks the fixation lies inside an `(H, W)` raster and has a
    /// non-negative duration.
    pub fn validate_for_dims(&self, dims: (usize, usize)) -> Result<(), CoreError> {
        let (h, w) = dims;
        if !(self.x >= 0.0 && self.x < w as f64 && self.y >= 0.0 && self.y < h as f64) {
            return Err(CoreError::Validation(format!(
                "fixation ({}, {}) outside {h}x{w} raster",
                self.x, self.y
            )));
        }
        if !(self.duration_ms >= 0.0) {
            return Err(CoreError::Validation(format!(
                "negative fixation duration {}",
                self.duration_ms
            )));
        }
        Ok(())
    }
}

/// Declared normalization state of a [`GazeHeatmap`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Normalization {
    /// Arbitrary non-negative values.
    Raw,
    /// Values sum to 1 (a probability distribution over pixels).
    SumToOne,
    /// Integer values in `[0, 255]`, as stored in label PNGs.
    Grayscale255,
}

/// Dense non-negative map of gaze probability over a raster.
///
/// Serves as both ground truth (rendered from fixations) and model output.
#[derive(Debug, Clone, PartialEq)]
pub struct GazeHeatmap {
    values: Array2<f64>,
    normalization: Normalization,
}

impl GazeHeatmap {
    pub fn new(values: Array2<f64>, normalization: Normalization) -> Result<Self, CoreError> {
        if values.is_empty() {
            return Err(CoreError::Validation("heatmap must be non-empty".into()));
        }
        for &v in values.iter() {
            if !v.is_finite() || v < 0.0 {
                return Err(CoreError::Validation(format!(
                    "heatmap values must be finite and non-negative, got {v}"
                )));
            }
        }
        match normalization {
            Normalization::Raw => {}
            Normalization::SumToOne => {
                let sum: f64 = values.sum();
                if (sum - 1.0).abs() > 1e-6 {
                    return Err(CoreError::Validation(format!(
                        "sum_to_one heatmap sums to {sum}"
                    )));
                }
            }
            Normalization::Grayscale255 => {
                for &v in values.iter() {
                    if v > 255.0 || v.fract() != 0.0 {
                        return Err(CoreError::Validation(format!(
                            "grayscale_255 heatmap requires integers in [0,255], got {v}"
                        )));
                    }
                }
            }
        }
        Ok(Self {
            values,
            normalization,
        })
    }

    pub fn values(&self) -> &Array2<f64> {
        &self.values
    }

    pub fn normalization(&self) -> Normalization {
        self.normalization
    }

    pub fn dims(&self) -> (usize, usize) {
        self.values.dim()
    }

    /// Row/column of the maximum value (first occurrence in row-major order).
    pub fn argmax(&self) -> (usize, usize) {
        let (_, w) = self.values.dim();
        let mut best = (0, f64::NEG_INFINITY);
        for (i, &v) in self.values.iter().enumerate() {
            if v > best.1 {
                best = (i, v);
            }
        }
        (best.0 / w, best.0 % w)
    }
}

/// What a binary element mask marks on the page.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MaskKind {
    Image,
    Text,
}

/// Per-pixel indicator of image or text element presence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryMask {
    values: Array2<u8>,
    pub kind: MaskKind,
}

impl BinaryMask {
    pub fn new(values: Array2<u8>, kind: MaskKind) -> Result<Self, CoreError> {
        if values.is_empty() {
            return Err(CoreError::Validation("mask must be non-empty".into()));
        }
        if values.iter().any(|&v| v > 1) {
            return Err(CoreError::Validation(
                "mask values must be 0 or 1".into(),
            ));
        }
        Ok(Self { values, kind })
    }

    pub fn zeros(dims: (usize, usize), kind: MaskKind) -> Self {
        Self {
            values: Array2::zeros(dims),
            kind,
        }
    }

    pub fn values(&self) -> &Array2<u8> {
        &self.values
    }

    pub fn dims(&self) -> (usize, usize) {
        self.values.dim()
    }

    pub fn count_ones(&self) -> usize {
        self.values.iter().filter(|&&v| v == 1).count()
    }
}

/// `{0,1}` map of true fixation locations, the NSS/AUC ground-truth unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixationBinaryMap {
    values: Array2<u8>,
}

impl FixationBinaryMap {
    pub fn new(values: Array2<u8>) -> Result<Self, CoreError> {
        if values.is_empty() {
            return Err(CoreError::Validation(
                "fixation map must be non-empty".into(),
            ));
        }
        if values.iter().any(|&v| v > 1) {
            return Err(CoreError::Validation(
                "fixation map values must be 0 or 1".into(),
            ));
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &Array2<u8> {
        &self.values
    }

    pub fn dims(&self) -> (usize, usize) {
        self.values.dim()
    }

    pub fn count_fixated(&self) -> usize {
        self.values.iter().filter(|&&v| v == 1).count()
    }
}

/// Train / validation / test assignment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Split {
    Train,
    Val,
    Test,
}

/// A screenshot bundled with its ground truth and layout masks.
#[derive(Debug, Clone, PartialEq)]
pub struct DatasetSample {
    pub screenshot: Screenshot,
    pub heatmap: GazeHeatmap,
    pub fixations: Vec<FixationRecord>,
    pub image_mask: BinaryMask,
    pub text_mask: BinaryMask,
    pub split: Split,
}

impl DatasetSample {
    /// Checks that all raster members share `H x W`, the mask kinds are
    /// correct, and every fixation lies inside the raster.
    pub fn validate(&self) -> Result<(), CoreError> {
        let dims = self.screenshot.dims();
        if self.heatmap.dims() != dims {
            return Err(CoreError::Validation(format!(
                "heatmap dims {:?} != screenshot dims {:?}",
                self.heatmap.dims(),
                dims
            )));
        }
        if self.image_mask.dims() != dims || self.text_mask.dims() != dims {
            return Err(CoreError::Validation(
                "mask dims do not match screenshot".into(),
            ));
        }
        if self.image_mask.kind != MaskKind::Image {
            return Err(CoreError::Validation("image_mask has wrong kind".into()));
        }
        if self.text_mask.kind != MaskKind::Text {
            return Err(CoreError::Validation("text_mask has wrong kind".into()));
        }
        for f in &self.fixations {
            f.validate_for_dims(dims)?;
        }
        Ok(())
    }
}
