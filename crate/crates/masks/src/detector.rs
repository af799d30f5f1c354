use thiserror::Error;
use webgaze_core::{BinaryMask, MaskKind, Screenshot};

use crate::boxes::{boxes_to_mask, BoundingBox};
use crate::error::MaskError;

/// Detector failure with its underlying cause, so callers can decide whether
/// to fall back to the heuristic detector.
#[derive(Debug, Error)]
#[error("detector failure: {message}")]
pub struct DetectorError {
    pub message: String,
    #[source]
    pub source: Option<Box<dyn std::error::Error + Send + Sync>>,
}

impl DetectorError {
    pub fn new(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
            source: None,
        }
    }

    pub fn with_source(
        message: impl Into<String>,
        source: Box<dyn std::error::Error + Send + Sync>,
    ) -> Self {
        Self {
            message: message.into(),
            source: Some(source),
        }
    }
}

/// A pluggable element detector: finds bounding boxes of one element kind on
/// a screenshot. Stand-in for external UI-element and scene-text models.
pub trait ElementDetector {
    fn kind_produced(&self) -> MaskKind;

    /// Returned boxes must lie within the screenshot bounds.
    fn detect(&self, shot: &Screenshot) -> Result<Vec<BoundingBox>, DetectorError>;
}

fn generate_mask(
    shot: &Screenshot,
    detector: &dyn ElementDetector,
    kind: MaskKind,
) -> Result<BinaryMask, MaskError> {
    if detector.kind_produced() != kind {
        return Err(MaskError::WrongDetectorKind {
            expected: kind,
            got: detector.kind_produced(),
        });
    }
    let boxes = detector.detect(shot)?;
    boxes_to_mask(&boxes, shot.dims(), kind)
}

/// Runs an image-element detector and rasterizes its boxes into a mask with
/// `kind = image`.
pub fn generate_image_mask(
    shot: &Screenshot,
    detector: &dyn ElementDetector,
) -> Result<BinaryMask, MaskError> {
    generate_mask(shot, detector, MaskKind::Image)
}

/// Runs a text detector and rasterizes its boxes into a mask with
/// `kind = text`.
pub fn generate_text_mask(
    shot: &Screenshot,
    detector: &dyn ElementDetector,
) -> Result<BinaryMask, MaskError> {
    generate_mask(shot, detector, MaskKind::Text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::Array3;
    use webgaze_core::OriginDataset;

    struct FixedDetector {
        kind: MaskKind,
        boxes: Vec<BoundingBox>,
    }

    impl ElementDetector for FixedDetector {
        fn kind_produced(&self) -> MaskKind {
            self.kind
        }
        fn detect(&self, _shot: &Screenshot) -> Result<Vec<BoundingBox>, DetectorError> {
            Ok(self.boxes.clone())
        }
    }

    struct FailingDetector;

    impl ElementDetector for FailingDetector {
        fn kind_produced(&self) -> MaskKind {
            MaskKind::Image
        }
        fn detect(&self, _shot: &Screenshot) -> Result<Vec<BoundingBox>, DetectorError> {
            Err(DetectorError::new("model file missing"))
        }
    }

    fn shot(h: usize, w: usize) -> Screenshot {
        Screenshot::new(Array3::zeros((h, w, 3)), "t", OriginDataset::Synthetic).unwrap()
    }

    #[test]
    fn whole_page_box_gives_all_ones_mask() {
        let det = FixedDetector {
            kind: MaskKind::Image,
            boxes: vec![BoundingBox::new(MaskKind::Image, 0, 0, 8, 6).unwrap()],
        };
        let m = generate_image_mask(&shot(6, 8), &det).unwrap();
        assert_eq!(m.count_ones(), 48);
        assert_eq!(m.kind, MaskKind::Image);
    }

    #[test]
    fn kind_mismatch_is_rejected() {
        let det = FixedDetector {
            kind: MaskKind::Text,
            boxes: vec![],
        };
        assert!(matches!(
            generate_image_mask(&shot(4, 4), &det),
            Err(MaskError::WrongDetectorKind { .. })
        ));
    }

    #[test]
    fn detector_failure_carries_cause() {
        let err = generate_image_mask(&shot(4, 4), &FailingDetector).unwrap_err();
        match err {
            MaskError::Detector(e) => assert!(e.message.contains("model file missing")),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn out_of_bounds_detection_is_rejected() {
        let det = FixedDetector {
            kind: MaskKind::Image,
            boxes: vec![BoundingBox::new(MaskKind::Image, 0, 0, 9, 6).unwrap()],
        };
        assert!(matches!(
            generate_image_mask(&shot(6, 8), &det),
            Err(MaskError::OutOfBounds { .. })
        ));
    }
}
