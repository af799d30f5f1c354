//! Image-mask and text-mask generation for webpage screenshots.
//!
//! Detection is abstracted behind [`ElementDetector`] so pretrained
//! UI-element or scene-text models can be plugged in; the crate ships a
//! deterministic heuristic fallback for each mask kind.

mod boxes;
mod detector;
mod error;
mod heuristic;

pub use boxes::{boxes_from_json, boxes_to_json, boxes_to_mask, BoundingBox};
pub use detector::{generate_image_mask, generate_text_mask, DetectorError, ElementDetector};
pub use error::MaskError;
pub use heuristic::{heuristic_detector, HeuristicImageDetector, HeuristicTextDetector};
