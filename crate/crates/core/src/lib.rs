//! Domain types and map-normalization primitives shared by the webgaze crates.
//!
//! Everything here is a pure function over immutable inputs, so all operations
//! are safe to call from any number of concurrent workers.

mod error;
mod io;
mod ops;
mod resize;
mod types;

pub use error::CoreError;
pub use io::{
    load_heatmap_png, load_mask_png, load_screenshot_png, save_heatmap_png, save_mask_png,
    save_screenshot_png,
};
pub use ops::{normalize_sum, standardize, to_grayscale, Standardized};
pub use resize::{bilinear_resize, nearest_resize_u8};
pub use types::{
    BinaryMask, DatasetSample, FixationBinaryMap, FixationRecord, GazeHeatmap, MaskKind,
    Normalization, OriginDataset, Screenshot, Split,
};
