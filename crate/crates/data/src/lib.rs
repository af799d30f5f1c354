//! Dataset curation pipeline: empty-screenshot filtering, black-region
//! cropping, deduplication, fixation-to-heatmap rendering, split assignment,
//! and export into the unified four-subfolder layout, plus a synthetic
//! sample generator for desk-scale runs.
//!
//! Per-sample stages are pure and order-independent; deduplication and split
//! assignment are sequential barriers over the whole collection.

mod curate;
mod dedup;
mod error;
mod export;
mod filter;
mod heatmap;
mod ingest;
mod split;
mod synth;
mod types;

pub use curate::{curate, curate_to_dir, ingest_dataset_root, CurateConfig, IngestRecord};
pub use dedup::{dedup_screenshot_indices, deduplicate, dhash, DedupMode};
pub use error::DataError;
pub use export::{export_dataset, import_dataset, Manifest, ManifestEntry};
pub use filter::{black_fraction, content_bounding_box, crop_black_regions, filter_empty, BLACK_LEVEL};
pub use heatmap::{render_heatmap, render_heatmap_raw};
pub use ingest::read_fixations_csv;
pub use split::{split_assign, split_counts, split_dataset};
pub use synth::{synth_generate, synth_generate_detailed, SynthLayout, SynthSample};
pub use types::{CurationReport, SplitCounts, SplitSpec};
