//! PNG serialization: heatmaps and masks as 8-bit grayscale, screenshots as
//! 24-bit RGB.

use std::path::Path;

use image::{GrayImage, RgbImage};
use ndarray::{Array2, Array3};

use crate::error::CoreError;
use crate::ops::to_grayscale;
use crate::types::{BinaryMask, GazeHeatmap, MaskKind, Normalization, OriginDataset, Screenshot};

/// Writes a heatmap as a single-channel 8-bit PNG. Maps not already in
/// `grayscale_255` form are min-max scaled first.
pub fn save_heatmap_png(map: &GazeHeatmap, path: &Path) -> Result<(), CoreError> {
    let gray = match map.normalization() {
        Normalization::Grayscale255 => map.clone(),
        _ => to_grayscale(map),
    };
    let (h, w) = gray.dims();
    let mut img = GrayImage::new(w as u32, h as u32);
    for ((r, c), &v) in gray.values().indexed_iter() {
        img.put_pixel(c as u32, r as u32, image::Luma([v as u8]));
    }
    img.save(path)?;
    Ok(())
}

pub fn load_heatmap_png(path: &Path) -> Result<GazeHeatmap, CoreError> {
    let img = image::open(path)?.into_luma8();
    let (w, h) = img.dimensions();
    let mut values = Array2::zeros((h as usize, w as usize));
    for (c, r, p) in img.enumerate_pixels() {
        values[[r as usize, c as usize]] = p.0[0] as f64;
    }
    GazeHeatmap::new(values, Normalization::Grayscale255)
}

/// Writes a binary mask as a single-channel 8-bit PNG with 1 stored as 255.
pub fn save_mask_png(mask: &BinaryMask, path: &Path) -> Result<(), CoreError> {
    let (h, w) = mask.dims();
    let mut img = GrayImage::new(w as u32, h as u32);
    for ((r, c), &v) in mask.values().indexed_iter() {
        img.put_pixel(c as u32, r as u32, image::Luma([if v == 1 { 255 } else { 0 }]));
    }
    img.save(path)?;
    Ok(())
}

/// Reads a mask PNG; values >= 128 count as 1.
pub fn load_mask_png(path: &Path, kind: MaskKind) -> Result<BinaryMask, CoreError> {
    let img = image::open(path)?.into_luma8();
    let (w, h) = img.dimensions();
    let mut values = Array2::zeros((h as usize, w as usize));
    for (c, r, p) in img.enumerate_pixels() {
        values[[r as usize, c as usize]] = u8::from(p.0[0] >= 128);
    }
    BinaryMask::new(values, kind)
}

pub fn save_screenshot_png(shot: &Screenshot, path: &Path) -> Result<(), CoreError> {
    let (h, w) = shot.dims();
    let mut img = RgbImage::new(w as u32, h as u32);
    for r in 0..h {
        for c in 0..w {
            let px = [
                shot.pixels()[[r, c, 0]],
                shot.pixels()[[r, c, 1]],
                shot.pixels()[[r, c, 2]],
            ];
            img.put_pixel(c as u32, r as u32, image::Rgb(px));
        }
    }
    img.save(path)?;
    Ok(())
}

pub fn load_screenshot_png(
    path: &Path,
    source_id: impl Into<String>,
    origin: OriginDataset,
) -> Result<Screenshot, CoreError> {
    let img = image::open(path)?.into_rgb8();
    let (w, h) = img.dimensions();
    let mut pixels = Array3::zeros((h as usize, w as usize, 3));
    for (c, r, p) in img.enumerate_pixels() {
        for ch in 0..3 {
            pixels[[r as usize, c as usize, ch]] = p.0[ch];
        }
    }
    Screenshot::new(pixels, source_id, origin)
}
