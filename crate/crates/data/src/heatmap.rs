//! Ground-truth heatmap rendering from fixation records.

use ndarray::Array2;
use webgaze_core::{FixationRecord, GazeHeatmap, Normalization};

use crate::error::DataError;

/// Duration-weighted Gaussian splat of the fixations, before min-max
/// scaling. Each fixation contributes
/// `duration_ms * exp(-((px-x)^2 + (py-y)^2) / (2 sigma^2))`
/// within a box window of half-width `3 * sigma_px`.
pub fn render_heatmap_raw(
    fixations: &[FixationRecord],
    dims: (usize, usize),
    sigma_px: f64,
) -> Result<Array2<f64>, DataError> {
    if !(sigma_px > 0.0) {
        return Err(DataError::InvalidParameter(format!(
            "sigma_px must be positive, got {sigma_px}"
        )));
    }
    let (h, w) = dims;
    let mut acc = Array2::zeros((h, w));
    let radius = 3.0 * sigma_px;
    let inv_two_sigma_sq = 1.0 / (2.0 * sigma_px * sigma_px);

    for f in fixations {
        if !(f.x >= 0.0 && f.x < w as f64 && f.y >= 0.0 && f.y < h as f64) {
            return Err(DataError::OutOfBounds {
                x: f.x,
                y: f.y,
                h,
                w,
            });
        }
        if !(f.duration_ms >= 0.0) {
            return Err(DataError::InvalidParameter(format!(
                "negative fixation duration {}",
                f.duration_ms
            )));
        }
        let r_lo = ((f.y - radius).ceil().max(0.0)) as usize;
        let r_hi = ((f.y + radius).floor().min((h - 1) as f64)) as usize;
        let c_lo = ((f.x - radius).ceil().max(0.0)) as usize;
        let c_hi = ((f.x + radius).floor().min((w - 1) as f64)) as usize;
        for r in r_lo..=r_hi {
            let dy = r as f64 - f.y;
            for c in c_lo..=c_hi {
                let dx = c as f64 - f.x;
                acc[[r, c]] += f.duration_ms * (-(dx * dx + dy * dy) * inv_two_sigma_sq).exp();
            }
        }
    }
    Ok(acc)
}

/// Renders fixations to a `raw`-normalized heatmap, min-max scaled to
/// `[0, 1]`. An empty fixation list yields an all-zero map.
pub fn render_heatmap(
    fixations: &[FixationRecord],
    dims: (usize, usize),
    sigma_px: f64,
) -> Result<GazeHeatmap, DataError> {
    let acc = render_heatmap_raw(fixations, dims, sigma_px)?;
    let min = acc.iter().cloned().fold(f64::INFINITY, f64::min);
    let max = acc.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let scaled = if max == min {
        if max > 0.0 {
            acc.mapv(|_| 1.0)
        } else {
            Array2::zeros(dims)
        }
    } else {
        acc.mapv(|v| (v - min) / (max - min))
    };
    Ok(GazeHeatmap::new(scaled, Normalization::Raw)?)
}
