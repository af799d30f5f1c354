//! Evaluation metrics for eye-gaze heatmap prediction: NSS, AUC-Judd, CC,
//! and KLD (the latter doubling as the training loss).
//!
//! All functions are pure; per-sample evaluation parallelizes trivially.

mod error;
mod report;

pub use error::MetricError;
pub use report::{ExcludedSample, MetricReport, SampleMetrics};

use webgaze_core::{standardize, FixationBinaryMap, GazeHeatmap};

/// Default regularization constant for [`kld`], small enough that the KLD of
/// identical distributions stays below 1e-5.
pub const DEFAULT_EPSILON: f64 = 1e-7;

/// Denominator convention for [`nss`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NssMode {
    /// Mean standardized saliency over the fixated pixels (the standard NSS
    /// definition).
    Standard,
    /// Sum of standardized saliency at fixated pixels divided by the total
    /// pixel count, as the formula is typeset in the source material.
    PaperLiteral,
}

fn check_dims(a: (usize, usize), b: (usize, usize)) -> Result<(), MetricError> {
    if a != b {
        return Err(MetricError::ShapeMismatch {
            expected: a,
            got: b,
        });
    }
    Ok(())
}

/// Normalized scanpath saliency: the prediction is standardized to zero mean
/// and unit variance, then averaged at fixated locations.
///
/// A constant prediction cannot be standardized and scores 0 by convention.
pub fn nss(
    pred: &GazeHeatmap,
    fixmap: &FixationBinaryMap,
    mode: NssMode,
) -> Result<f64, MetricError> {
    check_dims(pred.dims(), fixmap.dims())?;
    let n_fix = fixmap.count_fixated();
    if n_fix == 0 {
        return Err(MetricError::NoFixations);
    }
    let s = standardize(pred);
    if s.degenerate {
        return Ok(0.0);
    }
    let sum: f64 = s
        .values
        .iter()
        .zip(fixmap.values().iter())
        .filter(|(_, &b)| b == 1)
        .map(|(&z, _)| z)
        .sum();
    let denom = match mode {
        NssMode::Standard => n_fix as f64,
        NssMode::PaperLiteral => s.values.len() as f64,
    };
    Ok(sum / denom)
}

/// AUC-Judd: ROC area with fixated pixels as positives and thresholds taken
/// at the distinct prediction values of the fixated pixels, swept descending.
/// The curve is closed with (0,0) and (1,1) and integrated by the trapezoidal
/// rule.
pub fn auc_judd(pred: &GazeHeatmap, fixmap: &FixationBinaryMap) -> Result<f64, MetricError> {
    check_dims(pred.dims(), fixmap.dims())?;
    let n_total = pred.values().len();
    let n_fix = fixmap.count_fixated();
    if n_fix == 0 || n_fix == n_total {
        return Err(MetricError::DegenerateGroundTruth);
    }

    let mut fix_vals = Vec::with_capacity(n_fix);
    let mut non_vals = Vec::with_capacity(n_total - n_fix);
    for (&v, &b) in pred.values().iter().zip(fixmap.values().iter()) {
        if b == 1 {
            fix_vals.push(v);
        } else {
            non_vals.push(v);
        }
    }
    fix_vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    non_vals.sort_by(|a, b| a.partial_cmp(b).unwrap());

    let mut thresholds = fix_vals.clone();
    thresholds.dedup();

    // Counts of elements >= t via partition_point on the ascending arrays.
    let count_ge = |sorted: &[f64], t: f64| sorted.len() - sorted.partition_point(|&v| v < t);

    let mut curve = Vec::with_capacity(thresholds.len() + 2);
    curve.push((0.0, 0.0));
    for &t in thresholds.iter().rev() {
        let tpr = count_ge(&fix_vals, t) as f64 / n_fix as f64;
        let fpr = count_ge(&non_vals, t) as f64 / (n_total - n_fix) as f64;
        curve.push((fpr, tpr));
    }
    curve.push((1.0, 1.0));

    let mut area = 0.0;
    for pair in curve.windows(2) {
        let (x0, y0) = pair[0];
        let (x1, y1) = pair[1];
        area += (x1 - x0) * (y0 + y1) / 2.0;
    }
    Ok(area.clamp(0.0, 1.0))
}

/// Pearson correlation coefficient between two heatmaps, flattened.
pub fn cc(pred: &GazeHeatmap, gt: &GazeHeatmap) -> Result<f64, MetricError> {
    check_dims(pred.dims(), gt.dims())?;
    let n = pred.values().len() as f64;
    let mx = pred.values().sum() / n;
    let my = gt.values().sum() / n;
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    for (&x, &y) in pred.values().iter().zip(gt.values().iter()) {
        let dx = x - mx;
        let dy = y - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(MetricError::ZeroVariance);
    }
    Ok((sxy / (sxx.sqrt() * syy.sqrt())).clamp(-1.0, 1.0))
}

/// Kullback-Leibler divergence between the sum-normalized maps:
/// `sum_i y_i * ln(eps + y_i / (eps + p_i))`.
///
/// Both inputs are sum-normalized internally, so any non-negative maps with
/// mass are accepted.
pub fn kld(pred: &GazeHeatmap, gt: &GazeHeatmap, epsilon: f64) -> Result<f64, MetricError> {
    if !(epsilon > 0.0) {
        return Err(MetricError::InvalidParameter(format!(
            "epsilon must be positive, got {epsilon}"
        )));
    }
    check_dims(pred.dims(), gt.dims())?;
    let p = webgaze_core::normalize_sum(pred)
        .map_err(|_| MetricError::Degenerate("prediction has no mass".into()))?;
    let y = webgaze_core::normalize_sum(gt)
        .map_err(|_| MetricError::Degenerate("ground truth has no mass".into()))?;
    let mut total = 0.0;
    for (&yi, &pi) in y.values().iter().zip(p.values().iter()) {
        if yi > 0.0 {
            total += yi * (epsilon + yi / (epsilon + pi)).ln();
        }
    }
    if !total.is_finite() {
        return Err(MetricError::NumericalError(format!(
            "KLD evaluated to {total}"
        )));
    }
    Ok(total)
}

/// Derives a fixation binary map from a ground-truth heatmap by thresholding
/// at the 90th percentile (nearest-rank) of its nonzero values.
///
/// Used when raw fixations are unavailable, e.g. for externally produced
/// predictions scored against heatmap-only ground truth.
pub fn fixmap_from_heatmap(gt: &GazeHeatmap) -> Result<FixationBinaryMap, MetricError> {
    let mut nonzero: Vec<f64> = gt.values().iter().cloned().filter(|&v| v > 0.0).collect();
    if nonzero.is_empty() {
        return Err(MetricError::Degenerate(
            "ground truth has no nonzero values".into(),
        ));
    }
    nonzero.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let k = ((0.9 * nonzero.len() as f64).ceil() as usize).max(1);
    let threshold = nonzero[k - 1];
    let values = gt.values().mapv(|v| u8::from(v >= threshold));
    FixationBinaryMap::new(values).map_err(|e| MetricError::NumericalError(e.to_string()))
}
