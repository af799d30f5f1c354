//! Heatmap normalization primitives.

use ndarray::Array2;

use crate::error::CoreError;
use crate::types::{GazeHeatmap, Normalization};

/// Result of [`standardize`]: a zero-mean unit-variance view of a map.
#[derive(Debug, Clone)]
pub struct Standardized {
    pub values: Array2<f64>,
    /// Set when the input was constant; `values` are then all zeros.
    pub degenerate: bool,
}

/// Rescales a map so its values sum to one.
///
/// The maximum location is preserved; a map that already sums to exactly one
/// is returned unchanged. An all-zero map has no distribution form and yields
/// [`CoreError::DegenerateMap`].
pub fn normalize_sum(map: &GazeHeatmap) -> Result<GazeHeatmap, CoreError> {
    let sum: f64 = map.values().sum();
    if sum <= 0.0 {
        return Err(CoreError::DegenerateMap(
            "cannot sum-normalize an all-zero map".into(),
        ));
    }
    let values = map.values().mapv(|v| v / sum);
    GazeHeatmap::new(values, Normalization::SumToOne)
}

/// Shifts and scales a map to zero mean and unit standard deviation
/// (population std, over all pixels).
///
/// A constant map has no scale; it standardizes to all zeros with the
/// `degenerate` flag set so callers (NSS in particular) can apply their
/// documented fallback.
pub fn standardize(map: &GazeHeatmap) -> Standardized {
    let values = map.values();
    let n = values.len() as f64;
    let mean = values.sum() / n;
    let var = values.iter().map(|&v| (v - mean) * (v - mean)).sum::<f64>() / n;
    let std = var.sqrt();
    if std == 0.0 || !std.is_finite() {
        return Standardized {
            values: Array2::zeros(values.dim()),
            degenerate: true,
        };
    }
    Standardized {
        values: values.mapv(|v| (v - mean) / std),
        degenerate: false,
    }
}

/// Min-max scales a map to integers in `[0, 255]`, rounding half up.
///
/// An all-zero map stays all-zero ("no prediction"); a constant non-zero map
/// becomes all-255 ("uniform prediction").
pub fn to_grayscale(map: &GazeHeatmap) -> GazeHeatmap {
    let values = map.values();
    let min = values.iter().cloned().fold(f64::INFINITY, f64::min);
    let max = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let out = if max == min {
        if max > 0.0 {
            values.mapv(|_| 255.0)
        } else {
            values.mapv(|_| 0.0)
        }
    } else {
        // f64::round is round-half-away-from-zero, which on non-negative
        // inputs is exactly round-half-up.
        values.mapv(|v| ((v - min) / (max - min) * 255.0).round())
    };
    GazeHeatmap::new(out, Normalization::Grayscale255)
        .expect("min-max scaled values are integers in [0,255]")
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    fn raw(values: Array2<f64>) -> GazeHeatmap {
        GazeHeatmap::new(values, Normalization::Raw).unwrap()
    }

    #[test]
    fn normalize_sum_uniform() {
        let m = raw(array![[1.0, 1.0], [1.0, 1.0]]);
        let n = normalize_sum(&m).unwrap();
        assert_eq!(n.values(), &array![[0.25, 0.25], [0.25, 0.25]]);
        assert_eq!(n.normalization(), Normalization::SumToOne);
    }

    #[test]
    fn normalize_sum_is_identity_on_normalized_input() {
        let m = raw(array![[0.25, 0.25], [0.25, 0.25]]);
        let n = normalize_sum(&m).unwrap();
        assert_eq!(n.values(), m.values());
    }

    #[test]
    fn normalize_sum_single_mass() {
        let m = raw(array![[0.0, 0.0], [0.0, 3.0]]);
        let n = normalize_sum(&m).unwrap();
        assert_eq!(n.values(), &array![[0.0, 0.0], [0.0, 1.0]]);
    }

    #[test]
    fn normalize_sum_rejects_all_zero() {
        let m = raw(Array2::zeros((2, 2)));
        assert!(matches!(
            normalize_sum(&m),
            Err(CoreError::DegenerateMap(_))
        ));
    }

    #[test]
    fn normalize_sum_preserves_argmax() {
        let m = raw(array![[1.0, 5.0], [2.0, 0.5]]);
        assert_eq!(normalize_sum(&m).unwrap().argmax(), m.argmax());
    }

    #[test]
    fn standardize_two_value_symmetry() {
        let m = raw(array![[0.0, 2.0], [0.0, 2.0]]);
        let s = standardize(&m);
        assert!(!s.degenerate);
        assert_eq!(s.values, array![[-1.0, 1.0], [-1.0, 1.0]]);
    }

    #[test]
    fn standardize_constant_is_degenerate() {
        let m = raw(array![[3.0, 3.0], [3.0, 3.0]]);
        let s = standardize(&m);
        assert!(s.degenerate);
        assert!(s.values.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn standardize_moments_match_direct_recomputation() {
        // Oracle: recompute mean/std of the output directly.
        let m = raw(array![
            [0.8, 0.1, 0.3, 0.9, 0.2],
            [0.5, 0.7, 0.05, 0.6, 0.35],
            [0.12, 0.88, 0.41, 0.23, 0.99],
            [0.04, 0.66, 0.77, 0.31, 0.58],
            [0.21, 0.43, 0.92, 0.15, 0.69]
        ]);
        let s = standardize(&m);
        let n = s.values.len() as f64;
        let mean = s.values.sum() / n;
        let var = s.values.iter().map(|&v| (v - mean).powi(2)).sum::<f64>() / n;
        assert!(mean.abs() < 1e-6, "mean {mean}");
        assert!((var.sqrt() - 1.0).abs() < 1e-6, "std {}", var.sqrt());
    }

    #[test]
    fn to_grayscale_minmax_endpoints() {
        let m = raw(array![[0.0, 1.0], [0.5, 1.0]]);
        let g = to_grayscale(&m);
        assert_eq!(g.values(), &array![[0.0, 255.0], [128.0, 255.0]]);
        assert_eq!(g.normalization(), Normalization::Grayscale255);
    }

    #[test]
    fn to_grayscale_all_zero_stays_zero() {
        let m = raw(Array2::zeros((3, 3)));
        assert!(to_grayscale(&m).values().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn to_grayscale_constant_nonzero_is_all_255() {
        let m = raw(array![[0.4, 0.4], [0.4, 0.4]]);
        assert!(to_grayscale(&m).values().iter().all(|&v| v == 255.0));
    }
}
