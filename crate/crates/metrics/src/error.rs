use thiserror::Error;

#[derive(Debug, Error)]
pub enum MetricError {
    /// The fixation binary map marks no pixels.
    #[error("fixation map has no fixated pixels")]
    NoFixations,

    /// AUC needs at least one fixated and one non-fixated pixel.
    #[error("degenerate ground truth: all or no pixels fixated")]
    DegenerateGroundTruth,

    /// CC is undefined when either map is constant.
    #[error("zero variance input")]
    ZeroVariance,

    /// A map with no mass was fed where a distribution is required.
    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("numerical error: {0}")]
    NumericalError(String),

    #[error("shape mismatch: expected {expected:?}, got {got:?}")]
    ShapeMismatch {
        expected: (usize, usize),
        got: (usize, usize),
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
