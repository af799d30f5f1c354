use serde::{Deserialize, Serialize};

use crate::error::DataError;

/// Train/val/test fractions plus the shuffle seed.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SplitSpec {
    pub train_fraction: f64,
    pub val_fraction: f64,
    pub test_fraction: f64,
    pub seed: u64,
}

impl SplitSpec {
    pub fn new(
        train_fraction: f64,
        val_fraction: f64,
        test_fraction: f64,
        seed: u64,
    ) -> Result<Self, DataError> {
        let spec = Self {
            train_fraction,
            val_fraction,
            test_fraction,
            seed,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// The 60/20/20 split used throughout.
    pub fn default_with_seed(seed: u64) -> Self {
        Self {
            train_fraction: 0.6,
            val_fraction: 0.2,
            test_fraction: 0.2,
            seed,
        }
    }

    pub fn validate(&self) -> Result<(), DataError> {
        let fr = [self.train_fraction, self.val_fraction, self.test_fraction];
        if fr.iter().any(|&f| f < 0.0 || !f.is_finite()) {
            return Err(DataError::InvalidSplitSpec(format!(
                "fractions must be non-negative, got {fr:?}"
            )));
        }
        let sum: f64 = fr.iter().sum();
        if (sum - 1.0).abs() > 1e-9 {
            return Err(DataError::InvalidSplitSpec(format!(
                "fractions sum to {sum}, expected 1"
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitCounts {
    pub train: usize,
    pub val: usize,
    pub test: usize,
}

/// Per-stage counts of the curation run. `input` is the ingested sample
/// count; `empty_removed` and `duplicates_removed` count drops;
/// `cropped` counts screenshots whose dimensions changed; `exported` is the
/// final sample count.
#[derive(Debug, Clone, Copy, Default, Serialize, Deserialize)]
pub struct CurationReport {
    pub input: usize,
    pub empty_removed: usize,
    pub cropped: usize,
    pub duplicates_removed: usize,
    pub exported: usize,
    pub per_split: SplitCounts,
}

impl CurationReport {
    /// Stage monotonicity: every stage's output is at most its input.
    pub fn is_stage_monotone(&self) -> bool {
        let after_filter = self.input.saturating_sub(self.empty_removed);
        let after_dedup = after_filter.saturating_sub(self.duplicates_removed);
        self.empty_removed <= self.input
            && self.duplicates_removed <= after_filter
            && self.exported <= after_dedup
            && self.cropped <= after_filter
            && self.per_split.train + self.per_split.val + self.per_split.test == self.exported
    }
}
