//! Deterministic train/val/test assignment.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use webgaze_core::{DatasetSample, Split};

use crate::types::SplitSpec;

/// Split sizes under the pinned rounding policy: train and val round to
/// nearest, test absorbs the remainder.
pub fn split_counts(n: usize, spec: &SplitSpec) -> (usize, usize, usize) {
    let train = ((n as f64 * spec.train_fraction).round() as usize).min(n);
    let val = ((n as f64 * spec.val_fraction).round() as usize).min(n - train);
    let test = n - train - val;
    (train, val, test)
}

/// Assigns a split label to each of `n` samples: indices are shuffled with a
/// ChaCha generator seeded from the spec, then labelled train-first. The
/// returned labels are in original index order.
pub fn split_assign(n: usize, spec: &SplitSpec) -> Vec<Split> {
    let (train, val, _) = split_counts(n, spec);
    let mut order: Vec<usize> = (0..n).collect();
    let mut rng = ChaCha20Rng::seed_from_u64(spec.seed);
    order.shuffle(&mut rng);

    let mut labels = vec![Split::Test; n];
    for (pos, &idx) in order.iter().enumerate() {
        labels[idx] = if pos < train {
            Split::Train
        } else if pos < train + val {
            Split::Val
        } else {
            Split::Test
        };
    }
    labels
}

/// Applies [`split_assign`] to the samples in place and returns the labels.
pub fn split_dataset(samples: &mut [DatasetSample], spec: &SplitSpec) -> Vec<Split> {
    let labels = split_assign(samples.len(), spec);
    for (sample, &label) in samples.iter_mut().zip(labels.iter()) {
        sample.split = label;
    }
    labels
}

#[cfg(test)]
mod tests {
    use super::*;
    use webgaze_core::Split;

    fn spec(seed: u64) -> SplitSpec {
        SplitSpec::default_with_seed(seed)
    }

    #[test]
    fn corpus_size_1546_splits_928_309_309() {
        assert_eq!(split_counts(1546, &spec(0)), (928, 309, 309));
        let labels = split_assign(1546, &spec(42));
        let count = |s: Split| labels.iter().filter(|&&l| l == s).count();
        assert_eq!(count(Split::Train), 928);
        assert_eq!(count(Split::Val), 309);
        assert_eq!(count(Split::Test), 309);
    }

    #[test]
    fn five_samples_split_3_1_1() {
        assert_eq!(split_counts(5, &spec(0)), (3, 1, 1));
    }

    #[test]
    fn same_seed_is_identical_and_seeds_differ() {
        let a = split_assign(100, &spec(7));
        let b = split_assign(100, &spec(7));
        assert_eq!(a, b);
        let c = split_assign(100, &spec(8));
        assert_ne!(a, c);
    }

    #[test]
    fn every_sample_labelled_once_and_zero_is_empty() {
        assert!(split_assign(0, &spec(1)).is_empty());
        let labels = split_assign(17, &spec(1));
        assert_eq!(labels.len(), 17);
    }

    #[test]
    fn rounding_cannot_overassign() {
        // pathological fractions that both round up
        let spec = SplitSpec::new(0.5, 0.5, 0.0, 3).unwrap();
        let (t, v, te) = split_counts(3, &spec);
        assert_eq!(t + v + te, 3);
        assert_eq!(te, 0);
    }

    #[test]
    fn fraction_deviation_bounded_by_one_over_n() {
        for n in 5..200 {
            let (t, v, te) = split_counts(n, &spec(0));
            let nf = n as f64;
            assert!((t as f64 / nf - 0.6).abs() <= 1.0 / nf, "train at n={n}");
            assert!((v as f64 / nf - 0.2).abs() <= 1.0 / nf, "val at n={n}");
            assert!((te as f64 / nf - 0.2).abs() <= 1.0 / nf, "test at n={n}");
        }
    }
}
