//! Screenshot deduplication: exact byte identity or perceptual 64-bit
//! difference-hash matching.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use webgaze_core::{DatasetSample, Screenshot};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DedupMode {
    /// Byte-identical pixel data collapses to the first occurrence.
    Exact,
    /// Screenshots within a Hamming-distance threshold of the 8x8 dHash
    /// collapse to the first occurrence.
    Perceptual,
}

/// 64-bit difference hash: BT.601 luma, area-averaged to 9x8, one bit per
/// horizontal neighbour comparison.
pub fn dhash(shot: &Screenshot) -> u64 {
    let (h, w) = shot.dims();
    let px = shot.pixels();

    // area-average luma into a 9 (cols) x 8 (rows) grid
    let mut grid = [[0f64; 9]; 8];
    for (gr, row) in grid.iter_mut().enumerate() {
        let r_lo = gr * h / 8;
        let r_hi = (((gr + 1) * h / 8).max(r_lo + 1)).min(h);
        for (gc, cell) in row.iter_mut().enumerate() {
            let c_lo = gc * w / 9;
            let c_hi = (((gc + 1) * w / 9).max(c_lo + 1)).min(w);
            let mut acc = 0.0;
            let mut n = 0.0;
            for r in r_lo..r_hi {
                for c in c_lo..c_hi {
                    acc += 0.299 * px[[r, c, 0]] as f64
                        + 0.587 * px[[r, c, 1]] as f64
                        + 0.114 * px[[r, c, 2]] as f64;
                    n += 1.0;
                }
            }
            *cell = acc / n;
        }
    }

    let mut bits = 0u64;
    for r in 0..8 {
        for c in 0..8 {
            if grid[r][c] > grid[r][c + 1] {
                bits |= 1u64 << (r * 8 + c);
            }
        }
    }
    bits
}

fn exact_key(shot: &Screenshot) -> u64 {
    let mut hasher = DefaultHasher::new();
    shot.dims().hash(&mut hasher);
    for &b in shot.pixels().iter() {
        b.hash(&mut hasher);
    }
    hasher.finish()
}

/// Returns `(kept_indices, removed_pairs)` over a screenshot slice, where
/// each removed pair is `(kept_index, removed_index)` in input order.
/// Keeping the first occurrence makes the operation idempotent.
pub fn dedup_screenshot_indices(
    shots: &[&Screenshot],
    mode: DedupMode,
    hamming_threshold: u32,
) -> (Vec<usize>, Vec<(usize, usize)>) {
    let mut kept: Vec<usize> = Vec::new();
    let mut removed: Vec<(usize, usize)> = Vec::new();

    match mode {
        DedupMode::Exact => {
            let mut buckets: HashMap<u64, Vec<usize>> = HashMap::new();
            for (i, shot) in shots.iter().enumerate() {
                let key = exact_key(shot);
                let bucket = buckets.entry(key).or_default();
                // hash buckets are verified byte-for-byte
                if let Some(&first) = bucket
                    .iter()
                    .find(|&&j| shots[j].pixels() == shot.pixels())
                {
                    removed.push((first, i));
                } else {
                    bucket.push(i);
                    kept.push(i);
                }
            }
        }
        DedupMode::Perceptual => {
            let hashes: Vec<u64> = shots.iter().map(|s| dhash(s)).collect();
            for i in 0..shots.len() {
                match kept
                    .iter()
                    .find(|&&j| (hashes[j] ^ hashes[i]).count_ones() <= hamming_threshold)
                {
                    Some(&j) => removed.push((j, i)),
                    None => kept.push(i),
                }
            }
        }
    }
    (kept, removed)
}

/// Deduplicates samples by their screenshots, keeping first occurrences.
pub fn deduplicate(
    samples: Vec<DatasetSample>,
    mode: DedupMode,
    hamming_threshold: u32,
) -> (Vec<DatasetSample>, Vec<(usize, usize)>) {
    let shots: Vec<&Screenshot> = samples.iter().map(|s| &s.screenshot).collect();
    let (kept_idx, removed) = dedup_screenshot_indices(&shots, mode, hamming_threshold);
    drop(shots);
    let mut keep_flags = vec![false; samples.len()];
    for &i in &kept_idx {
        keep_flags[i] = true;
    }
    let unique = samples
        .into_iter()
        .zip(keep_flags)
        .filter_map(|(s, keep)| keep.then_some(s))
        .collect();
    (unique, removed)
}
