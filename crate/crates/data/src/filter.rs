//! Empty-screenshot filtering and black-region cropping.

use ndarray::Array3;
use webgaze_core::Screenshot;

use crate::error::DataError;

/// A pixel counts as black when every channel is below this level; tolerant
/// of compression artifacts around black static regions.
pub const BLACK_LEVEL: u8 = 8;

fn is_black(px: &Array3<u8>, r: usize, c: usize) -> bool {
    px[[r, c, 0]] < BLACK_LEVEL && px[[r, c, 1]] < BLACK_LEVEL && px[[r, c, 2]] < BLACK_LEVEL
}

/// Fraction of pixels that are black (all channels below [`BLACK_LEVEL`]).
pub fn black_fraction(shot: &Screenshot) -> f64 {
    let (h, w) = shot.dims();
    let px = shot.pixels();
    let mut black = 0usize;
    for r in 0..h {
        for c in 0..w {
            if is_black(px, r, c) {
                black += 1;
            }
        }
    }
    black as f64 / (h * w) as f64
}

/// Partitions screenshots into `(kept, dropped)`: a screenshot is dropped iff
/// its black fraction is at least `threshold`. Order is preserved on both
/// sides.
pub fn filter_empty(
    screenshots: Vec<Screenshot>,
    threshold: f64,
) -> Result<(Vec<Screenshot>, Vec<Screenshot>), DataError> {
    if !(threshold > 0.0 && threshold <= 1.0) {
        return Err(DataError::InvalidParameter(format!(
            "black fraction threshold must be in (0,1], got {threshold}"
        )));
    }
    let mut kept = Vec::new();
    let mut dropped = Vec::new();
    for shot in screenshots {
        if black_fraction(&shot) >= threshold {
            dropped.push(shot);
        } else {
            kept.push(shot);
        }
    }
    Ok((kept, dropped))
}

/// Minimal axis-aligned bounding box of non-black content as
/// `(r0, c0, r1, c1)`, exclusive at `r1`/`c1`. `None` for fully black input.
pub fn content_bounding_box(shot: &Screenshot) -> Option<(usize, usize, usize, usize)> {
    let (h, w) = shot.dims();
    let px = shot.pixels();
    let mut r0 = h;
    let mut c0 = w;
    let mut r1 = 0usize;
    let mut c1 = 0usize;
    for r in 0..h {
        for c in 0..w {
            if !is_black(px, r, c) {
                r0 = r0.min(r);
                c0 = c0.min(c);
                r1 = r1.max(r + 1);
                c1 = c1.max(c + 1);
            }
        }
    }
    if r1 == 0 {
        None
    } else {
        Some((r0, c0, r1, c1))
    }
}

/// Crops a screenshot to the bounding box of its non-black content. The
/// count of non-black pixels is unchanged by construction.
pub fn crop_black_regions(shot: &Screenshot) -> Result<Screenshot, DataError> {
    let (r0, c0, r1, c1) = content_bounding_box(shot).ok_or(DataError::DegenerateScreenshot)?;
    let cropped = shot
        .pixels()
        .slice(ndarray::s![r0..r1, c0..c1, ..])
        .to_owned();
    Ok(Screenshot::new(cropped, shot.source_id.clone(), shot.origin)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::Array3;
    use webgaze_core::OriginDataset;

    fn shot(px: Array3<u8>) -> Screenshot {
        Screenshot::new(px, "t", OriginDataset::GazeMining).unwrap()
    }

    #[test]
    fn fully_black_is_dropped_and_white_is_kept() {
        let black = shot(Array3::zeros((10, 10, 3)));
        let white = shot(Array3::from_elem((10, 10, 3), 255));
        let (kept, dropped) = filter_empty(vec![black, white], 0.99).unwrap();
        assert_eq!(kept.len(), 1);
        assert_eq!(dropped.len(), 1);
        assert_eq!(kept[0].source_id, "t");
        assert_eq!(black_fraction(&dropped[0]), 1.0);
    }

    #[test]
    fn fraction_is_counted_exactly() {
        // 99.5% black at threshold 0.99 -> dropped
        let mut px = Array3::zeros((20, 100, 3));
        for c in 0..10 {
            px[[0, c, 0]] = 200; // 10 of 2000 pixels non-black
        }
        let s = shot(px);
        assert!((black_fraction(&s) - 0.995).abs() < 1e-12);
        let (kept, dropped) = filter_empty(vec![s], 0.99).unwrap();
        assert!(kept.is_empty());
        assert_eq!(dropped.len(), 1);
    }

    #[test]
    fn empty_input_gives_empty_outputs() {
        let (kept, dropped) = filter_empty(vec![], 0.5).unwrap();
        assert!(kept.is_empty() && dropped.is_empty());
    }

    #[test]
    fn crop_to_known_bounding_box() {
        // content only in rows 10..=50, cols 20..=80 of a 100x100 image
        let mut px = Array3::zeros((100, 100, 3));
        for r in 10..=50 {
            for c in 20..=80 {
                px[[r, c, 1]] = 128;
            }
        }
        let cropped = crop_black_regions(&shot(px)).unwrap();
        assert_eq!(cropped.dims(), (41, 61));
    }

    #[test]
    fn image_without_black_is_unchanged() {
        let s = shot(Array3::from_elem((12, 9, 3), 77));
        let cropped = crop_black_regions(&s).unwrap();
        assert_eq!(cropped.pixels(), s.pixels());
    }

    #[test]
    fn two_islands_crop_to_joint_bounding_box() {
        let mut px = Array3::zeros((60, 60, 3));
        // island A rows 5..10, cols 6..12; island B rows 40..45, cols 30..50
        for r in 5..10 {
            for c in 6..12 {
                px[[r, c, 0]] = 255;
            }
        }
        for r in 40..45 {
            for c in 30..50 {
                px[[r, c, 2]] = 255;
            }
        }
        let cropped = crop_black_regions(&shot(px.clone())).unwrap();
        // joint extremes by scan: rows 5..45, cols 6..50
        assert_eq!(cropped.dims(), (40, 44));
        // non-black pixel count unchanged
        let count = |p: &Array3<u8>| {
            let (h, w, _) = p.dim();
            let mut n = 0;
            for r in 0..h {
                for c in 0..w {
                    if !(p[[r, c, 0]] < 8 && p[[r, c, 1]] < 8 && p[[r, c, 2]] < 8) {
                        n += 1;
                    }
                }
            }
            n
        };
        assert_eq!(count(cropped.pixels()), count(&px));
    }

    #[test]
    fn fully_black_crop_is_degenerate() {
        let s = shot(Array3::zeros((5, 5, 3)));
        assert!(matches!(
            crop_black_regions(&s),
            Err(DataError::DegenerateScreenshot)
        ));
    }
}
