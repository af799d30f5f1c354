//! Deterministic fallback detectors, so the pipeline and its tests run
//! without pretrained models.
//!
//! Image elements read as regions of high local color variance; text lines
//! read as horizontal runs of dark-light alternation within a plausible
//! line-height band.

use ndarray::Array2;
use webgaze_core::{MaskKind, Screenshot};

use crate::boxes::BoundingBox;
use crate::detector::{DetectorError, ElementDetector};

/// Connected components of high-local-color-variance regions at least
/// `min_side` on both sides become image boxes.
pub struct HeuristicImageDetector {
    /// Half-width of the variance window (2 gives a 5x5 window).
    pub window_radius: usize,
    /// Minimum per-window color variance (mean over channels, 8-bit units^2).
    pub variance_threshold: f64,
    /// Minimum box width and height in pixels.
    pub min_side: usize,
}

impl Default for HeuristicImageDetector {
    fn default() -> Self {
        Self {
            window_radius: 2,
            variance_threshold: 256.0,
            min_side: 32,
        }
    }
}

/// Horizontal runs of high-frequency dark-light alternation with a line
/// height between `min_height` and `max_height` become text boxes; boxes on
/// the same line closer than `merge_gap` are merged.
pub struct HeuristicTextDetector {
    /// Minimum luma step between neighbouring columns to count as an edge.
    pub edge_threshold: f64,
    /// Horizontal closing radius joining nearby glyph edges.
    pub closing_gap: usize,
    pub min_height: usize,
    pub max_height: usize,
    pub min_width: usize,
    pub merge_gap: usize,
}

impl Default for HeuristicTextDetector {
    fn default() -> Self {
        Self {
            edge_threshold: 24.0,
            closing_gap: 3,
            min_height: 8,
            max_height: 40,
            min_width: 16,
            merge_gap: 4,
        }
    }
}

/// The deterministic fallback detector for a mask kind, with default
/// parameters.
pub fn heuristic_detector(kind: MaskKind) -> Box<dyn ElementDetector + Send + Sync> {
    match kind {
        MaskKind::Image => Box::new(HeuristicImageDetector::default()),
        MaskKind::Text => Box::new(HeuristicTextDetector::default()),
    }
}

impl ElementDetector for HeuristicImageDetector {
    fn kind_produced(&self) -> MaskKind {
        MaskKind::Image
    }

    fn detect(&self, shot: &Screenshot) -> Result<Vec<BoundingBox>, DetectorError> {
        let (h, w) = shot.dims();
        let high = self.variance_map(shot);

        let mut out = Vec::new();
        for comp in components(&high) {
            // The high-variance region extends window_radius-1 pixels past
            // the true content edge; shrink the raw box back accordingly.
            let s = self.window_radius.saturating_sub(1);
            let x0 = comp.c0 + s;
            let y0 = comp.r0 + s;
            let x1 = (comp.c1 + 1).saturating_sub(s);
            let y1 = (comp.r1 + 1).saturating_sub(s);
            if x1 > x0 && y1 > y0 && x1 - x0 >= self.min_side && y1 - y0 >= self.min_side {
                out.push(
                    BoundingBox::new(MaskKind::Image, x0, y0, x1.min(w), y1.min(h))
                        .expect("component box has positive extent"),
                );
            }
        }
        Ok(out)
    }
}

impl HeuristicImageDetector {
    fn variance_map(&self, shot: &Screenshot) -> Array2<bool> {
        let (h, w) = shot.dims();
        let px = shot.pixels();

        // Integral images of per-channel sums and squared sums.
        let mut sum = vec![Array2::<f64>::zeros((h + 1, w + 1)); 3];
        let mut sumsq = vec![Array2::<f64>::zeros((h + 1, w + 1)); 3];
        for ch in 0..3 {
            for r in 0..h {
                let mut row_acc = 0.0;
                let mut row_acc_sq = 0.0;
                for c in 0..w {
                    let v = px[[r, c, ch]] as f64;
                    row_acc += v;
                    row_acc_sq += v * v;
                    sum[ch][[r + 1, c + 1]] = sum[ch][[r, c + 1]] + row_acc;
                    sumsq[ch][[r + 1, c + 1]] = sumsq[ch][[r, c + 1]] + row_acc_sq;
                }
            }
        }

        let rad = self.window_radius;
        Array2::from_shape_fn((h, w), |(r, c)| {
            let r0 = r.saturating_sub(rad);
            let c0 = c.saturating_sub(rad);
            let r1 = (r + rad + 1).min(h);
            let c1 = (c + rad + 1).min(w);
            let n = ((r1 - r0) * (c1 - c0)) as f64;
            let mut var_acc = 0.0;
            for ch in 0..3 {
                let s = sum[ch][[r1, c1]] - sum[ch][[r0, c1]] - sum[ch][[r1, c0]]
                    + sum[ch][[r0, c0]];
                let sq = sumsq[ch][[r1, c1]] - sumsq[ch][[r0, c1]] - sumsq[ch][[r1, c0]]
                    + sumsq[ch][[r0, c0]];
                var_acc += sq / n - (s / n) * (s / n);
            }
            var_acc / 3.0 >= self.variance_threshold
        })
    }
}

impl ElementDetector for HeuristicTextDetector {
    fn kind_produced(&self) -> MaskKind {
        MaskKind::Text
    }

    fn detect(&self, shot: &Screenshot) -> Result<Vec<BoundingBox>, DetectorError> {
        let (h, w) = shot.dims();
        let luma = luma_map(shot);

        let mut edges = Array2::from_elem((h, w), false);
        for r in 0..h {
            for c in 0..w.saturating_sub(1) {
                if (luma[[r, c + 1]] - luma[[r, c]]).abs() >= self.edge_threshold {
                    edges[[r, c]] = true;
                }
            }
        }

        // Horizontal closing joins glyph-stroke edges into line-long runs.
        let g = self.closing_gap;
        let mut closed = Array2::from_elem((h, w), false);
        for r in 0..h {
            for c in 0..w {
                let lo = c.saturating_sub(g);
                let hi = (c + g + 1).min(w);
                if (lo..hi).any(|cc| edges[[r, cc]]) {
                    closed[[r, c]] = true;
                }
            }
        }

        let mut boxes: Vec<BoundingBox> = Vec::new();
        for comp in components(&closed) {
            let x0 = comp.c0 + g.min(comp.c0 + 1);
            let x1 = (comp.c1 + 1).saturating_sub(g);
            let y0 = comp.r0;
            let y1 = comp.r1 + 1;
            let height = y1 - y0;
            if x1 > x0
                && height >= self.min_height
                && height <= self.max_height
                && x1 - x0 >= self.min_width
            {
                boxes.push(BoundingBox::new(MaskKind::Text, x0, y0, x1.min(w), y1).unwrap());
            }
        }

        Ok(merge_line_boxes(boxes, self.merge_gap))
    }
}

/// Merges text boxes on the same line whose horizontal gap is below
/// `merge_gap`, repeating until stable.
fn merge_line_boxes(mut boxes: Vec<BoundingBox>, merge_gap: usize) -> Vec<BoundingBox> {
    boxes.sort_by_key(|b| (b.y0, b.x0));
    loop {
        let mut merged_any = false;
        let mut out: Vec<BoundingBox> = Vec::with_capacity(boxes.len());
        'next: for b in boxes.iter().copied() {
            for kept in out.iter_mut() {
                if same_line(kept, &b) && horizontal_gap(kept, &b) < merge_gap {
                    kept.x0 = kept.x0.min(b.x0);
                    kept.y0 = kept.y0.min(b.y0);
                    kept.x1 = kept.x1.max(b.x1);
                    kept.y1 = kept.y1.max(b.y1);
                    merged_any = true;
                    continue 'next;
                }
            }
            out.push(b);
        }
        boxes = out;
        if !merged_any {
            return boxes;
        }
    }
}

fn same_line(a: &BoundingBox, b: &BoundingBox) -> bool {
    let overlap = a.y1.min(b.y1).saturating_sub(a.y0.max(b.y0));
    overlap * 2 >= a.height().min(b.height())
}

fn horizontal_gap(a: &BoundingBox, b: &BoundingBox) -> usize {
    if a.x1 <= b.x0 {
        b.x0 - a.x1
    } else if b.x1 <= a.x0 {
        a.x0 - b.x1
    } else {
        0
    }
}

fn luma_map(shot: &Screenshot) -> Array2<f64> {
    let (h, w) = shot.dims();
    let px = shot.pixels();
    Array2::from_shape_fn((h, w), |(r, c)| {
        0.299 * px[[r, c, 0]] as f64 + 0.587 * px[[r, c, 1]] as f64 + 0.114 * px[[r, c, 2]] as f64
    })
}

struct Component {
    r0: usize,
    c0: usize,
    r1: usize,
    c1: usize,
}

/// 8-connected components of a boolean map (bounding extents only),
/// discovered in row-major order.
fn components(map: &Array2<bool>) -> Vec<Component> {
    let (h, w) = map.dim();
    let mut seen = Array2::from_elem((h, w), false);
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for r in 0..h {
        for c in 0..w {
            if !map[[r, c]] || seen[[r, c]] {
                continue;
            }
            let mut comp = Component {
                r0: r,
                c0: c,
                r1: r,
                c1: c,
            };
            seen[[r, c]] = true;
            stack.push((r, c));
            while let Some((cr, cc)) = stack.pop() {
                comp.r0 = comp.r0.min(cr);
                comp.r1 = comp.r1.max(cr);
                comp.c0 = comp.c0.min(cc);
                comp.c1 = comp.c1.max(cc);
                for dr in -1i64..=1 {
                    for dc in -1i64..=1 {
                        let nr = cr as i64 + dr;
                        let nc = cc as i64 + dc;
                        if nr < 0 || nc < 0 || nr >= h as i64 || nc >= w as i64 {
                            continue;
                        }
                        let (nr, nc) = (nr as usize, nc as usize);
                        if map[[nr, nc]] && !seen[[nr, nc]] {
                            seen[[nr, nc]] = true;
                            stack.push((nr, nc));
                        }
                    }
                }
            }
            out.push(comp);
        }
    }
    out
}
