use ndarray::Array2;
use serde::{Deserialize, Serialize};
use webgaze_core::{BinaryMask, MaskKind};

use crate::error::MaskError;

/// Axis-aligned element location in pixel coordinates, inclusive-exclusive:
/// the box covers columns `x0..x1` and rows `y0..y1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundingBox {
    pub kind: MaskKind,
    pub x0: usize,
    pub y0: usize,
    pub x1: usize,
    pub y1: usize,
}

impl BoundingBox {
    pub fn new(
        kind: MaskKind,
        x0: usize,
        y0: usize,
        x1: usize,
        y1: usize,
    ) -> Result<Self, MaskError> {
        if x0 >= x1 || y0 >= y1 {
            return Err(MaskError::InvalidBox(format!(
                "({x0},{y0})..({x1},{y1}) has non-positive extent"
            )));
        }
        Ok(Self { kind, x0, y0, x1, y1 })
    }

    pub fn width(&self) -> usize {
        self.x1 - self.x0
    }

    pub fn height(&self) -> usize {
        self.y1 - self.y0
    }

    pub fn area(&self) -> usize {
        self.width() * self.height()
    }

    /// True when the box lies inside an `(H, W)` raster.
    pub fn fits(&self, dims: (usize, usize)) -> bool {
        let (h, w) = dims;
        self.x1 <= w && self.y1 <= h
    }

    pub fn contains(&self, other: &BoundingBox) -> bool {
        self.x0 <= other.x0 && self.y0 <= other.y0 && self.x1 >= other.x1 && self.y1 >= other.y1
    }

    pub fn contains_point(&self, x: usize, y: usize) -> bool {
        x >= self.x0 && x < self.x1 && y >= self.y0 && y < self.y1
    }

    /// Intersection-over-union of the two rectangles.
    pub fn iou(&self, other: &BoundingBox) -> f64 {
        let ix = self.x1.min(other.x1).saturating_sub(self.x0.max(other.x0));
        let iy = self.y1.min(other.y1).saturating_sub(self.y0.max(other.y0));
        let inter = (ix * iy) as f64;
        let union = (self.area() + other.area()) as f64 - inter;
        if union == 0.0 {
            0.0
        } else {
            inter / union
        }
    }
}

/// Rasterizes boxes into a binary mask: a pixel is 1 iff covered by at least
/// one box. Overlaps do not double-count.
pub fn boxes_to_mask(
    boxes: &[BoundingBox],
    dims: (usize, usize),
    kind: MaskKind,
) -> Result<BinaryMask, MaskError> {
    let (h, w) = dims;
    let mut values = Array2::zeros((h, w));
    for b in boxes {
        if !b.fits(dims) {
            return Err(MaskError::OutOfBounds {
                x0: b.x0,
                y0: b.y0,
                x1: b.x1,
                y1: b.y1,
                h,
                w,
            });
        }
        values
            .slice_mut(ndarray::s![b.y0..b.y1, b.x0..b.x1])
            .fill(1u8);
    }
    Ok(BinaryMask::new(values, kind)?)
}

pub fn boxes_to_json(boxes: &[BoundingBox]) -> String {
    serde_json::to_string(boxes).expect("boxes serialize")
}

pub fn boxes_from_json(json: &str) -> Result<Vec<BoundingBox>, MaskError> {
    serde_json::from_str(json).map_err(|e| MaskError::Serialization(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bx(x0: usize, y0: usize, x1: usize, y1: usize) -> BoundingBox {
        BoundingBox::new(MaskKind::Image, x0, y0, x1, y1).unwrap()
    }

    #[test]
    fn whole_image_box_gives_all_ones() {
        let m = boxes_to_mask(&[bx(0, 0, 6, 4)], (4, 6), MaskKind::Image).unwrap();
        assert_eq!(m.count_ones(), 24);
    }

    #[test]
    fn empty_box_list_gives_all_zeros() {
        let m = boxes_to_mask(&[], (4, 6), MaskKind::Text).unwrap();
        assert_eq!(m.count_ones(), 0);
        assert_eq!(m.kind, MaskKind::Text);
    }

    #[test]
    fn overlapping_boxes_do_not_double_count() {
        // two 10x10 boxes overlapping in a 5x10 strip: union = 100+100-50
        let a = bx(0, 0, 10, 10);
        let b = bx(5, 0, 15, 10);
        let m = boxes_to_mask(&[a, b], (20, 20), MaskKind::Image).unwrap();
        assert_eq!(m.count_ones(), 150);
    }

    #[test]
    fn union_mask_equals_elementwise_or() {
        let a = [bx(1, 1, 5, 4)];
        let b = [bx(3, 2, 9, 6)];
        let both = [a[0], b[0]];
        let ma = boxes_to_mask(&a, (8, 10), MaskKind::Image).unwrap();
        let mb = boxes_to_mask(&b, (8, 10), MaskKind::Image).unwrap();
        let mu = boxes_to_mask(&both, (8, 10), MaskKind::Image).unwrap();
        for ((&x, &y), &u) in ma
            .values()
            .iter()
            .zip(mb.values().iter())
            .zip(mu.values().iter())
        {
            assert_eq!(u, x | y);
        }
    }

    #[test]
    fn out_of_bounds_box_errors() {
        let r = boxes_to_mask(&[bx(0, 0, 7, 4)], (4, 6), MaskKind::Image);
        assert!(matches!(r, Err(MaskError::OutOfBounds { .. })));
    }

    #[test]
    fn json_roundtrip_and_field_layout() {
        let boxes = vec![
            bx(1, 2, 3, 4),
            BoundingBox::new(MaskKind::Text, 5, 6, 9, 8).unwrap(),
        ];
        let json = boxes_to_json(&boxes);
        assert!(json.starts_with(r#"[{"kind":"image","x0":1,"y0":2,"x1":3,"y1":4}"#));
        assert_eq!(boxes_from_json(&json).unwrap(), boxes);
    }

    #[test]
    fn iou_of_disjoint_and_identical_boxes() {
        let a = bx(0, 0, 4, 4);
        assert_eq!(a.iou(&a), 1.0);
        assert_eq!(a.iou(&bx(10, 10, 14, 14)), 0.0);
    }
}
