//! Raster resampling on plain arrays (pixel-center convention).

use ndarray::Array2;

/// Bilinear resampling of a float map to `(h, w)`.
///
/// Sample positions follow the half-pixel-center convention
/// (`src = (dst + 0.5) * scale - 0.5`), clamped at the borders.
pub fn bilinear_resize(src: &Array2<f64>, dims: (usize, usize)) -> Array2<f64> {
    let (sh, sw) = src.dim();
    let (dh, dw) = dims;
    assert!(sh > 0 && sw > 0 && dh > 0 && dw > 0);
    if (sh, sw) == (dh, dw) {
        return src.clone();
    }
    let row_map = axis_weights(sh, dh);
    let col_map = axis_weights(sw, dw);
    let mut out = Array2::zeros((dh, dw));
    for r in 0..dh {
        let (r0, r1, rw) = row_map[r];
        for c in 0..dw {
            let (c0, c1, cw) = col_map[c];
            let top = src[[r0, c0]] * (1.0 - cw) + src[[r0, c1]] * cw;
            let bot = src[[r1, c0]] * (1.0 - cw) + src[[r1, c1]] * cw;
            out[[r, c]] = top * (1.0 - rw) + bot * rw;
        }
    }
    out
}

/// Nearest-neighbour resampling of a `{0,1}`/integer map to `(h, w)`.
pub fn nearest_resize_u8(src: &Array2<u8>, dims: (usize, usize)) -> Array2<u8> {
    let (sh, sw) = src.dim();
    let (dh, dw) = dims;
    assert!(sh > 0 && sw > 0 && dh > 0 && dw > 0);
    if (sh, sw) == (dh, dw) {
        return src.clone();
    }
    let mut out = Array2::zeros((dh, dw));
    for r in 0..dh {
        let sr = nearest_index(sh, dh, r);
        for c in 0..dw {
            let sc = nearest_index(sw, dw, c);
            out[[r, c]] = src[[sr, sc]];
        }
    }
    out
}

/// `(lo, hi, frac)` source indices and interpolation weight per output index.
fn axis_weights(src_len: usize, dst_len: usize) -> Vec<(usize, usize, f64)> {
    let scale = src_len as f64 / dst_len as f64;
    (0..dst_len)
        .map(|d| {
            let pos = ((d as f64 + 0.5) * scale - 0.5).clamp(0.0, (src_len - 1) as f64);
            let lo = pos.floor() as usize;
            let hi = (lo + 1).min(src_len - 1);
            (lo, hi, pos - lo as f64)
        })
        .collect()
}

fn nearest_index(src_len: usize, dst_len: usize, d: usize) -> usize {
    let scale = src_len as f64 / dst_len as f64;
    (((d as f64 + 0.5) * scale).floor() as usize).min(src_len - 1)
}
