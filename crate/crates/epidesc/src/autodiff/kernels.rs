//! Raw `f64` compute kernels shared by the forward and backward passes.
//!
//! Everything here operates on plain slices in row-major layout; graph
//! bookkeeping lives in the parent module.

/// Row-major matrix product `c = a[m,k] * b[k,n] + beta * c`.
pub(crate) fn gemm(
    m: usize,
    k: usize,
    n: usize,
    a: &[f64],
    b: &[f64],
    beta: f64,
    c: &mut [f64],
) {
    debug_assert_eq!(a.len(), m * k);
    debug_assert_eq!(b.len(), k * n);
    debug_assert_eq!(c.len(), m * n);
    unsafe {
        matrixmultiply::dgemm(
            m,
            k,
            n,
            1.0,
            a.as_ptr(),
            k as isize,
            1,
            b.as_ptr(),
            n as isize,
            1,
            beta,
            c.as_mut_ptr(),
            n as isize,
            1,
        );
    }
}

/// `c = a^T[k,m] * b[k,n] + beta * c` where `a` is stored row-major `[k,m]`.
pub(crate) fn gemm_at_b(
    m: usize,
    k: usize,
    n: usize,
    a: &[f64],
    b: &[f64],
    beta: f64,
    c: &mut [f64],
) {
    debug_assert_eq!(a.len(), k * m);
    debug_assert_eq!(b.len(), k * n);
    debug_assert_eq!(c.len(), m * n);
    unsafe {
        matrixmultiply::dgemm(
            m,
            k,
            n,
            1.0,
            a.as_ptr(),
            1,
            m as isize,
            b.as_ptr(),
            n as isize,
            1,
            beta,
            c.as_mut_ptr(),
            n as isize,
            1,
        );
    }
}

/// `c = a[m,k] * b^T[n,k] + beta * c` where `b` is stored row-major `[n,k]`.
pub(crate) fn gemm_a_bt(
    m: usize,
    k: usize,
    n: usize,
    a: &[f64],
    b: &[f64],
    beta: f64,
    c: &mut [f64],
) {
    debug_assert_eq!(a.len(), m * k);
    debug_assert_eq!(b.len(), n * k);
    debug_assert_eq!(c.len(), m * n);
    unsafe {
        matrixmultiply::dgemm(
            m,
            k,
            n,
            1.0,
            a.as_ptr(),
            k as isize,
            1,
            b.as_ptr(),
            1,
            k as isize,
            beta,
            c.as_mut_ptr(),
            n as isize,
            1,
        );
    }
}

/// Output spatial size of a convolution along one axis.
pub(crate) fn conv_out_len(len: usize, kernel: usize, stride: usize, pad: usize) -> usize {
    (len + 2 * pad - kernel) / stride + 1
}

/// Unfold `input[c_in, h, w]` into columns `[c_in*kh*kw, ho*wo]` (row-major)
/// with zero padding.
pub(crate) fn im2col(
    input: &[f64],
    c_in: usize,
    h: usize,
    w: usize,
    kh: usize,
    kw: usize,
    stride: usize,
    pad: usize,
) -> (Vec<f64>, usize, usize) {
    let ho = conv_out_len(h, kh, stride, pad);
    let wo = conv_out_len(w, kw, stride, pad);
    let l = ho * wo;
    let mut cols = vec![0.0; c_in * kh * kw * l];
    for c in 0..c_in {
        let plane = &input[c * h * w..(c + 1) * h * w];
        for ky in 0..kh {
            for kx in 0..kw {
                let row = ((c * kh + ky) * kw + kx) * l;
                for oy in 0..ho {
                    let iy = (oy * stride + ky) as isize - pad as isize;
                    if iy < 0 || iy >= h as isize {
                        continue;
                    }
                    let iy = iy as usize;
                    let dst = row + oy * wo;
                    for ox in 0..wo {
                        let ix = (ox * stride + kx) as isize - pad as isize;
                        if ix < 0 || ix >= w as isize {
                            continue;
                        }
                        cols[dst + ox] = plane[iy * w + ix as usize];
                    }
                }
            }
        }
    }
    (cols, ho, wo)
}

/// Scatter-add columns `[c_in*kh*kw, ho*wo]` back onto an image gradient.
pub(crate) fn col2im_add(
    cols: &[f64],
    c_in: usize,
    h: usize,
    w: usize,
    kh: usize,
    kw: usize,
    stride: usize,
    pad: usize,
    out: &mut [f64],
) {
    let ho = conv_out_len(h, kh, stride, pad);
    let wo = conv_out_len(w, kw, stride, pad);
    let l = ho * wo;
    for c in 0..c_in {
        let plane = &mut out[c * h * w..(c + 1) * h * w];
        for ky in 0..kh {
            for kx in 0..kw {
                let row = ((c * kh + ky) * kw + kx) * l;
                for oy in 0..ho {
                    let iy = (oy * stride + ky) as isize - pad as isize;
                    if iy < 0 || iy >= h as isize {
                        continue;
                    }
                    let iy = iy as usize;
                    let src = row + oy * wo;
                    for ox in 0..wo {
                        let ix = (ox * stride + kx) as isize - pad as isize;
                        if ix < 0 || ix >= w as isize {
                            continue;
                        }
                        plane[iy * w + ix as usize] += cols[src + ox];
                    }
                }
            }
        }
    }
}

/// Per-output-index source taps for bilinear upsampling along one axis.
///
/// Output index `o` samples `(o + 0.5)/factor - 0.5` in the input, clamped to
/// the border, yielding `(1 - t) * in[i0] + t * in[i1]`.
pub(crate) struct UpsampleAxis {
    pub i0: Vec<usize>,
    pub i1: Vec<usize>,
    pub t: Vec<f64>,
}

pub(crate) fn upsample_axis(len_in: usize, factor: usize) -> UpsampleAxis {
    let len_out = len_in * factor;
    let mut i0 = Vec::with_capacity(len_out);
    let mut i1 = Vec::with_capacity(len_out);
    let mut t = Vec::with_capacity(len_out);
    for o in 0..len_out {
        let s = (o as f64 + 0.5) / factor as f64 - 0.5;
        let s = s.clamp(0.0, (len_in - 1) as f64);
        let lo = s.floor().min((len_in - 1) as f64);
        let lo_i = lo as usize;
        let hi_i = (lo_i + 1).min(len_in - 1);
        i0.push(lo_i);
        i1.push(hi_i);
        t.push(s - lo);
    }
    UpsampleAxis { i0, i1, t }
}

/// Bilinear sampling taps for a continuous position on one axis, with border
/// clamping. Returns `(i0, i1, t, clamped)`.
pub(crate) fn sample_taps(pos: f64, len: usize) -> (usize, usize, f64, bool) {
    let max = (len - 1) as f64;
    let clamped = pos < 0.0 || pos > max;
    let p = pos.clamp(0.0, max);
    if len == 1 {
        return (0, 0, 0.0, clamped);
    }
    let lo = p.floor().min(max - 1.0);
    let i0 = lo as usize;
    (i0, i0 + 1, p - lo, clamped)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gemm_matches_naive() {
        let a = [1.0, 2.0, 3.0, 4.0, 5.0, 6.0]; // 2x3
        let b = [7.0, 8.0, 9.0, 10.0, 11.0, 12.0]; // 3x2
        let mut c = vec![0.0; 4];
        gemm(2, 3, 2, &a, &b, 0.0, &mut c);
        assert_eq!(c, vec![58.0, 64.0, 139.0, 154.0]);
    }

    #[test]
    fn transposed_gemm_variants_agree() {
        let a = [1.0, -2.0, 0.5, 3.0, 4.0, -1.0]; // 3x2 (a^T is 2x3)
        let b = [2.0, 1.0, 0.0, -1.0, 1.5, 2.0]; // 3x2
        let mut c = vec![0.0; 4];
        gemm_at_b(2, 3, 2, &a, &b, 0.0, &mut c);
        // naive a^T * b
        let mut want = vec![0.0; 4];
        for i in 0..2 {
            for j in 0..2 {
                for l in 0..3 {
                    want[i * 2 + j] += a[l * 2 + i] * b[l * 2 + j];
                }
            }
        }
        for (x, y) in c.iter().zip(&want) {
            assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn im2col_col2im_roundtrip_counts_taps() {
        // col2im(im2col(ones)) counts how many windows cover each pixel.
        let input = vec![1.0; 9];
        let (cols, ho, wo) = im2col(&input, 1, 3, 3, 3, 3, 1, 1);
        assert_eq!((ho, wo), (3, 3));
        let mut back = vec![0.0; 9];
        col2im_add(&cols, 1, 3, 3, 3, 3, 1, 1, &mut back);
        // center pixel is covered by all 9 windows, corners by 4
        assert_eq!(back[4], 9.0);
        assert_eq!(back[0], 4.0);
    }
}
