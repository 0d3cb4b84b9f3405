//! RGB <-> YCbCr conversion, BT.601 full-range (JFIF convention).

const KR: f64 = 0.299;
const KG: f64 = 0.587;
const KB: f64 = 0.114;

/// Full-range BT.601 forward transform; chroma channels are offset by +128.
#[inline]
pub fn rgb_to_ycbcr(r: f64, g: f64, b: f64) -> (f64, f64, f64) {
    let y = KR * r + KG * g + KB * b;
    let cb = 128.0 + 0.5 * (b - y) / (1.0 - KB);
    let cr = 128.0 + 0.5 * (r - y) / (1.0 - KR);
    (y, cb, cr)
}

/// Exact inverse of [`rgb_to_ycbcr`] (coefficients derived from the same
/// KR/KG/KB constants so the pair roundtrips to machine precision).
#[inline]
pub fn ycbcr_to_rgb(y: f64, cb: f64, cr: f64) -> (f64, f64, f64) {
    let cb = cb - 128.0;
    let cr = cr - 128.0;
    let r = y + 2.0 * (1.0 - KR) * cr;
    let b = y + 2.0 * (1.0 - KB) * cb;
    let g = (y - KR * r - KB * b) / KG;
    (r, g, b)
}
