//! Orthonormal 8x8 type-II/III DCT pair.
//!
//! Implemented as two passes of an 8-point matrix product in f64. Speed is
//! irrelevant next to the CNN; exactness of the roundtrip is what the
//! simulator needs, so no fixed-point fast variant is used.

use std::sync::OnceLock;

/// 8-point orthonormal DCT-II basis matrix: C[k][n] = a(k) cos((2n+1)k pi/16)
/// with a(0) = sqrt(1/8), a(k) = 1/2 for k > 0.
fn basis() -> &'static [[f64; 8]; 8] {
    static BASIS: OnceLock<[[f64; 8]; 8]> = OnceLock::new();
    BASIS.get_or_init(|| {
        let mut c = [[0.0; 8]; 8];
        for k in 0..8 {
            let a = if k == 0 {
                (1.0f64 / 8.0).sqrt()
            } else {
                0.5
            };
            for n in 0..8 {
                c[k][n] = a * ((2 * n + 1) as f64 * k as f64 * std::f64::consts::PI / 16.0).cos();
            }
        }
        c
    })
}

/// Forward orthonormal DCT: F = C * B * C^T. Callers level-shift pixel
/// blocks by -128 before transforming.
pub fn dct8x8_forward(block: &[[f64; 8]; 8]) -> [[f64; 8]; 8] {
    let c = basis();
    // rows: tmp = C * B^T? computed as tmp[k][n] = sum_m C[k][m] * block[n][m]
    let mut tmp = [[0.0; 8]; 8];
    for k in 0..8 {
        for n in 0..8 {
            let mut acc = 0.0;
            for m in 0..8 {
                acc += c[k][m] * block[n][m];
            }
            tmp[k][n] = acc;
        }
    }
    let mut out = [[0.0; 8]; 8];
    for k in 0..8 {
        for l in 0..8 {
            let mut acc = 0.0;
            for n in 0..8 {
                acc += c[l][n] * tmp[k][n];
            }
            out[k][l] = acc;
        }
    }
    out
}

/// Inverse (type-III) DCT: B = C^T * F * C.
pub fn dct8x8_inverse(coeffs: &[[f64; 8]; 8]) -> [[f64; 8]; 8] {
    let c = basis();
    // tmp[n][l] = sum_k C[k][n] * coeffs[k][l]
    let mut tmp = [[0.0; 8]; 8];
    for n in 0..8 {
        for l in 0..8 {
            let mut acc = 0.0;
            for k in 0..8 {
                acc += c[k][n] * coeffs[k][l];
            }
            tmp[n][l] = acc;
        }
    }
    let mut out = [[0.0; 8]; 8];
    for n in 0..8 {
        for m in 0..8 {
            let mut acc = 0.0;
            for l in 0..8 {
                acc += c[l][m] * tmp[n][l];
            }
            out[n][m] = acc;
        }
    }
    out
}
