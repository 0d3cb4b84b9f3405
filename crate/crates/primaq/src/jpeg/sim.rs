//! Single and double JPEG compression of the pixel domain.
//!
//! The simulator reproduces the DCT-domain effect of a baseline JPEG encode +
//! decode without entropy coding: per 8x8 block of each YCbCr channel the
//! pixels are level-shifted, transformed, divided by the quantization step
//! and rounded, then de-quantized and inverse-transformed. Chroma is kept at
//! 4:4:4 so the roundtrip is deterministic and the luminance path exact.
//!
//! Pixel rounding at the end of each decode is what a real decoder does; a
//! rounding-free mode keeps real-valued pixels so DCT-domain idempotence
//! properties hold exactly in tests.

use std::path::Path;

use crate::error::{Error, Result};

use super::color::{rgb_to_ycbcr, ycbcr_to_rgb};
use super::dct::{dct8x8_forward, dct8x8_inverse};
use super::tables::{quant_table_from_qf, QuantTable, Role};

/// Integer RGB image, channel order R, G, B, row-major interleaved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RgbImage {
    pub width: usize,
    pub height: usize,
    pub data: Vec<u8>,
}

impl RgbImage {
    pub fn new(width: usize, height: usize, data: Vec<u8>) -> Result<Self> {
        if data.len() != width * height * 3 {
            return Err(Error::InputShape(format!(
                "buffer of {} bytes does not match {width}x{height}x3",
                data.len()
            )));
        }
        Ok(Self {
            width,
            height,
            data,
        })
    }

    #[inline]
    pub fn pixel(&self, y: usize, x: usize) -> (u8, u8, u8) {
        let i = (y * self.width + x) * 3;
        (self.data[i], self.data[i + 1], self.data[i + 2])
    }

    /// Extracts a `w`x`h` sub-image with top-left corner at (x0, y0).
    pub fn crop(&self, x0: usize, y0: usize, w: usize, h: usize) -> Result<Self> {
        if x0 + w > self.width || y0 + h > self.height {
            return Err(Error::ImageTooSmall {
                width: self.width,
                height: self.height,
                reason: format!("crop {w}x{h}+{x0}+{y0} out of bounds"),
            });
        }
        let mut data = Vec::with_capacity(w * h * 3);
        for y in 0..h {
            let src = ((y0 + y) * self.width + x0) * 3;
            data.extend_from_slice(&self.data[src..src + w * 3]);
        }
        Ok(Self {
            width: w,
            height: h,
            data,
        })
    }

    pub fn to_real(&self) -> RealImage {
        let n = self.width * self.height;
        let mut planes = [
            vec![0.0; n],
            vec![0.0; n],
            vec![0.0; n],
        ];
        for i in 0..n {
            planes[0][i] = self.data[3 * i] as f64;
            planes[1][i] = self.data[3 * i + 1] as f64;
            planes[2][i] = self.data[3 * i + 2] as f64;
        }
        RealImage {
            width: self.width,
            height: self.height,
            planes,
        }
    }

    pub fn save_png(&self, path: &Path) -> Result<()> {
        let buf = image::RgbImage::from_raw(self.width as u32, self.height as u32, self.data.clone())
            .expect("dimensions already validated");
        buf.save_with_format(path, image::ImageFormat::Png)?;
        Ok(())
    }

    pub fn load_png(path: &Path) -> Result<Self> {
        let img = image::open(path)?.to_rgb8();
        let (w, h) = img.dimensions();
        RgbImage::new(w as usize, h as usize, img.into_raw())
    }
}

/// Real-valued RGB image used by the rounding-free simulation mode.
#[derive(Debug, Clone, PartialEq)]
pub struct RealImage {
    pub width: usize,
    pub height: usize,
    /// R, G, B planes, row-major.
    pub planes: [Vec<f64>; 3],
}

impl RealImage {
    /// Rounds and clips to integer pixels.
    pub fn to_rgb8(&self) -> RgbImage {
        let n = self.width * self.height;
        let mut data = vec![0u8; n * 3];
        for i in 0..n {
            for ch in 0..3 {
                data[3 * i + ch] = self.planes[ch][i].round().clamp(0.0, 255.0) as u8;
            }
        }
        RgbImage {
            width: self.width,
            height: self.height,
            data,
        }
    }

    pub fn crop(&self, x0: usize, y0: usize, w: usize, h: usize) -> Result<Self> {
        if x0 + w > self.width || y0 + h > self.height {
            return Err(Error::ImageTooSmall {
                width: self.width,
                height: self.height,
                reason: format!("crop {w}x{h}+{x0}+{y0} out of bounds"),
            });
        }
        let mut planes = [
            Vec::with_capacity(w * h),
            Vec::with_capacity(w * h),
            Vec::with_capacity(w * h),
        ];
        for ch in 0..3 {
            for y in 0..h {
                let src = (y0 + y) * self.width + x0;
                planes[ch].extend_from_slice(&self.planes[ch][src..src + w]);
            }
        }
        Ok(Self {
            width: w,
            height: h,
            planes,
        })
    }
}

/// Block-grid offset between two compressions; (0, 0) is aligned.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct GridShift {
    pub r: u8,
    pub c: u8,
}

impl GridShift {
    pub fn new(r: u8, c: u8) -> Result<Self> {
        if r > 7 || c > 7 {
            return Err(Error::ShiftOutOfRange { r, c });
        }
        Ok(Self { r, c })
    }

    pub fn aligned(&self) -> bool {
        self.r == 0 && self.c == 0
    }
}

/// One 8x8 block of quantized DCT coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffBlock {
    pub values: [[i32; 8]; 8],
}

/// Round-half-away-from-zero quantization of one transformed block.
fn quantize_block(coeffs: &[[f64; 8]; 8], table: &QuantTable) -> CoeffBlock {
    let mut values = [[0i32; 8]; 8];
    for r in 0..8 {
        for c in 0..8 {
            // f64::round ties away from zero, the common JPEG convention
            values[r][c] = (coeffs[r][c] / table.steps[r][c] as f64).round() as i32;
        }
    }
    CoeffBlock { values }
}

fn dequantize_block(block: &CoeffBlock, table: &QuantTable) -> [[f64; 8]; 8] {
    let mut out = [[0.0; 8]; 8];
    for r in 0..8 {
        for c in 0..8 {
            out[r][c] = (block.values[r][c] * table.steps[r][c] as i32) as f64;
        }
    }
    out
}

fn check_multiple_of_8(img: &RealImage) -> Result<()> {
    if img.width % 8 != 0 || img.height % 8 != 0 || img.width == 0 || img.height == 0 {
        return Err(Error::NotMultipleOf8 {
            width: img.width,
            height: img.height,
        });
    }
    Ok(())
}

/// Quantize-dequantize one channel plane in place, block by block.
fn requantize_plane(plane: &mut [f64], width: usize, height: usize, table: &QuantTable) {
    for by in (0..height).step_by(8) {
        for bx in (0..width).step_by(8) {
            let mut block = [[0.0; 8]; 8];
            for r in 0..8 {
                for c in 0..8 {
                    block[r][c] = plane[(by + r) * width + bx + c] - 128.0;
                }
            }
            let f = dct8x8_forward(&block);
            let q = quantize_block(&f, table);
            let d = dequantize_block(&q, table);
            let s = dct8x8_inverse(&d);
            for r in 0..8 {
                for c in 0..8 {
                    plane[(by + r) * width + bx + c] = s[r][c] + 128.0;
                }
            }
        }
    }
}

/// One JPEG compress + decompress pass over all three channels (4:4:4).
///
/// With `pixel_rounding` the decoded pixels are rounded and clipped to
/// `[0, 255]` like a real decoder; without it the real-valued pixels are kept
/// so DCT-domain identities stay exact.
pub fn compress_decompress(
    img: &RealImage,
    luma: &QuantTable,
    chroma: &QuantTable,
    pixel_rounding: bool,
) -> Result<RealImage> {
    check_multiple_of_8(img)?;
    let n = img.width * img.height;
    let mut y = vec![0.0; n];
    let mut cb = vec![0.0; n];
    let mut cr = vec![0.0; n];
    for i in 0..n {
        let (yy, b, r) = rgb_to_ycbcr(img.planes[0][i], img.planes[1][i], img.planes[2][i]);
        y[i] = yy;
        cb[i] = b;
        cr[i] = r;
    }
    requantize_plane(&mut y, img.width, img.height, luma);
    requantize_plane(&mut cb, img.width, img.height, chroma);
    requantize_plane(&mut cr, img.width, img.height, chroma);
    let mut planes = [vec![0.0; n], vec![0.0; n], vec![0.0; n]];
    for i in 0..n {
        let (r, g, b) = ycbcr_to_rgb(y[i], cb[i], cr[i]);
        if pixel_rounding {
            planes[0][i] = r.round().clamp(0.0, 255.0);
            planes[1][i] = g.round().clamp(0.0, 255.0);
            planes[2][i] = b.round().clamp(0.0, 255.0);
        } else {
            planes[0][i] = r;
            planes[1][i] = g;
            planes[2][i] = b;
        }
    }
    Ok(RealImage {
        width: img.width,
        height: img.height,
        planes,
    })
}

/// [`compress_decompress`] with standard tables for a quality factor.
pub fn compress_decompress_qf(
    img: &RealImage,
    qf: u32,
    pixel_rounding: bool,
) -> Result<RealImage> {
    let luma = quant_table_from_qf(qf, Role::Luma)?;
    let chroma = quant_table_from_qf(qf, Role::Chroma)?;
    compress_decompress(img, &luma, &chroma, pixel_rounding)
}

/// Double JPEG compression with an optional grid shift between the passes.
///
/// The first compression uses `q1`; the decoded image then loses its top
/// `shift.r` rows and left `shift.c` columns (the standard simulation of
/// non-aligned recompression), is trimmed to a multiple of 8, and is
/// compressed again with `q2`.
pub fn double_compress(
    img: &RealImage,
    q1_luma: &QuantTable,
    q1_chroma: &QuantTable,
    q2_luma: &QuantTable,
    q2_chroma: &QuantTable,
    shift: GridShift,
    pixel_rounding: bool,
) -> Result<RealImage> {
    let first = compress_decompress(img, q1_luma, q1_chroma, pixel_rounding)?;
    let (r, c) = (shift.r as usize, shift.c as usize);
    if first.width <= c || first.height <= r {
        return Err(Error::ImageTooSmall {
            width: first.width,
            height: first.height,
            reason: format!("cannot apply grid shift ({r}, {c})"),
        });
    }
    let w = ((first.width - c) / 8) * 8;
    let h = ((first.height - r) / 8) * 8;
    if w < 8 || h < 8 {
        return Err(Error::ImageTooSmall {
            width: first.width,
            height: first.height,
            reason: format!("no full 8x8 block remains after shift ({r}, {c})"),
        });
    }
    let shifted = first.crop(c, r, w, h)?;
    compress_decompress(&shifted, q2_luma, q2_chroma, pixel_rounding)
}

/// [`double_compress`] with standard tables for (qf1, qf2).
pub fn double_compress_qf(
    img: &RealImage,
    qf1: u32,
    qf2: u32,
    shift: GridShift,
    pixel_rounding: bool,
) -> Result<RealImage> {
    double_compress(
        img,
        &quant_table_from_qf(qf1, Role::Luma)?,
        &quant_table_from_qf(qf1, Role::Chroma)?,
        &quant_table_from_qf(qf2, Role::Luma)?,
        &quant_table_from_qf(qf2, Role::Chroma)?,
        shift,
        pixel_rounding,
    )
}

/// Quantized luminance DCT coefficients of every 8x8 block, row-major over
/// the block grid. This is the quantity double-compression forensics reads.
pub fn luma_quant_coeffs(img: &RealImage, table: &QuantTable) -> Result<Vec<CoeffBlock>> {
    check_multiple_of_8(img)?;
    let n = img.width * img.height;
    let mut y = vec![0.0; n];
    for i in 0..n {
        let (yy, _, _) = rgb_to_ycbcr(img.planes[0][i], img.planes[1][i], img.planes[2][i]);
        y[i] = yy;
    }
    let mut blocks = Vec::with_capacity((img.height / 8) * (img.width / 8));
    for by in (0..img.height).step_by(8) {
        for bx in (0..img.width).step_by(8) {
            let mut block = [[0.0; 8]; 8];
            for r in 0..8 {
                for c in 0..8 {
                    block[r][c] = y[(by + r) * img.width + bx + c] - 128.0;
                }
            }
            blocks.push(quantize_block(&dct8x8_forward(&block), table));
        }
    }
    Ok(blocks)
}
