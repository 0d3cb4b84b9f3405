//! Deterministic single/double JPEG compression simulator.
//!
//! Everything operates on the decoded pixel domain; there is no bitstream or
//! entropy coding. Ground-truth quantization tables are therefore known
//! exactly, which is what the dataset generator and the oracle tests need.

pub mod color;
pub mod dct;
pub mod sim;
pub mod tables;
pub mod zigzag;

pub use dct::{dct8x8_forward, dct8x8_inverse};
pub use sim::{
    compress_decompress, compress_decompress_qf, double_compress, double_compress_qf,
    luma_quant_coeffs, CoeffBlock, GridShift, RealImage, RgbImage,
};
pub use tables::{quant_table_from_qf, QuantTable, Role, BASE_CHROMA, BASE_LUMA};
pub use zigzag::{zigzag_scan, ZIGZAG};
