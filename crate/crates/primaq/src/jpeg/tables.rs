//! Standard quantization tables and quality-factor scaling.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Base luminance quantization table (ITU T.81, Table K.1). This is the
/// table in effect at quality factor 50.
pub const BASE_LUMA: [[u16; 8]; 8] = [
    [16, 11, 10, 16, 24, 40, 51, 61],
    [12, 12, 14, 19, 26, 58, 60, 55],
    [14, 13, 16, 24, 40, 57, 69, 56],
    [14, 17, 22, 29, 51, 87, 80, 62],
    [18, 22, 37, 56, 68, 109, 103, 77],
    [24, 35, 55, 64, 81, 104, 113, 92],
    [49, 64, 78, 87, 103, 121, 120, 101],
    [72, 92, 95, 98, 112, 100, 103, 99],
];

/// Base chrominance quantization table (ITU T.81, Table K.2).
pub const BASE_CHROMA: [[u16; 8]; 8] = [
    [17, 18, 24, 47, 99, 99, 99, 99],
    [18, 21, 26, 66, 99, 99, 99, 99],
    [24, 26, 56, 99, 99, 99, 99, 99],
    [47, 66, 99, 99, 99, 99, 99, 99],
    [99, 99, 99, 99, 99, 99, 99, 99],
    [99, 99, 99, 99, 99, 99, 99, 99],
    [99, 99, 99, 99, 99, 99, 99, 99],
    [99, 99, 99, 99, 99, 99, 99, 99],
];

/// Which channel a quantization table applies to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Luma,
    Chroma,
}

/// An 8x8 matrix of quantization steps, each in `[1, 255]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuantTable {
    pub steps: [[u16; 8]; 8],
    pub role: Role,
}

impl QuantTable {
    /// Wraps an explicit step matrix (e.g. a non-standard encoder table).
    /// Every step must lie in `[1, 255]`.
    pub fn from_steps(steps: [[u16; 8]; 8], role: Role) -> Result<Self> {
        for row in &steps {
            for &s in row {
                if s < 1 || s > 255 {
                    return Err(Error::Config(format!(
                        "quantization step {s} out of range [1, 255]"
                    )));
                }
            }
        }
        Ok(Self { steps, role })
    }

    pub fn step(&self, row: usize, col: usize) -> u16 {
        self.steps[row][col]
    }

    /// Serializes the table as 8 CSV lines of 8 integers.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.steps {
            let line: Vec<String> = row.iter().map(|s| s.to_string()).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }
}

/// Builds the standard quantization table for a quality factor using the IJG
/// scaling rule: `scale = 5000/qf` below 50, `200 - 2*qf` otherwise, and each
/// step is `floor((base*scale + 50)/100)` clamped to `[1, 255]`.
pub fn quant_table_from_qf(qf: u32, role: Role) -> Result<QuantTable> {
    if qf < 1 || qf > 100 {
        return Err(Error::QualityFactorOutOfRange(qf as i64));
    }
    let scale = if qf < 50 { 5000 / qf } else { 200 - 2 * qf };
    let base = match role {
        Role::Luma => &BASE_LUMA,
        Role::Chroma => &BASE_CHROMA,
    };
    let mut steps = [[0u16; 8]; 8];
    for r in 0..8 {
        for c in 0..8 {
            let v = (base[r][c] as u32 * scale + 50) / 100;
            steps[r][c] = v.clamp(1, 255) as u16;
        }
    }
    Ok(QuantTable { steps, role })
}
