//! Blocked one-hot label codec for quantization coefficient vectors.
//!
//! Each coefficient `q_i` in `[1, qmax_i]` is one-hot encoded over a block of
//! `qmax_i` positions; blocks are concatenated into a single vector. The
//! paired distance vector holds, per position, the integer distance to the
//! block's true coefficient and drives the regression-like loss term.
//! The per-coefficient bounds `qmax_i` come from the QF=50 luminance table,
//! the lowest first-compression quality the estimator supports.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jpeg::{quant_table_from_qf, zigzag_scan, Role};

/// First `n_c` zig-zag-ordered quantization steps, values in `[1, qmax_i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffVector {
    pub values: Vec<u16>,
}

impl CoeffVector {
    pub fn new(values: Vec<u16>) -> Self {
        Self { values }
    }

    pub fn n_c(&self) -> usize {
        self.values.len()
    }

    /// Ground-truth vector for a standard quality factor.
    pub fn from_qf(qf: u32, n_c: usize) -> Result<Self> {
        let table = quant_table_from_qf(qf, Role::Luma)?;
        Ok(Self::new(zigzag_scan(&table, n_c)?))
    }

    /// Comma-separated serialization used in dataset manifests.
    pub fn to_csv_field(&self) -> String {
        self.values
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn from_csv_field(s: &str) -> Result<Self> {
        let values = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u16>()
                    .map_err(|e| Error::Config(format!("bad coefficient {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(values))
    }
}

/// Per-coefficient upper bounds `qmax_i` and the derived block layout.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsVector {
    pub qmax: Vec<u16>,
}

impl BoundsVector {
    pub fn n_c(&self) -> usize {
        self.qmax.len()
    }

    /// Total width of the concatenated blocks (the model head width).
    pub fn total(&self) -> usize {
        self.qmax.iter().map(|&q| q as usize).sum()
    }

    /// Byte offset of block `i` within the concatenated layout.
    pub fn block_start(&self, i: usize) -> usize {
        self.qmax[..i].iter().map(|&q| q as usize).sum()
    }

    /// (start, length) of every block.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.qmax.len());
        let mut start = 0;
        for &q in &self.qmax {
            out.push((start, q as usize));
            start += q as usize;
        }
        out
    }

    pub fn to_csv(&self) -> String {
        self.qmax
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Bounds for the first `n_c` coefficients: the QF=50 luminance table in
/// zig-zag order.
pub fn qmax_bounds(n_c: usize) -> Result<BoundsVector> {
    if n_c < 1 || n_c > 64 {
        return Err(Error::ZigzagCountOutOfRange(n_c));
    }
    let table = quant_table_from_qf(50, Role::Luma)?;
    Ok(BoundsVector {
        qmax: zigzag_scan(&table, n_c)?,
    })
}

/// Concatenation of one-hot blocks; exactly one 1 per block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockedLabel {
    pub bits: Vec<u8>,
}

/// Per-position distances `|j - q_i|` within each block; one zero per block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceVector {
    pub dist: Vec<u32>,
}

/// Per-block probability distributions emitted by the estimator, in the same
/// concatenated layout as [`BlockedLabel`].
#[derive(Debug, Clone, PartialEq)]
pub struct PredictionVector {
    pub probs: Vec<f64>,
}

fn check_coeffs(q: &CoeffVector, b: &BoundsVector) -> Result<()> {
    if q.n_c() != b.n_c() {
        return Err(Error::LayoutMismatch {
            expected: b.n_c(),
            got: q.n_c(),
        });
    }
    for (i, (&v, &m)) in q.values.iter().zip(&b.qmax).enumerate() {
        if v < 1 || v > m {
            return Err(Error::LabelOutOfRange {
                index: i,
                value: v,
                bound: m,
            });
        }
    }
    Ok(())
}

/// One-hot encodes a coefficient vector: block `i` carries a 1 at position
/// `q_i` (1-based within the block).
pub fn encode(q: &CoeffVector, b: &BoundsVector) -> Result<BlockedLabel> {
    check_coeffs(q, b)?;
    let mut bits = vec![0u8; b.total()];
    let mut start = 0;
    for (&v, &m) in q.values.iter().zip(&b.qmax) {
        bits[start + (v as usize - 1)] = 1;
        start += m as usize;
    }
    Ok(BlockedLabel { bits })
}

/// Distance companion of [`encode`]: block `i` position `j` holds `|j - q_i|`
/// (with `j` 1-based).
pub fn distance_vector(q: &CoeffVector, b: &BoundsVector) -> Result<DistanceVector> {
    check_coeffs(q, b)?;
    let mut dist = Vec::with_capacity(b.total());
    for (&v, &m) in q.values.iter().zip(&b.qmax) {
        for j in 1..=m as i64 {
            dist.push((j - v as i64).unsigned_abs() as u32);
        }
    }
    Ok(DistanceVector { dist })
}

/// Decodes a prediction by per-block argmax; ties go to the smallest index
/// (the lower quantization step).
pub fn decode(f: &PredictionVector, b: &BoundsVector) -> Result<CoeffVector> {
    if f.probs.len() != b.total() {
        return Err(Error::LayoutMismatch {
            expected: b.total(),
            got: f.probs.len(),
        });
    }
    let mut values = Vec::with_capacity(b.n_c());
    for (i, (start, len)) in b.blocks().into_iter().enumerate() {
        let block = &f.probs[start..start + len];
        let mut best = 0usize;
        let mut best_p = f64::NEG_INFINITY;
        for (j, &p) in block.iter().enumerate() {
            if p.is_nan() {
                return Err(Error::InvalidPrediction {
                    block: i,
                    reason: format!("NaN probability at position {}", j + 1),
                });
            }
            if p > best_p {
                best_p = p;
                best = j;
            }
        }
        values.push((best + 1) as u16);
    }
    Ok(CoeffVector::new(values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bounds(qmax: &[u16]) -> BoundsVector {
        BoundsVector {
            qmax: qmax.to_vec(),
        }
    }

    #[test]
    fn qf50_bounds() {
        assert_eq!(qmax_bounds(1).unwrap().qmax, vec![16]);
        assert_eq!(qmax_bounds(1).unwrap().total(), 16);
        let b3 = qmax_bounds(3).unwrap();
        assert_eq!(b3.qmax, vec![16, 11, 12]);
        assert_eq!(b3.total(), 39);
        let b15 = qmax_bounds(15).unwrap();
        assert_eq!(b15.total(), 226);
        assert!(qmax_bounds(0).is_err());
        assert!(qmax_bounds(65).is_err());
    }

    #[test]
    fn encode_places_single_one_per_block() {
        let b = bounds(&[3, 3]);
        let y = encode(&CoeffVector::new(vec![2, 1]), &b).unwrap();
        assert_eq!(y.bits, vec![0, 1, 0, 1, 0, 0]);

        let ones = encode(&CoeffVector::new(vec![1, 1]), &b).unwrap();
        assert_eq!(ones.bits, vec![1, 0, 0, 1, 0, 0]);
    }

    #[test]
    fn encode_boundary_at_block_maxima() {
        let b = qmax_bounds(15).unwrap();
        let q = CoeffVector::from_qf(50, 15).unwrap();
        assert_eq!(q.values, b.qmax);
        let y = encode(&q, &b).unwrap();
        for (start, len) in b.blocks() {
            let block = &y.bits[start..start + len];
            assert_eq!(block.iter().filter(|&&x| x == 1).count(), 1);
            assert_eq!(block[len - 1], 1, "QF 50 label sits at the block end");
        }
    }

    #[test]
    fn encode_rejects_out_of_bound_coefficients() {
        let b = bounds(&[3, 3]);
        assert!(matches!(
            encode(&CoeffVector::new(vec![4, 1]), &b),
            Err(Error::LabelOutOfRange {
                index: 0,
                value: 4,
                bound: 3
            })
        ));
        assert!(encode(&CoeffVector::new(vec![0, 1]), &b).is_err());
    }

    #[test]
    fn distance_vector_hand_case() {
        let b = bounds(&[3, 3]);
        let d = distance_vector(&CoeffVector::new(vec![2, 1]), &b).unwrap();
        assert_eq!(d.dist, vec![1, 0, 1, 0, 1, 2]);
    }

    #[test]
    fn distance_at_block_maxima_counts_down() {
        let b = bounds(&[4, 2]);
        let d = distance_vector(&CoeffVector::new(vec![4, 2]), &b).unwrap();
        assert_eq!(d.dist, vec![3, 2, 1, 0, 1, 0]);
    }

    /// Brute-force oracle: for every position, count the steps to the 1 in
    /// the encoded label.
    fn distance_by_step_count(q: &CoeffVector, b: &BoundsVector) -> Vec<u32> {
        let y = encode(q, b).unwrap();
        let mut out = vec![0u32; b.total()];
        for (start, len) in b.blocks() {
            let one = (start..start + len).find(|&i| y.bits[i] == 1).unwrap();
            for i in start..start + len {
                out[i] = (i as i64 - one as i64).unsigned_abs() as u32;
            }
        }
        out
    }

    #[test]
    fn distance_matches_step_count_oracle_on_full_nc3_lattice() {
        let b = qmax_bounds(3).unwrap();
        for q1 in 1..=16u16 {
            for q2 in 1..=11u16 {
                for q3 in 1..=12u16 {
                    let q = CoeffVector::new(vec![q1, q2, q3]);
                    let d = distance_vector(&q, &b).unwrap();
                    assert_eq!(d.dist, distance_by_step_count(&q, &b));
                }
            }
        }
    }

    #[test]
    fn label_and_distance_inner_product_is_zero() {
        let b = qmax_bounds(5).unwrap();
        let q = CoeffVector::new(vec![3, 11, 1, 14, 7]);
        let y = encode(&q, &b).unwrap();
        let d = distance_vector(&q, &b).unwrap();
        let ip: u64 = y
            .bits
            .iter()
            .zip(&d.dist)
            .map(|(&b, &d)| b as u64 * d as u64)
            .sum();
        assert_eq!(ip, 0);
    }

    #[test]
    fn decode_argmax_and_tie_break() {
        let b = bounds(&[3]);
        let f = PredictionVector {
            probs: vec![0.1, 0.7, 0.2],
        };
        assert_eq!(decode(&f, &b).unwrap().values, vec![2]);
        let tie = PredictionVector {
            probs: vec![0.5, 0.5, 0.0],
        };
        assert_eq!(decode(&tie, &b).unwrap().values, vec![1]);
    }

    #[test]
    fn decode_rejects_nan() {
        let b = bounds(&[2]);
        let f = PredictionVector {
            probs: vec![f64::NAN, 0.5],
        };
        assert!(matches!(
            decode(&f, &b),
            Err(Error::InvalidPrediction { block: 0, .. })
        ));
    }

    #[test]
    fn roundtrip_exhaustive_nc3() {
        let b = qmax_bounds(3).unwrap();
        let mut count = 0;
        for q1 in 1..=16u16 {
            for q2 in 1..=11u16 {
                for q3 in 1..=12u16 {
                    let q = CoeffVector::new(vec![q1, q2, q3]);
                    let y = encode(&q, &b).unwrap();
                    let f = PredictionVector {
                        probs: y.bits.iter().map(|&v| v as f64).collect(),
                    };
                    assert_eq!(decode(&f, &b).unwrap(), q);
                    count += 1;
                }
            }
        }
        assert_eq!(count, 16 * 11 * 12);
    }

    #[test]
    fn csv_field_roundtrip() {
        let q = CoeffVector::new(vec![16, 11, 12, 1]);
        assert_eq!(q.to_csv_field(), "16,11,12,1");
        assert_eq!(CoeffVector::from_csv_field("16,11,12,1").unwrap(), q);
        assert!(CoeffVector::from_csv_field("a,b").is_err());
    }

    proptest! {
        /// decode . encode = identity over random points of the N_c=15 lattice.
        #[test]
        fn roundtrip_sampled_nc15(seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let b = qmax_bounds(15).unwrap();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let values: Vec<u16> = b.qmax.iter().map(|&m| rng.gen_range(1..=m)).collect();
            let q = CoeffVector::new(values);
            let y = encode(&q, &b).unwrap();
            let f = PredictionVector { probs: y.bits.iter().map(|&v| v as f64).collect() };
            prop_assert_eq!(decode(&f, &b).unwrap(), q);
        }

        /// Block layouts derived from the bounds are consistent across the
        /// label, distance and prediction vectors.
        #[test]
        fn layout_consistency(n_c in 1usize..=15) {
            let b = qmax_bounds(n_c).unwrap();
            let q = CoeffVector::new(b.qmax.iter().map(|&m| 1 + m / 2).collect());
            let y = encode(&q, &b).unwrap();
            let d = distance_vector(&q, &b).unwrap();
            prop_assert_eq!(y.bits.len(), b.total());
            prop_assert_eq!(d.dist.len(), b.total());
            let mut sum = 0usize;
            for (start, len) in b.blocks() {
                prop_assert_eq!(start, sum);
                sum += len;
            }
            prop_assert_eq!(sum, b.total());
        }
    }
}
