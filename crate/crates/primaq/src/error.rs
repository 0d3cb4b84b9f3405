//! Crate-wide error type.

use std::path::PathBuf;

#[derive(thiserror::Error, Debug)]
pub enum Error {
    #[error("quality factor {0} out of range [1, 100]")]
    QualityFactorOutOfRange(i64),

    #[error("zig-zag coefficient count {0} out of range [1, 64]")]
    ZigzagCountOutOfRange(usize),

    #[error("image dimensions {width}x{height} are not multiples of 8")]
    NotMultipleOf8 { width: usize, height: usize },

    #[error("image of {width}x{height} too small: {reason}")]
    ImageTooSmall {
        width: usize,
        height: usize,
        reason: String,
    },

    #[error("grid shift ({r}, {c}) out of range [0, 7]")]
    ShiftOutOfRange { r: u8, c: u8 },

    #[error(
        "coefficient {value} at position {index} exceeds bound {bound} \
         (first-compression qualities below QF 50 are unsupported)"
    )]
    LabelOutOfRange {
        index: usize,
        value: u16,
        bound: u16,
    },

    #[error("invalid prediction in block {block}: {reason}")]
    InvalidPrediction { block: usize, reason: String },

    #[error("vector layout mismatch: expected length {expected}, got {got}")]
    LayoutMismatch { expected: usize, got: usize },

    #[error("model head width {head} does not match label layout total {total}")]
    HeadSizeMismatch { head: usize, total: usize },

    #[error("input batch has wrong shape: {0}")]
    InputShape(String),

    #[error("coefficient count mismatch: checkpoint has n_c={checkpoint}, expected n_c={expected}")]
    NcMismatch { checkpoint: usize, expected: usize },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("dataset row {row} ({path}): {reason}")]
    ManifestRow {
        row: usize,
        path: String,
        reason: String,
    },

    #[error("checkpoint at {path}: {reason}")]
    Checkpoint { path: PathBuf, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Image(#[from] image::ImageError),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error("failed to parse config file: {0}")]
    Toml(#[from] toml::de::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
