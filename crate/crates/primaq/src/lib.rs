//! Primary quantization matrix estimation for double-JPEG compressed images.
//!
//! When a JPEG image is decompressed and compressed a second time, traces of
//! the first quantization survive in the DCT coefficient statistics. This
//! crate estimates the first `N_c` zig-zag-ordered steps of the primary
//! luminance quantization matrix from small 64x64 RGB patches, using a
//! DenseNet feature extractor with one softmax block per coefficient, and
//! builds everything needed around that estimator:
//!
//! - [`jpeg`]: a deterministic single/double JPEG compression simulator
//!   (quality-factor tables, 8x8 DCT, quantization, grid-shift misalignment),
//! - [`label`]: the blocked one-hot label codec and per-position distance
//!   vectors,
//! - [`loss`]: blocked cross-entropy and the combined accuracy/distance loss
//!   with analytic logit gradients,
//! - [`model`]: the DenseNet-40 backbone with the blocked-softmax head,
//! - [`dataset`]: double-JPEG patch dataset generation with ground-truth
//!   manifests,
//! - [`trainer`]: Adam training and evaluation,
//! - [`metrics`]: per-patch and aggregate accuracy/MSE reports,
//! - [`localize`]: sliding-window quantization-matrix maps for tampering
//!   localization.

pub mod dataset;
pub mod error;
pub mod jpeg;
pub mod label;
pub mod localize;
pub mod loss;
pub mod metrics;
pub mod model;
pub mod nn;
pub mod runmeta;
pub mod trainer;

pub use error::{Error, Result};
