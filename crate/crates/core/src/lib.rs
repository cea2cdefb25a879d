//! Linear cross-attention fusion with verified algebra.
//!
//! The crate provides, in dependency order:
//!
//! - [`matrix`]: dense `f64` matrices and seeded randomness;
//! - [`kernel`]: the feature-map kernels applied before similarity scoring;
//! - [`caf`]: mean-centered linear attention, its quadratic reference
//!   implementation, multi-head wrapping, and vision-language fusion;
//! - [`vision`]: image tiling, pixel shuffle, and the MLP adapter;
//! - [`distill`]: the teacher-distillation multi-task loss with analytic
//!   gradients and the JSONL trace format;
//! - [`gradcheck`]: central-difference gradient verification.
//!
//! Everything is pure and deterministic; random content is always derived
//! from an explicit [`Seed`].

pub mod caf;
pub mod distill;
pub mod error;
pub mod gradcheck;
pub mod kernel;
pub mod matrix;
pub mod vision;

pub use caf::{
    attention_weights, caf_linear, caf_reference, fuse, fuse_directed, multi_head_caf,
    similarity_scores, AttentionWeights, CafConfig, FuseDirection, FusedSequence,
};
pub use distill::{
    build_enriched_prompt, kl_term, mtl_loss, mtl_loss_with_grads, nll_term, parse_label_line,
    parse_teacher_trace, LossBreakdown, TeacherTrace, TokenSeq, UncertaintyParams,
};
pub use error::{Error, Result};
pub use gradcheck::{check_grads, finite_diff_grad, GradReport};
pub use kernel::{apply_kernel, KernelKind};
pub use matrix::{matmul, row_softmax, seeded_random_matrix, FeatureMatrix, Seed};
pub use vision::{
    adaptive_encode, decode_pnm, downsample_area, mlp_adapter, pixel_shuffle, pixel_unshuffle,
    seeded_image, AdapterWeights, FeatureMap, ImageTensor, PatchSet,
};
