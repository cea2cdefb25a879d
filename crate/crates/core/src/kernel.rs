//! Elementwise feature-map kernels applied to queries and keys before the
//! similarity product.
//!
//! The attention weights tolerate signed scores, so `Identity` is the default;
//! `ReLU` and `EluPlusOne` are the usual nonnegative/positive alternatives.

use crate::error::{Error, Result};
use crate::matrix::FeatureMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum KernelKind {
    /// phi(x) = x
    #[default]
    Identity,
    /// phi(x) = max(x, 0)
    ReLU,
    /// phi(x) = elu(x) + 1, strictly positive
    EluPlusOne,
}

impl KernelKind {
    /// Apply the kernel to one scalar.
    pub fn eval(self, x: f64) -> f64 {
        match self {
            KernelKind::Identity => x,
            KernelKind::ReLU => x.max(0.0),
            KernelKind::EluPlusOne => {
                if x > 0.0 {
                    x + 1.0
                } else {
                    x.exp()
                }
            }
        }
    }

    /// All kernel variants, for sweeping in property suites.
    pub const ALL: [KernelKind; 3] = [
        KernelKind::Identity,
        KernelKind::ReLU,
        KernelKind::EluPlusOne,
    ];

    pub fn name(self) -> &'static str {
        match self {
            KernelKind::Identity => "identity",
            KernelKind::ReLU => "relu",
            KernelKind::EluPlusOne => "elu1",
        }
    }

    /// Parse the CLI spelling of a kernel name.
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "identity" => Ok(KernelKind::Identity),
            "relu" => Ok(KernelKind::ReLU),
            "elu1" => Ok(KernelKind::EluPlusOne),
            other => Err(Error::Config(format!(
                "unknown kernel '{other}' (expected identity|relu|elu1)"
            ))),
        }
    }
}

/// Apply `k` elementwise; shape is preserved. `Identity` returns the input
/// values unchanged.
pub fn apply_kernel(x: &FeatureMatrix, k: KernelKind) -> FeatureMatrix {
    match k {
        KernelKind::Identity => x.clone(),
        _ => x.map(|v| k.eval(v)),
    }
}

/// Apply `k` to a plain slice (used on single query rows).
pub fn apply_kernel_slice(x: &[f64], k: KernelKind) -> Vec<f64> {
    x.iter().map(|&v| k.eval(v)).collect()
}
