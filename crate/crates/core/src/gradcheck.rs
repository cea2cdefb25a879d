//! Central-difference gradient verification used by the loss property suite.

use crate::error::{Error, Result};

/// Outcome of comparing an analytic gradient against a numeric one.
#[derive(Debug, Clone, PartialEq)]
pub struct GradReport {
    pub max_rel_err: f64,
    pub max_abs_err: f64,
    /// Coordinate with the largest relative error.
    pub worst_index: usize,
    pub pass: bool,
}

/// Numeric gradient of `f` at `x` via central differences with step `h`:
/// `(f(x + h e_i) - f(x - h e_i)) / 2h` per coordinate.
pub fn finite_diff_grad(
    f: impl Fn(&[f64]) -> f64,
    x: &[f64],
    h: f64,
) -> Result<Vec<f64>> {
    if h <= 0.0 {
        return Err(Error::InvalidInput(format!("step must be positive, got {h}")));
    }
    let mut point = x.to_vec();
    let mut grad = Vec::with_capacity(x.len());
    for i in 0..x.len() {
        let orig = point[i];
        point[i] = orig + h;
        let plus = f(&point);
        point[i] = orig - h;
        let minus = f(&point);
        point[i] = orig;
        if !plus.is_finite() || !minus.is_finite() {
            return Err(Error::InvalidInput(format!(
                "non-finite evaluation while probing coordinate {i}"
            )));
        }
        grad.push((plus - minus) / (2.0 * h));
    }
    Ok(grad)
}

/// Compare gradients coordinate-wise. Relative error uses
/// `|a - n| / max(|a|, |n|, 1e-12)`; the report passes when the worst
/// relative error is within `tol_rel` or the worst absolute error is within
/// `tol_abs`.
pub fn check_grads(
    analytic: &[f64],
    numeric: &[f64],
    tol_rel: f64,
    tol_abs: f64,
) -> Result<GradReport> {
    if analytic.len() != numeric.len() {
        return Err(Error::Shape(format!(
            "gradient lengths differ: {} vs {}",
            analytic.len(),
            numeric.len()
        )));
    }
    let mut max_rel_err = 0.0;
    let mut max_abs_err = 0.0;
    let mut worst_index = 0;
    for (i, (&a, &n)) in analytic.iter().zip(numeric).enumerate() {
        let abs = (a - n).abs();
        let rel = abs / a.abs().max(n.abs()).max(1e-12);
        if rel > max_rel_err {
            max_rel_err = rel;
            worst_index = i;
        }
        max_abs_err = max_abs_err.max(abs);
    }
    Ok(GradReport {
        max_rel_err,
        max_abs_err,
        worst_index,
        pass: max_rel_err <= tol_rel || max_abs_err <= tol_abs,
    })
}
