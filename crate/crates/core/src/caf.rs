//! CogniAnchor Fusion (CAF): linear cross-attention in which each query's
//! weights over the keys are the kernelized similarity scores, re-centered by
//! their mean and shifted by 1/N.
//!
//! With scores `s_j = phi(q) . phi(K_j)` the weight on key `j` is
//!
//! ```text
//! w_j = s_j - mean(s) + 1/N
//! ```
//!
//! so the weights always sum to exactly 1 without a softmax, may be negative,
//! and distinct queries keep distinct weight vectors on generic keys. Because
//! `w` is affine in the scores, the weighted sum over values can be reordered
//! into three key-side aggregates computed once, dropping the cost per query
//! from O(N*d) against every key to O(d*d_v):
//!
//! ```text
//! out_i = phi(q_i)^T [sum_j phi(K_j) V_j^T]
//!       - (phi(q_i) . sum_j phi(K_j) - 1) * mean_j(V_j)
//! ```
//!
//! [`caf_reference`] materializes the weights per query (quadratic, the
//! correctness oracle); [`caf_linear`] uses the aggregate form (linear in the
//! number of keys). The two agree to floating-point accuracy and the property
//! suite enforces that.
//!
//! All functions are pure; per-query accumulation always runs in ascending
//! key order, so results are reproducible bit-for-bit.

use crate::error::{Error, Result};
use crate::kernel::{apply_kernel, apply_kernel_slice, KernelKind};
use crate::matrix::FeatureMatrix;

/// Configuration for multi-head fusion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CafConfig {
    pub model_dim: usize,
    pub num_heads: usize,
    pub kernel: KernelKind,
}

impl CafConfig {
    pub const DEFAULT_HEADS: usize = 8;

    /// Validates that `num_heads >= 1` divides `model_dim`.
    pub fn new(model_dim: usize, num_heads: usize, kernel: KernelKind) -> Result<Self> {
        if num_heads == 0 {
            return Err(Error::Config("num_heads must be >= 1".into()));
        }
        if model_dim == 0 || model_dim % num_heads != 0 {
            return Err(Error::Config(format!(
                "model_dim {model_dim} must be a positive multiple of num_heads {num_heads}"
            )));
        }
        Ok(Self {
            model_dim,
            num_heads,
            kernel,
        })
    }

    pub fn head_dim(&self) -> usize {
        self.model_dim / self.num_heads
    }
}

/// Per-query attention weights over N keys. Signed, and they sum to 1 by
/// construction.
#[derive(Debug, Clone, PartialEq)]
pub struct AttentionWeights {
    values: Vec<f64>,
}

impl AttentionWeights {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }
}

/// Raw similarity scores `phi(q) . phi(K_j)` for every key row, in key order.
pub fn similarity_scores(q: &[f64], keys: &FeatureMatrix, kernel: KernelKind) -> Result<Vec<f64>> {
    if q.len() != keys.cols() {
        return Err(Error::Shape(format!(
            "query has {} coordinates but keys have {}",
            q.len(),
            keys.cols()
        )));
    }
    let phi_q = apply_kernel_slice(q, kernel);
    let scores = (0..keys.rows())
        .map(|j| {
            let key = keys.row(j);
            let mut acc = 0.0;
            for (c, &qc) in phi_q.iter().enumerate() {
                acc += qc * kernel.eval(key[c]);
            }
            acc
        })
        .collect();
    Ok(scores)
}

/// Attention weights for one query: scores minus their mean, plus 1/N.
pub fn attention_weights(
    q: &[f64],
    keys: &FeatureMatrix,
    kernel: KernelKind,
) -> Result<AttentionWeights> {
    let scores = similarity_scores(q, keys, kernel)?;
    let n = scores.len() as f64;
    let mean = scores.iter().sum::<f64>() / n;
    let inv_n = 1.0 / n;
    Ok(AttentionWeights {
        values: scores.iter().map(|&s| s - mean + inv_n).collect(),
    })
}

fn check_qkv(q: &FeatureMatrix, k: &FeatureMatrix, v: &FeatureMatrix) -> Result<()> {
    if q.cols() != k.cols() {
        return Err(Error::Shape(format!(
            "queries have {} columns but keys have {}",
            q.cols(),
            k.cols()
        )));
    }
    if k.rows() != v.rows() {
        return Err(Error::Shape(format!(
            "{} keys but {} value rows",
            k.rows(),
            v.rows()
        )));
    }
    Ok(())
}

/// Quadratic evaluation: materialize the weight vector for every query, then
/// take the weighted sum of value rows. O(N_q * N_k) work; this is the oracle
/// the linear form is checked against.
pub fn caf_reference(
    q: &FeatureMatrix,
    k: &FeatureMatrix,
    v: &FeatureMatrix,
    kernel: KernelKind,
) -> Result<FeatureMatrix> {
    check_qkv(q, k, v)?;
    let (n_q, d_v) = (q.rows(), v.cols());
    let mut out = vec![0.0; n_q * d_v];
    for i in 0..n_q {
        let w = attention_weights(q.row(i), k, kernel)?;
        let out_row = &mut out[i * d_v..(i + 1) * d_v];
        for (j, &w_j) in w.values().iter().enumerate() {
            let v_row = v.row(j);
            for (o, &v_jc) in out_row.iter_mut().zip(v_row) {
                *o += w_j * v_jc;
            }
        }
    }
    FeatureMatrix::from_vec(n_q, d_v, out)
}

/// Key-side aggregates shared by every query: `sum_j phi(K_j) V_j^T`,
/// `sum_j phi(K_j)`, and the value-row mean. One pass over the keys.
struct KeyAggregates {
    kv: Vec<f64>,     // d x d_v, row-major
    k_sum: Vec<f64>,  // d
    v_mean: Vec<f64>, // d_v
    d: usize,
    d_v: usize,
}

impl KeyAggregates {
    fn build(k: &FeatureMatrix, v: &FeatureMatrix, kernel: KernelKind) -> Self {
        let (n, d, d_v) = (k.rows(), k.cols(), v.cols());
        let mut kv = vec![0.0; d * d_v];
        let mut k_sum = vec![0.0; d];
        let mut v_mean = vec![0.0; d_v];
        for j in 0..n {
            let k_row = k.row(j);
            let v_row = v.row(j);
            for (c, &k_jc) in k_row.iter().enumerate() {
                let phi = kernel.eval(k_jc);
                k_sum[c] += phi;
                let kv_row = &mut kv[c * d_v..(c + 1) * d_v];
                for (acc, &v_jc) in kv_row.iter_mut().zip(v_row) {
                    *acc += phi * v_jc;
                }
            }
            for (acc, &v_jc) in v_mean.iter_mut().zip(v_row) {
                *acc += v_jc;
            }
        }
        let inv_n = 1.0 / n as f64;
        for m in &mut v_mean {
            *m *= inv_n;
        }
        Self {
            kv,
            k_sum,
            v_mean,
            d,
            d_v,
        }
    }

    /// Output row for one query, written into `out`.
    fn apply(&self, q: &[f64], kernel: KernelKind, out: &mut [f64]) {
        let mut dot_ksum = 0.0;
        out.fill(0.0);
        for c in 0..self.d {
            let phi = kernel.eval(q[c]);
            dot_ksum += phi * self.k_sum[c];
            let kv_row = &self.kv[c * self.d_v..(c + 1) * self.d_v];
            for (o, &kv_cv) in out.iter_mut().zip(kv_row) {
                *o += phi * kv_cv;
            }
        }
        let shift = dot_ksum - 1.0;
        for (o, &vm) in out.iter_mut().zip(&self.v_mean) {
            *o -= shift * vm;
        }
    }
}

/// Linear-time evaluation of the same attention: aggregate the keys once,
/// then each query costs O(d * d_v). Matches [`caf_reference`] to within
/// floating-point error.
pub fn caf_linear(
    q: &FeatureMatrix,
    k: &FeatureMatrix,
    v: &FeatureMatrix,
    kernel: KernelKind,
) -> Result<FeatureMatrix> {
    check_qkv(q, k, v)?;
    let agg = KeyAggregates::build(k, v, kernel);
    let (n_q, d_v) = (q.rows(), v.cols());
    let mut out = vec![0.0; n_q * d_v];
    for i in 0..n_q {
        agg.apply(q.row(i), kernel, &mut out[i * d_v..(i + 1) * d_v]);
    }
    FeatureMatrix::from_vec(n_q, d_v, out)
}

/// Multi-head wrapper: columns are split into `num_heads` contiguous slices,
/// [`caf_linear`] runs per slice, and the head outputs are concatenated in
/// the original column order. No learned projections.
pub fn multi_head_caf(
    q: &FeatureMatrix,
    k: &FeatureMatrix,
    v: &FeatureMatrix,
    cfg: &CafConfig,
) -> Result<FeatureMatrix> {
    for (name, m) in [("queries", q), ("keys", k), ("values", v)] {
        if m.cols() != cfg.model_dim {
            return Err(Error::Shape(format!(
                "{name} have {} columns, config expects model_dim {}",
                m.cols(),
                cfg.model_dim
            )));
        }
    }
    check_qkv(q, k, v)?;
    if cfg.num_heads == 1 {
        return caf_linear(q, k, v, cfg.kernel);
    }
    let hd = cfg.head_dim();
    let mut out: Option<FeatureMatrix> = None;
    for h in 0..cfg.num_heads {
        let (lo, hi) = (h * hd, (h + 1) * hd);
        let head = caf_linear(
            &q.column_slice(lo, hi)?,
            &k.column_slice(lo, hi)?,
            &v.column_slice(lo, hi)?,
            cfg.kernel,
        )?;
        out = Some(match out {
            None => head,
            Some(acc) => acc.hconcat(&head)?,
        });
    }
    Ok(out.expect("num_heads >= 1"))
}

/// Which side supplies the queries during fusion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FuseDirection {
    /// Text queries attend over visual keys/values (the standard layout).
    #[default]
    TextQueriesVisual,
    /// Role swap: visual tokens query the text (ablation mode).
    VisualQueriesText,
}

/// Fusion output: attended block followed by the untouched text embeddings.
#[derive(Debug, Clone, PartialEq)]
pub struct FusedSequence {
    /// `(boundary + N_text) x d` token matrix.
    pub tokens: FeatureMatrix,
    /// Number of leading fused rows; text rows start here.
    pub boundary: usize,
}

impl FusedSequence {
    /// The fused (attended) block.
    pub fn fused_block(&self) -> Result<FeatureMatrix> {
        self.tokens.column_slice(0, self.tokens.cols())?; // shape sanity
        let mut data = Vec::with_capacity(self.boundary * self.tokens.cols());
        for r in 0..self.boundary {
            data.extend_from_slice(self.tokens.row(r));
        }
        FeatureMatrix::from_vec(self.boundary, self.tokens.cols(), data)
    }

    /// The trailing text block, bit-identical to the fusion input.
    pub fn text_block(&self) -> Result<FeatureMatrix> {
        let rows = self.tokens.rows() - self.boundary;
        let mut data = Vec::with_capacity(rows * self.tokens.cols());
        for r in self.boundary..self.tokens.rows() {
            data.extend_from_slice(self.tokens.row(r));
        }
        FeatureMatrix::from_vec(rows, self.tokens.cols(), data)
    }
}

/// Fuse visual and text tokens: the visual block is replaced by multi-head
/// attention with the text as queries and the visual tokens as keys/values
/// (one fused row per text token), then the text embeddings are appended
/// unchanged after the boundary.
pub fn fuse(
    visual: &FeatureMatrix,
    text: &FeatureMatrix,
    cfg: &CafConfig,
) -> Result<FusedSequence> {
    fuse_directed(visual, text, cfg, FuseDirection::TextQueriesVisual)
}

/// [`fuse`] with an explicit query-role direction.
pub fn fuse_directed(
    visual: &FeatureMatrix,
    text: &FeatureMatrix,
    cfg: &CafConfig,
    direction: FuseDirection,
) -> Result<FusedSequence> {
    if visual.cols() != cfg.model_dim || text.cols() != cfg.model_dim {
        return Err(Error::Shape(format!(
            "visual ({}) and text ({}) widths must equal model_dim {}",
            visual.cols(),
            text.cols(),
            cfg.model_dim
        )));
    }
    let fused = match direction {
        FuseDirection::TextQueriesVisual => multi_head_caf(text, visual, visual, cfg)?,
        FuseDirection::VisualQueriesText => multi_head_caf(visual, text, text, cfg)?,
    };
    let boundary = fused.rows();
    let tokens = fused.vconcat(text)?;
    Ok(FusedSequence { tokens, boundary })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{seeded_random_matrix, Seed};

    /// Independent recomputation of the weight definition plus weighted sum,
    /// written as a plain double loop with no shared code.
    fn brute_force_attention(
        q: &FeatureMatrix,
        k: &FeatureMatrix,
        v: &FeatureMatrix,
        kernel: KernelKind,
    ) -> Vec<f64> {
        let n = k.rows();
        let mut out = vec![0.0; q.rows() * v.cols()];
        for i in 0..q.rows() {
            let mut scores = Vec::with_capacity(n);
            for j in 0..n {
                let mut s = 0.0;
                for c in 0..q.cols() {
                    s += kernel.eval(q.get(i, c)) * kernel.eval(k.get(j, c));
                }
                scores.push(s);
            }
            let mean = scores.iter().sum::<f64>() / n as f64;
            for j in 0..n {
                let w = scores[j] - mean + 1.0 / n as f64;
                for c in 0..v.cols() {
                    out[i * v.cols() + c] += w * v.get(j, c);
                }
            }
        }
        out
    }

    fn max_rel_dev(a: &FeatureMatrix, b: &FeatureMatrix) -> f64 {
        a.as_slice()
            .iter()
            .zip(b.as_slice())
            .map(|(&x, &y)| (x - y).abs() / x.abs().max(y.abs()).max(1e-12))
            .fold(0.0, f64::max)
    }

    #[test]
    fn single_key_weight_is_exactly_one() {
        let k = seeded_random_matrix(1, 5, Seed(1)).unwrap();
        let q = seeded_random_matrix(1, 5, Seed(2)).unwrap();
        for kernel in KernelKind::ALL {
            let w = attention_weights(q.row(0), &k, kernel).unwrap();
            assert_eq!(w.values(), &[1.0]);
        }
    }

    #[test]
    fn identical_keys_give_uniform_weights() {
        let key = seeded_random_matrix(1, 4, Seed(3)).unwrap();
        let k = key.vconcat(&key).unwrap().vconcat(&key.vconcat(&key).unwrap()).unwrap();
        let q = seeded_random_matrix(1, 4, Seed(4)).unwrap();
        let w = attention_weights(q.row(0), &k, KernelKind::Identity).unwrap();
        for &v in w.values() {
            assert!((v - 0.25).abs() < 1e-15);
        }
    }

    #[test]
    fn hand_worked_signed_weights() {
        // scores [1, 0, 2], mean 1, so weights [1/3, -2/3, 4/3]; a negative
        // weight is legal here.
        let k = FeatureMatrix::from_rows(&[&[1.0, 0.0], &[0.0, 1.0], &[2.0, 0.0]]).unwrap();
        let q = [1.0, 0.0];
        let w = attention_weights(&q, &k, KernelKind::Identity).unwrap();
        let expected = [1.0 / 3.0, -2.0 / 3.0, 4.0 / 3.0];
        for (got, want) in w.values().iter().zip(&expected) {
            assert!((got - want).abs() < 1e-15, "{got} vs {want}");
        }
        assert!((w.sum() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn weights_reject_dimension_mismatch() {
        let k = FeatureMatrix::zeros(3, 4).unwrap();
        let q = [1.0, 2.0];
        assert!(matches!(
            attention_weights(&q, &k, KernelKind::Identity),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn reference_single_key_copies_value_row() {
        let q = seeded_random_matrix(3, 4, Seed(5)).unwrap();
        let k = seeded_random_matrix(1, 4, Seed(6)).unwrap();
        let v = seeded_random_matrix(1, 2, Seed(7)).unwrap();
        let out = caf_reference(&q, &k, &v, KernelKind::Identity).unwrap();
        for i in 0..3 {
            assert_eq!(out.row(i), v.row(0));
        }
    }

    #[test]
    fn reference_identical_keys_average_values() {
        let key = seeded_random_matrix(1, 4, Seed(8)).unwrap();
        let k = key.vconcat(&key).unwrap().vconcat(&key).unwrap();
        let q = seeded_random_matrix(2, 4, Seed(9)).unwrap();
        let v = seeded_random_matrix(3, 5, Seed(10)).unwrap();
        let out = caf_reference(&q, &k, &v, KernelKind::Identity).unwrap();
        for i in 0..q.rows() {
            for c in 0..v.cols() {
                let mean = (v.get(0, c) + v.get(1, c) + v.get(2, c)) / 3.0;
                assert!((out.get(i, c) - mean).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn reference_matches_brute_force_recomputation() {
        let q = seeded_random_matrix(4, 8, Seed(7)).unwrap();
        let k = seeded_random_matrix(6, 8, Seed(70)).unwrap();
        let v = seeded_random_matrix(6, 8, Seed(700)).unwrap();
        for kernel in KernelKind::ALL {
            let out = caf_reference(&q, &k, &v, kernel).unwrap();
            let oracle = brute_force_attention(&q, &k, &v, kernel);
            for (x, y) in out.as_slice().iter().zip(&oracle) {
                assert!((x - y).abs() < 1e-11, "{x} vs {y} ({kernel:?})");
            }
        }
    }

    #[test]
    fn linear_single_key_matches_reference() {
        let q = seeded_random_matrix(2, 3, Seed(11)).unwrap();
        let k = seeded_random_matrix(1, 3, Seed(12)).unwrap();
        let v = seeded_random_matrix(1, 3, Seed(13)).unwrap();
        let lin = caf_linear(&q, &k, &v, KernelKind::Identity).unwrap();
        for i in 0..2 {
            for c in 0..3 {
                assert!((lin.get(i, c) - v.get(0, c)).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn linear_zero_values_zero_output() {
        let q = seeded_random_matrix(3, 4, Seed(14)).unwrap();
        let k = seeded_random_matrix(5, 4, Seed(15)).unwrap();
        let v = FeatureMatrix::zeros(5, 4).unwrap();
        let lin = caf_linear(&q, &k, &v, KernelKind::EluPlusOne).unwrap();
        assert!(lin.as_slice().iter().all(|&x| x == 0.0));
    }

    #[test]
    fn linear_agrees_with_reference_on_random_instance() {
        let q = seeded_random_matrix(16, 32, Seed(11)).unwrap();
        let k = seeded_random_matrix(128, 32, Seed(111)).unwrap();
        let v = seeded_random_matrix(128, 32, Seed(1111)).unwrap();
        for kernel in KernelKind::ALL {
            let rf = caf_reference(&q, &k, &v, kernel).unwrap();
            let lin = caf_linear(&q, &k, &v, kernel).unwrap();
            let dev = max_rel_dev(&lin, &rf);
            assert!(dev <= 1e-8, "max relative deviation {dev} ({kernel:?})");
        }
    }

    #[test]
    fn multi_head_one_head_is_bitwise_linear() {
        let cfg = CafConfig::new(8, 1, KernelKind::Identity).unwrap();
        let q = seeded_random_matrix(4, 8, Seed(20)).unwrap();
        let k = seeded_random_matrix(9, 8, Seed(21)).unwrap();
        let v = seeded_random_matrix(9, 8, Seed(22)).unwrap();
        let mh = multi_head_caf(&q, &k, &v, &cfg).unwrap();
        let lin = caf_linear(&q, &k, &v, KernelKind::Identity).unwrap();
        assert_eq!(mh.as_slice(), lin.as_slice());
    }

    #[test]
    fn multi_head_slices_columns() {
        let cfg = CafConfig::new(4, 2, KernelKind::Identity).unwrap();
        let q = seeded_random_matrix(3, 4, Seed(23)).unwrap();
        let k = seeded_random_matrix(5, 4, Seed(24)).unwrap();
        let v = seeded_random_matrix(5, 4, Seed(25)).unwrap();
        let mh = multi_head_caf(&q, &k, &v, &cfg).unwrap();
        let head0 = caf_linear(
            &q.column_slice(0, 2).unwrap(),
            &k.column_slice(0, 2).unwrap(),
            &v.column_slice(0, 2).unwrap(),
            KernelKind::Identity,
        )
        .unwrap();
        for r in 0..3 {
            assert_eq!(&mh.row(r)[..2], head0.row(r));
        }
    }

    #[test]
    fn multi_head_matches_per_head_reference() {
        let cfg = CafConfig::new(64, 8, KernelKind::Identity).unwrap();
        let q = seeded_random_matrix(6, 64, Seed(3)).unwrap();
        let k = seeded_random_matrix(10, 64, Seed(33)).unwrap();
        let v = seeded_random_matrix(10, 64, Seed(333)).unwrap();
        let mh = multi_head_caf(&q, &k, &v, &cfg).unwrap();
        let hd = cfg.head_dim();
        let mut oracle: Option<FeatureMatrix> = None;
        for h in 0..cfg.num_heads {
            let head = caf_reference(
                &q.column_slice(h * hd, (h + 1) * hd).unwrap(),
                &k.column_slice(h * hd, (h + 1) * hd).unwrap(),
                &v.column_slice(h * hd, (h + 1) * hd).unwrap(),
                cfg.kernel,
            )
            .unwrap();
            oracle = Some(match oracle {
                None => head,
                Some(acc) => acc.hconcat(&head).unwrap(),
            });
        }
        let dev = max_rel_dev(&mh, &oracle.unwrap());
        assert!(dev <= 1e-8, "max relative deviation {dev}");
    }

    #[test]
    fn config_rejects_indivisible_heads() {
        assert!(CafConfig::new(64, 3, KernelKind::Identity).is_err());
        assert!(CafConfig::new(0, 1, KernelKind::Identity).is_err());
        assert!(CafConfig::new(8, 0, KernelKind::Identity).is_err());
    }

    #[test]
    fn fuse_single_tokens() {
        let cfg = CafConfig::new(4, 1, KernelKind::Identity).unwrap();
        let visual = seeded_random_matrix(1, 4, Seed(40)).unwrap();
        let text = seeded_random_matrix(1, 4, Seed(41)).unwrap();
        let fused = fuse(&visual, &text, &cfg).unwrap();
        assert_eq!(fused.boundary, 1);
        assert_eq!(fused.tokens.rows(), 2);
        // One visual key means weight 1: the fused row is the visual token.
        for c in 0..4 {
            assert!((fused.tokens.get(0, c) - visual.get(0, c)).abs() < 1e-12);
        }
        assert_eq!(fused.tokens.row(1), text.row(0));
    }

    #[test]
    fn fuse_is_deterministic() {
        let cfg = CafConfig::new(8, 2, KernelKind::Identity).unwrap();
        let visual = seeded_random_matrix(6, 8, Seed(42)).unwrap();
        let text = seeded_random_matrix(3, 8, Seed(43)).unwrap();
        let a = fuse(&visual, &text, &cfg).unwrap();
        let b = fuse(&visual, &text, &cfg).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn fuse_block_matches_multi_head_and_suffix_is_input() {
        let cfg = CafConfig::new(32, 8, KernelKind::Identity).unwrap();
        let visual = seeded_random_matrix(64, 32, Seed(50)).unwrap();
        let text = seeded_random_matrix(8, 32, Seed(51)).unwrap();
        let fused = fuse(&visual, &text, &cfg).unwrap();
        assert_eq!(fused.boundary, text.rows());
        let block = fused.fused_block().unwrap();
        let oracle = multi_head_caf(&text, &visual, &visual, &cfg).unwrap();
        assert_eq!(block.as_slice(), oracle.as_slice());
        assert_eq!(fused.text_block().unwrap().as_slice(), text.as_slice());
    }

    #[test]
    fn fuse_role_swap_queries_with_visual() {
        let cfg = CafConfig::new(8, 2, KernelKind::Identity).unwrap();
        let visual = seeded_random_matrix(5, 8, Seed(52)).unwrap();
        let text = seeded_random_matrix(3, 8, Seed(53)).unwrap();
        let fused = fuse_directed(&visual, &text, &cfg, FuseDirection::VisualQueriesText).unwrap();
        assert_eq!(fused.boundary, visual.rows());
        let oracle = multi_head_caf(&visual, &text, &text, &cfg).unwrap();
        assert_eq!(fused.fused_block().unwrap().as_slice(), oracle.as_slice());
    }
}
