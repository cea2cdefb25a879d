//! Teacher-assisted distillation: prompt enrichment, teacher-trace ingestion,
//! and the two-task loss with analytic gradients.
//!
//! The loss combines a hard term (negative log-likelihood of the ground-truth
//! answer tokens) and a soft term (KL divergence from the teacher's
//! per-position answer distributions to the student's, truncated to the
//! shorter of the two answers). Each task is weighted by a learnable
//! uncertainty: with `s = log(sigma^2)` the total is
//!
//! ```text
//! total = hard * e^{-s_hard} + soft * e^{-s_soft} + s_hard/2 + s_soft/2
//! ```
//!
//! The `s = log(sigma^2)` parameterization keeps the weights positive with no
//! projection and makes the regularizer `log(sigma) = s/2` exact. Setting the
//! per-task derivative `-term * e^{-s} + 1/2` to zero lands at
//! `sigma^2 = 2 * term`, so each task's weight tracks the inverse of its
//! current loss.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::matrix::FeatureMatrix;

/// Tolerance for accepting a teacher distribution as normalized.
pub const DIST_MASS_TOL: f64 = 1e-6;

/// A sequence of vocabulary ids with its vocabulary size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TokenSeq {
    ids: Vec<u32>,
    vocab_size: usize,
}

impl TokenSeq {
    pub fn new(ids: Vec<u32>, vocab_size: usize) -> Result<Self> {
        if ids.is_empty() {
            return Err(Error::InvalidInput("token sequence must be non-empty".into()));
        }
        if let Some(&bad) = ids.iter().find(|&&id| id as usize >= vocab_size) {
            return Err(Error::InvalidInput(format!(
                "token id {bad} out of range for vocab {vocab_size}"
            )));
        }
        Ok(Self { ids, vocab_size })
    }

    pub fn ids(&self) -> &[u32] {
        &self.ids
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn vocab_size(&self) -> usize {
        self.vocab_size
    }
}

/// One teacher record: free-text reasoning context plus the per-position
/// probability distributions of the teacher's conclusive answer.
#[derive(Debug, Clone, PartialEq)]
pub struct TeacherTrace {
    pub reasoning_text: String,
    /// Dense distributions, one row per answer position, each summing to 1.
    answer_dists: Vec<Vec<f64>>,
    pub answer_ids: Option<Vec<u32>>,
}

impl TeacherTrace {
    pub fn new(
        reasoning_text: String,
        answer_dists: Vec<Vec<f64>>,
        answer_ids: Option<Vec<u32>>,
    ) -> Result<Self> {
        if answer_dists.is_empty() {
            return Err(Error::InvalidInput(
                "teacher trace needs at least one answer position".into(),
            ));
        }
        let vocab = answer_dists[0].len();
        for (l, dist) in answer_dists.iter().enumerate() {
            if dist.len() != vocab {
                return Err(Error::InvalidInput(format!(
                    "distribution {l} has width {} but position 0 has {vocab}",
                    dist.len()
                )));
            }
            if let Some(&p) = dist.iter().find(|&&p| p < 0.0 || !p.is_finite()) {
                return Err(Error::InvalidInput(format!(
                    "distribution {l} holds invalid probability {p}"
                )));
            }
            let mass: f64 = dist.iter().sum();
            if (mass - 1.0).abs() > DIST_MASS_TOL {
                return Err(Error::InvalidInput(format!(
                    "distribution {l} sums to {mass}, not 1"
                )));
            }
        }
        Ok(Self {
            reasoning_text,
            answer_dists,
            answer_ids,
        })
    }

    pub fn answer_dists(&self) -> &[Vec<f64>] {
        &self.answer_dists
    }

    /// Number of answer positions (the teacher-side truncation length).
    pub fn answer_len(&self) -> usize {
        self.answer_dists.len()
    }

    pub fn vocab_size(&self) -> usize {
        self.answer_dists[0].len()
    }
}

/// Learnable per-task uncertainties, stored as `s = log(sigma^2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UncertaintyParams {
    pub s_hard: f64,
    pub s_soft: f64,
}

impl UncertaintyParams {
    pub fn new(s_hard: f64, s_soft: f64) -> Result<Self> {
        if !s_hard.is_finite() || !s_soft.is_finite() {
            return Err(Error::InvalidInput(format!(
                "uncertainty parameters must be finite, got ({s_hard}, {s_soft})"
            )));
        }
        Ok(Self { s_hard, s_soft })
    }

    pub fn var_hard(&self) -> f64 {
        self.s_hard.exp()
    }

    pub fn var_soft(&self) -> f64 {
        self.s_soft.exp()
    }
}

/// Fully expanded loss value with its analytic gradients.
#[derive(Debug, Clone, PartialEq)]
pub struct LossBreakdown {
    pub hard_term: f64,
    pub soft_term: f64,
    /// `log(sigma_hard) + log(sigma_soft) = (s_hard + s_soft) / 2`.
    pub reg_term: f64,
    pub total: f64,
    /// Gradient of `total` w.r.t. the student logits; populated by
    /// [`mtl_loss_with_grads`], absent when only scalars were combined.
    pub grad_logits: Option<FeatureMatrix>,
    pub grad_s_hard: f64,
    pub grad_s_soft: f64,
}

/// Concatenate question ids with chain-of-thought ids (same vocabulary).
pub fn build_enriched_prompt(question: &TokenSeq, cot: &TokenSeq) -> Result<TokenSeq> {
    if question.vocab_size != cot.vocab_size {
        return Err(Error::InvalidInput(format!(
            "vocab mismatch: question {} vs cot {}",
            question.vocab_size, cot.vocab_size
        )));
    }
    let mut ids = question.ids.clone();
    ids.extend_from_slice(&cot.ids);
    TokenSeq::new(ids, question.vocab_size)
}

/// Log-softmax of one logit row, max-subtracted so nothing underflows.
fn log_softmax_row(row: &[f64]) -> Vec<f64> {
    let max = row.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let log_z = row.iter().map(|&v| (v - max).exp()).sum::<f64>().ln() + max;
    row.iter().map(|&v| v - log_z).collect()
}

/// Negative log-likelihood of `targets` under per-position softmax of
/// `logits`, with its gradient (`softmax - onehot` per row).
pub fn nll_term(logits: &FeatureMatrix, targets: &TokenSeq) -> Result<(f64, FeatureMatrix)> {
    if logits.rows() != targets.len() {
        return Err(Error::Shape(format!(
            "{} logit rows but {} target tokens",
            logits.rows(),
            targets.len()
        )));
    }
    if logits.cols() != targets.vocab_size() {
        return Err(Error::InvalidInput(format!(
            "logit width {} does not match vocab {}",
            logits.cols(),
            targets.vocab_size()
        )));
    }
    let vocab = logits.cols();
    let mut value = 0.0;
    let mut grad = vec![0.0; logits.rows() * vocab];
    for (l, &target) in targets.ids().iter().enumerate() {
        let log_probs = log_softmax_row(logits.row(l));
        value -= log_probs[target as usize];
        let grad_row = &mut grad[l * vocab..(l + 1) * vocab];
        for (g, &lp) in grad_row.iter_mut().zip(&log_probs) {
            *g = lp.exp();
        }
        grad_row[target as usize] -= 1.0;
    }
    Ok((value, FeatureMatrix::from_vec(logits.rows(), vocab, grad)?))
}

/// KL divergence from the teacher's distributions to the student softmax,
/// summed over the first `min(L, L')` positions. The gradient w.r.t. logits
/// is `softmax - teacher` inside the truncated range and zero beyond it.
/// Teacher entries with probability 0 contribute nothing.
pub fn kl_term(teacher: &TeacherTrace, logits: &FeatureMatrix) -> Result<(f64, FeatureMatrix)> {
    if logits.cols() != teacher.vocab_size() {
        return Err(Error::Shape(format!(
            "logit width {} does not match teacher vocab {}",
            logits.cols(),
            teacher.vocab_size()
        )));
    }
    let vocab = logits.cols();
    let overlap = logits.rows().min(teacher.answer_len());
    let mut value = 0.0;
    let mut grad = vec![0.0; logits.rows() * vocab];
    for l in 0..overlap {
        let log_probs = log_softmax_row(logits.row(l));
        let dist = &teacher.answer_dists()[l];
        let grad_row = &mut grad[l * vocab..(l + 1) * vocab];
        for v in 0..vocab {
            let p = dist[v];
            if p > 0.0 {
                value += p * (p.ln() - log_probs[v]);
            }
            grad_row[v] = log_probs[v].exp() - p;
        }
    }
    Ok((value, FeatureMatrix::from_vec(logits.rows(), vocab, grad)?))
}

/// Combine already-computed hard and soft terms under the uncertainty
/// weights. Gradients w.r.t. the logits are not available at this level; use
/// [`mtl_loss_with_grads`] for the full chain.
pub fn mtl_loss(hard: f64, soft: f64, u: UncertaintyParams) -> Result<LossBreakdown> {
    if !hard.is_finite() || !soft.is_finite() {
        return Err(Error::InvalidInput(format!(
            "loss terms must be finite, got hard={hard} soft={soft}"
        )));
    }
    let (w_hard, w_soft) = ((-u.s_hard).exp(), (-u.s_soft).exp());
    let reg_term = 0.5 * (u.s_hard + u.s_soft);
    Ok(LossBreakdown {
        hard_term: hard,
        soft_term: soft,
        reg_term,
        total: hard * w_hard + soft * w_soft + reg_term,
        grad_logits: None,
        grad_s_hard: -hard * w_hard + 0.5,
        grad_s_soft: -soft * w_soft + 0.5,
    })
}

/// Full pipeline: hard and soft terms from the same student logits, combined
/// with the uncertainty weights, including the gradient w.r.t. every logit.
pub fn mtl_loss_with_grads(
    logits: &FeatureMatrix,
    targets: &TokenSeq,
    teacher: &TeacherTrace,
    u: UncertaintyParams,
) -> Result<LossBreakdown> {
    let (hard, grad_hard) = nll_term(logits, targets)?;
    let (soft, grad_soft) = kl_term(teacher, logits)?;
    let mut breakdown = mtl_loss(hard, soft, u)?;
    let (w_hard, w_soft) = ((-u.s_hard).exp(), (-u.s_soft).exp());
    let mut combined = vec![0.0; logits.rows() * logits.cols()];
    for (g, (&gh, &gs)) in combined
        .iter_mut()
        .zip(grad_hard.as_slice().iter().zip(grad_soft.as_slice()))
    {
        *g = w_hard * gh + w_soft * gs;
    }
    breakdown.grad_logits = Some(FeatureMatrix::from_vec(
        logits.rows(),
        logits.cols(),
        combined,
    )?);
    Ok(breakdown)
}

#[derive(Deserialize)]
struct TraceLine {
    reasoning: String,
    /// Sparse per-position distributions: lists of `[token_id, prob]` pairs.
    dists: Vec<Vec<(u32, f64)>>,
    vocab: usize,
    #[serde(default)]
    answer_ids: Option<Vec<u32>>,
}

#[derive(Deserialize)]
struct LabelLine {
    ids: Vec<u32>,
    vocab: usize,
}

fn json_parse_error(err: &serde_json::Error) -> Error {
    Error::Parse {
        offset: err.column().saturating_sub(1),
        message: err.to_string(),
    }
}

/// Parse one JSON-Lines teacher record. Sparse `[token_id, prob]` pairs are
/// expanded to dense vocabulary-width distributions; duplicate ids
/// accumulate. When `renormalize` is false any position whose mass deviates
/// from 1 by more than [`DIST_MASS_TOL`] is rejected; when true the position
/// is rescaled to unit mass instead.
pub fn parse_teacher_trace(line: &str, renormalize: bool) -> Result<TeacherTrace> {
    let raw: TraceLine = serde_json::from_str(line).map_err(|e| json_parse_error(&e))?;
    if raw.vocab == 0 {
        return Err(Error::InvalidInput("vocab must be >= 1".into()));
    }
    let mut dists = Vec::with_capacity(raw.dists.len());
    for (l, sparse) in raw.dists.iter().enumerate() {
        let mut dense = vec![0.0; raw.vocab];
        for &(id, p) in sparse {
            if id as usize >= raw.vocab {
                return Err(Error::InvalidInput(format!(
                    "position {l}: token id {id} out of range for vocab {}",
                    raw.vocab
                )));
            }
            if p < 0.0 || !p.is_finite() {
                return Err(Error::InvalidInput(format!(
                    "position {l}: invalid probability {p} for token {id}"
                )));
            }
            dense[id as usize] += p;
        }
        let mass: f64 = dense.iter().sum();
        if (mass - 1.0).abs() > DIST_MASS_TOL {
            if !renormalize || mass <= 0.0 {
                return Err(Error::InvalidInput(format!(
                    "position {l}: distribution mass {mass} is not 1 (renormalize disabled)"
                )));
            }
            for p in &mut dense {
                *p /= mass;
            }
        }
        dists.push(dense);
    }
    TeacherTrace::new(raw.reasoning, dists, raw.answer_ids)
}

/// Parse one JSON-Lines ground-truth record: `{"ids": [...], "vocab": n}`.
pub fn parse_label_line(line: &str) -> Result<TokenSeq> {
    let raw: LabelLine = serde_json::from_str(line).map_err(|e| json_parse_error(&e))?;
    TokenSeq::new(raw.ids, raw.vocab)
}
