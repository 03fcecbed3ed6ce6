//! Descriptive normalization and code-switching statistics.

use super::{CorpusError, Dataset, UN_LABEL};
use std::collections::HashMap;

/// Corpus-level statistics; percentages are over all tokens, and `cmi` is
/// the unweighted mean of per-sentence code-mixing indices.
#[derive(Debug, Clone, PartialEq)]
pub struct CorpusStats {
    pub n_words: usize,
    pub pct_norm: f64,
    pub pct_split: f64,
    pub pct_merge: f64,
    pub cmi: Option<f64>,
}

/// Computes corpus statistics. Merge continuation tokens count as normalized
/// (their surface form is absorbed into the previous word). When `with_cmi`
/// is set, every token must carry a language label; fine labels are mapped
/// to the coarse set first.
pub fn compute_stats(d: &Dataset, with_cmi: bool) -> Result<CorpusStats, CorpusError> {
    let n_words = d.n_tokens();
    let mut n_norm = 0usize;
    let mut n_split = 0usize;
    let mut n_merge = 0usize;
    for t in d.tokens() {
        if t.is_merge_continuation() {
            n_merge += 1;
            n_norm += 1;
        } else {
            if t.is_normalized() {
                n_norm += 1;
            }
            if t.is_split() {
                n_split += 1;
            }
        }
    }
    let pct = |c: usize| {
        if n_words == 0 {
            0.0
        } else {
            100.0 * c as f64 / n_words as f64
        }
    };
    let cmi = if with_cmi {
        let labels = d.coarse_labels()?;
        let mut sum = 0.0;
        for sent_labels in &labels {
            let refs: Vec<&str> = sent_labels.iter().map(String::as_str).collect();
            sum += cmi_percent(&refs)?;
        }
        Some(if labels.is_empty() { 0.0 } else { sum / labels.len() as f64 })
    } else {
        None
    };
    Ok(CorpusStats {
        n_words,
        pct_norm: pct(n_norm),
        pct_split: pct(n_split),
        pct_merge: pct(n_merge),
        cmi,
    })
}

/// Code-mixing index of one sentence, in percent. With `t_i` the number of
/// tokens per content language (`UN` excluded) and `N` their sum, the value
/// is `100 * (N - max_i t_i) / N`, or 0 when at most one language occurs.
pub fn cmi_percent(labels: &[&str]) -> Result<f64, CorpusError> {
    if labels.is_empty() {
        return Err(CorpusError::EmptyLabels);
    }
    let mut counts: HashMap<&str, usize> = HashMap::new();
    for &l in labels {
        if l != UN_LABEL {
            *counts.entry(l).or_insert(0) += 1;
        }
    }
    let n: usize = counts.values().sum();
    if n == 0 {
        return Ok(0.0);
    }
    let max = counts.values().copied().max().unwrap_or(0);
    Ok(100.0 * (n - max) as f64 / n as f64)
}
