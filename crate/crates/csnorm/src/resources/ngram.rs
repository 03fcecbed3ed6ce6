//! Unigram/bigram counts with additive smoothing.

use super::ResourceError;
use crate::text::nfc;
use std::collections::{HashMap, HashSet};

/// Reserved symbol standing in for the sentence boundary as a bigram
/// context. It never counts as a vocabulary word.
pub const NGRAM_BOUNDARY: &str = "<s>";

const BOUNDARY_ID: u32 = u32::MAX;

/// Word and word-pair counts over a corpus, with add-alpha smoothing over
/// the vocabulary plus one unknown slot.
#[derive(Debug, PartialEq)]
pub struct NGramModel {
    vocab: Vec<String>,
    index: HashMap<String, u32>,
    unigrams: Vec<u64>,
    bigrams: HashMap<(u32, u32), u64>,
    /// Total successor count per context; for in-vocabulary contexts this
    /// equals the number of times the word was followed by another word in
    /// the same sentence.
    context_totals: HashMap<u32, u64>,
    total_tokens: u64,
    alpha: f64,
}

/// Counts n-grams over one-sentence-per-line text. Duplicate lines are
/// removed before counting; each sentence contributes a boundary-context
/// bigram for its first word.
pub fn build_ngrams<I, S>(lines: I, alpha: f64) -> Result<NGramModel, ResourceError>
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    if alpha <= 0.0 || !alpha.is_finite() {
        return Err(ResourceError::BadAlpha(alpha));
    }
    let mut seen: HashSet<String> = HashSet::new();
    let mut model = NGramModel::empty(alpha);
    for line in lines {
        let line = nfc(line.as_ref());
        if line.split_whitespace().next().is_none() {
            continue;
        }
        if !seen.insert(line.clone()) {
            continue;
        }
        model.count_sentence(line.split_whitespace());
    }
    if model.total_tokens == 0 {
        return Err(ResourceError::EmptyCorpus);
    }
    Ok(model)
}

impl NGramModel {
    pub fn empty(alpha: f64) -> NGramModel {
        NGramModel {
            vocab: Vec::new(),
            index: HashMap::new(),
            unigrams: Vec::new(),
            bigrams: HashMap::new(),
            context_totals: HashMap::new(),
            total_tokens: 0,
            alpha,
        }
    }

    fn intern(&mut self, word: &str) -> u32 {
        if let Some(&id) = self.index.get(word) {
            return id;
        }
        let id = self.vocab.len() as u32;
        self.vocab.push(word.to_string());
        self.index.insert(word.to_string(), id);
        self.unigrams.push(0);
        id
    }

    fn count_sentence<'a, I: Iterator<Item = &'a str>>(&mut self, words: I) {
        let mut prev = BOUNDARY_ID;
        for word in words {
            let id = self.intern(word);
            self.unigrams[id as usize] += 1;
            self.total_tokens += 1;
            *self.bigrams.entry((prev, id)).or_insert(0) += 1;
            *self.context_totals.entry(prev).or_insert(0) += 1;
            prev = id;
        }
    }

    pub fn vocab_size(&self) -> usize {
        self.vocab.len()
    }

    pub fn total_tokens(&self) -> u64 {
        self.total_tokens
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn unigram_count(&self, word: &str) -> u64 {
        self.index
            .get(word)
            .map(|&id| self.unigrams[id as usize])
            .unwrap_or(0)
    }

    pub fn bigram_count(&self, prev: &str, word: &str) -> u64 {
        let p = self.context_id(prev);
        let w = match self.index.get(word) {
            Some(&id) => id,
            None => return 0,
        };
        match p {
            Some(p) => self.bigrams.get(&(p, w)).copied().unwrap_or(0),
            None => 0,
        }
    }

    fn context_id(&self, prev: &str) -> Option<u32> {
        if prev == NGRAM_BOUNDARY {
            Some(BOUNDARY_ID)
        } else {
            self.index.get(prev).copied()
        }
    }

    /// Smoothed log-probability of `word`. Without a context this is the
    /// unigram probability `(c(w) + a) / (T + a(V+1))`; with `prev` given
    /// (a word or [`NGRAM_BOUNDARY`]) it is the bigram probability
    /// conditioned on that context. Probabilities over the vocabulary plus
    /// one unknown slot sum to one for any fixed context.
    pub fn logprob(&self, word: &str, prev: Option<&str>) -> f64 {
        let v1 = (self.vocab_size() + 1) as f64;
        let word_id = self.index.get(word);
        match prev {
            None => {
                let c = word_id.map(|&id| self.unigrams[id as usize]).unwrap_or(0) as f64;
                ((c + self.alpha) / (self.total_tokens as f64 + self.alpha * v1)).ln()
            }
            Some(prev) => {
                let (ctx_total, count) = match self.context_id(prev) {
                    None => (0, 0),
                    Some(p) => {
                        let total = self.context_totals.get(&p).copied().unwrap_or(0);
                        let count = word_id
                            .and_then(|&w| self.bigrams.get(&(p, w)))
                            .copied()
                            .unwrap_or(0);
                        (total, count)
                    }
                };
                ((count as f64 + self.alpha) / (ctx_total as f64 + self.alpha * v1)).ln()
            }
        }
    }

    /// Iterates the vocabulary in id order with unigram counts.
    pub fn unigrams(&self) -> impl Iterator<Item = (&str, u64)> {
        self.vocab
            .iter()
            .zip(self.unigrams.iter())
            .map(|(w, &c)| (w.as_str(), c))
    }

    /// Iterates bigram counts as (prev, word, count); the boundary context
    /// appears as [`NGRAM_BOUNDARY`]. Order is unspecified.
    pub fn bigrams(&self) -> impl Iterator<Item = (&str, &str, u64)> {
        self.bigrams.iter().map(|(&(p, w), &c)| {
            let prev = if p == BOUNDARY_ID {
                NGRAM_BOUNDARY
            } else {
                self.vocab[p as usize].as_str()
            };
            (prev, self.vocab[w as usize].as_str(), c)
        })
    }

    /// Rebuilds a model from raw counts (used by bundle deserialization).
    pub(crate) fn from_counts(
        alpha: f64,
        unigram_list: Vec<(String, u64)>,
        bigram_list: Vec<(Option<u32>, u32, u64)>,
    ) -> NGramModel {
        let mut model = NGramModel::empty(alpha);
        for (word, count) in unigram_list {
            let id = model.intern(&word);
            model.unigrams[id as usize] = count;
            model.total_tokens += count;
        }
        for (prev, word, count) in bigram_list {
            let p = prev.unwrap_or(BOUNDARY_ID);
            model.bigrams.insert((p, word), count);
            *model.context_totals.entry(p).or_insert(0) += count;
        }
        model
    }

    pub(crate) fn bigram_ids(&self) -> impl Iterator<Item = (Option<u32>, u32, u64)> + '_ {
        self.bigrams.iter().map(|(&(p, w), &c)| {
            let prev = if p == BOUNDARY_ID { None } else { Some(p) };
            (prev, w, c)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_counted_corpus() {
        let m = build_ngrams(["a b a"], 1.0).unwrap();
        assert_eq!(m.unigram_count("a"), 2);
        assert_eq!(m.unigram_count("b"), 1);
        assert_eq!(m.bigram_count("a", "b"), 1);
        assert_eq!(m.bigram_count("b", "a"), 1);
        assert_eq!(m.bigram_count(NGRAM_BOUNDARY, "a"), 1);
        assert_eq!(m.total_tokens(), 3);
        assert_eq!(m.vocab_size(), 2);
    }

    #[test]
    fn duplicate_lines_removed_before_counting() {
        let m = build_ngrams(["x y", "x y", "x y"], 1.0).unwrap();
        assert_eq!(m.unigram_count("x"), 1);
        assert_eq!(m.total_tokens(), 2);
    }

    #[test]
    fn unseen_word_logprob_closed_form() {
        let m = build_ngrams(["a b a"], 0.5).unwrap();
        let expect = (0.5 / (3.0 + 0.5 * 3.0)).ln();
        assert_eq!(m.logprob("zzz", None), expect);
    }

    #[test]
    fn single_word_corpus_closed_form() {
        let m = build_ngrams(["w"], 1.0).unwrap();
        // (1 + 1) / (1 + 1 * 2)
        assert_eq!(m.logprob("w", None), (2.0f64 / 3.0).ln());
    }

    #[test]
    fn unseen_below_seen() {
        let m = build_ngrams(["a a a b"], 1.0).unwrap();
        assert!(m.logprob("zzz", None) < m.logprob("b", None));
        assert!(m.logprob("b", None) < m.logprob("a", None));
    }

    #[test]
    fn bigram_distribution_sums_to_one() {
        let m = build_ngrams(["a b a c", "b b a"], 1.0).unwrap();
        for prev in [Some("a"), Some("b"), Some("c"), Some(NGRAM_BOUNDARY), Some("zzz"), None] {
            let mut total = 0.0;
            for (w, _) in m.unigrams() {
                total += m.logprob(w, prev).exp();
            }
            total += m.logprob("\u{0}unknown", prev).exp();
            assert!((total - 1.0).abs() < 1e-9, "prev={prev:?} sum={total}");
        }
    }

    #[test]
    fn empty_corpus_is_an_error() {
        assert_eq!(build_ngrams::<_, &str>([], 1.0).unwrap_err(), ResourceError::EmptyCorpus);
        assert_eq!(build_ngrams(["   ", ""], 1.0).unwrap_err(), ResourceError::EmptyCorpus);
    }

    #[test]
    fn bad_alpha_is_an_error() {
        assert_eq!(build_ngrams(["a"], 0.0).unwrap_err(), ResourceError::BadAlpha(0.0));
        assert_eq!(build_ngrams(["a"], -1.0).unwrap_err(), ResourceError::BadAlpha(-1.0));
    }

    #[test]
    fn no_cross_sentence_bigrams() {
        let m = build_ngrams(["a b", "c d"], 1.0).unwrap();
        assert_eq!(m.bigram_count("b", "c"), 0);
        assert_eq!(m.bigram_count(NGRAM_BOUNDARY, "c"), 1);
    }
}
