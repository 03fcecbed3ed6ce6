//! Corpus data model: tokens aligned with their normalizations plus optional
//! language-ID and POS layers, file I/O, descriptive statistics, fold
//! planning, token alignment, and tag projection.

mod align;
mod conllu;
mod folds;
mod norm_format;
mod project;
mod stats;

pub use align::{align_tokens, AlignmentLink, LinkKind};
pub use conllu::parse_conllu;
pub use folds::{make_folds, train_test_split, FoldPlan};
pub use norm_format::{parse_norm, read_norm_file, write_norm, write_norm_file};
pub use project::{map_labels_coarse, project_tags, project_tags_merge, PosMergeExceptions};
pub use stats::{cmi_percent, compute_stats, CorpusStats};

use crate::text::nfc;
use thiserror::Error;

/// Norm field of every continuation token in an n:1 merge group. The first
/// token of the group carries the full merged normalization; each following
/// token carries this marker.
pub const MERGE_MARKER: &str = "__MERGE__";

/// Coarse language label for tokens that belong to neither content language.
pub const UN_LABEL: &str = "UN";

#[derive(Debug, Error, PartialEq)]
pub enum CorpusError {
    #[error("line {line}: expected 2-4 tab-separated fields, found {found}")]
    FieldCount { line: usize, found: usize },
    #[error("line {line}: empty {field} field")]
    EmptyField { line: usize, field: &'static str },
    #[error("line {line}: merge marker at sentence start")]
    MergeAtStart { line: usize },
    #[error("line {line}: {reason}")]
    BadToken { line: usize, reason: String },
    #[error("invalid token: {0}")]
    InvalidToken(String),
    #[error("sentence has no tokens")]
    EmptySentence,
    #[error("CMI requested but a token is missing its language label")]
    MissingLid,
    #[error("CMI of an empty label sequence is undefined")]
    EmptyLabels,
    #[error("unknown fine language label `{0}`")]
    UnknownLabel(String),
    #[error("fold count {k} exceeds sentence count {n}")]
    TooManyFolds { k: usize, n: usize },
    #[error("fold count must be at least 2, got {0}")]
    FoldCountTooSmall(usize),
    #[error("test ratio {0} leaves an empty split")]
    DegenerateSplit(f64),
    #[error("line {line}: non-integer token id `{id}`")]
    BadConlluId { line: usize, id: String },
    #[error("line {line}: expected at least 4 columns, found {found}")]
    MissingColumns { line: usize, found: usize },
    #[error("input is not valid UTF-8")]
    NotUtf8,
    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for CorpusError {
    fn from(e: std::io::Error) -> Self {
        CorpusError::Io(e.to_string())
    }
}

/// One surface token with its normalization and optional annotation layers.
///
/// `norm` may contain single internal spaces (a 1:n split) or the
/// [`MERGE_MARKER`] (a continuation of an n:1 merge). Both fields are
/// NFC-normalized on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub orig: String,
    pub norm: String,
    pub lid: Option<String>,
    pub pos: Option<String>,
}

impl Token {
    pub fn new(orig: &str, norm: &str) -> Result<Token, CorpusError> {
        let orig = nfc(orig);
        let norm = nfc(norm);
        if orig.is_empty() {
            return Err(CorpusError::InvalidToken("empty orig".into()));
        }
        if orig.chars().any(char::is_whitespace) {
            return Err(CorpusError::InvalidToken(format!(
                "orig `{orig}` contains whitespace"
            )));
        }
        if norm.is_empty() {
            return Err(CorpusError::InvalidToken("empty norm".into()));
        }
        if norm.chars().any(|c| c.is_whitespace() && c != ' ') {
            return Err(CorpusError::InvalidToken(format!(
                "norm `{norm}` contains non-space whitespace"
            )));
        }
        if norm.starts_with(' ') || norm.ends_with(' ') || norm.contains("  ") {
            return Err(CorpusError::InvalidToken(format!(
                "norm `{norm}` has leading/trailing/double spaces"
            )));
        }
        Ok(Token {
            orig,
            norm,
            lid: None,
            pos: None,
        })
    }

    /// A token whose normalization equals its surface form.
    pub fn identity(orig: &str) -> Result<Token, CorpusError> {
        Token::new(orig, orig)
    }

    pub fn with_lid(mut self, lid: &str) -> Token {
        self.lid = Some(nfc(lid));
        self
    }

    pub fn with_pos(mut self, pos: &str) -> Token {
        self.pos = Some(nfc(pos));
        self
    }

    /// True for continuation tokens of an n:1 merge group.
    pub fn is_merge_continuation(&self) -> bool {
        self.norm == MERGE_MARKER
    }

    /// True when the normalization splits this token into several words.
    pub fn is_split(&self) -> bool {
        self.norm.contains(' ')
    }

    pub fn is_normalized(&self) -> bool {
        self.norm != self.orig
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sentence {
    pub tokens: Vec<Token>,
}

impl Sentence {
    pub fn new(tokens: Vec<Token>) -> Result<Sentence, CorpusError> {
        if tokens.is_empty() {
            return Err(CorpusError::EmptySentence);
        }
        if tokens[0].is_merge_continuation() {
            return Err(CorpusError::MergeAtStart { line: 0 });
        }
        Ok(Sentence { tokens })
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Surface forms of all tokens, in order.
    pub fn orig_words(&self) -> Vec<String> {
        self.tokens.iter().map(|t| t.orig.clone()).collect()
    }
}

/// Whether LID labels are the corpus' fine-grained inventory or the coarse
/// {lang1, lang2, UN} set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelScheme {
    Fine,
    Coarse,
}

/// An ordered collection of sentences with the language pair they mix.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    pub sentences: Vec<Sentence>,
    pub label_scheme: LabelScheme,
    pub languages: (String, String),
}

impl Dataset {
    pub fn new(sentences: Vec<Sentence>, languages: (&str, &str)) -> Dataset {
        let languages = (languages.0.to_string(), languages.1.to_string());
        let label_scheme = infer_scheme(&sentences, &languages);
        Dataset {
            sentences,
            label_scheme,
            languages,
        }
    }

    pub fn n_sentences(&self) -> usize {
        self.sentences.len()
    }

    pub fn n_tokens(&self) -> usize {
        self.sentences.iter().map(Sentence::len).sum()
    }

    pub fn tokens(&self) -> impl Iterator<Item = &Token> {
        self.sentences.iter().flat_map(|s| s.tokens.iter())
    }

    /// A copy restricted to the given sentence indices (order preserved).
    pub fn select(&self, indices: &[usize]) -> Dataset {
        Dataset {
            sentences: indices.iter().map(|&i| self.sentences[i].clone()).collect(),
            label_scheme: self.label_scheme,
            languages: self.languages.clone(),
        }
    }

    /// Returns per-sentence coarse labels, mapping fine labels as needed.
    /// Errors when a token has no label.
    pub fn coarse_labels(&self) -> Result<Vec<Vec<String>>, CorpusError> {
        let langs = (self.languages.0.as_str(), self.languages.1.as_str());
        self.sentences
            .iter()
            .map(|s| {
                s.tokens
                    .iter()
                    .map(|t| match &t.lid {
                        None => Err(CorpusError::MissingLid),
                        Some(l) => match self.label_scheme {
                            LabelScheme::Coarse => Ok(l.clone()),
                            LabelScheme::Fine => map_labels_coarse(l, langs),
                        },
                    })
                    .collect()
            })
            .collect()
    }
}

/// Labels are coarse when every present label is one of lang1, lang2, UN.
fn infer_scheme(sentences: &[Sentence], languages: &(String, String)) -> LabelScheme {
    let coarse = sentences.iter().flat_map(|s| &s.tokens).all(|t| match &t.lid {
        None => true,
        Some(l) => l == &languages.0 || l == &languages.1 || l == UN_LABEL,
    });
    if coarse {
        LabelScheme::Coarse
    } else {
        LabelScheme::Fine
    }
}
