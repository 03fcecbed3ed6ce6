//! Per-language monolingual resources: lexicon, n-gram model, embedding
//! store, and the training-data replacement dictionary.

mod bundle;
mod embed;
mod lexicon;
mod ngram;
mod replace;

pub use bundle::{load_bundle, save_bundle};
pub use embed::{load_embeddings, EmbeddingStore};
pub use lexicon::Lexicon;
pub use ngram::{build_ngrams, NGramModel, NGRAM_BOUNDARY};
pub use replace::{build_replacement_dict, ReplacementDict};

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ResourceError {
    #[error("corpus contains no tokens")]
    EmptyCorpus,
    #[error("line {line}: expected {expected} vector components, found {found}")]
    DimensionMismatch { line: usize, expected: usize, found: usize },
    #[error("line {line}: cannot parse vector component `{value}`")]
    BadVectorValue { line: usize, value: String },
    #[error("line {line}: word `{word}` has a zero vector")]
    ZeroVector { line: usize, word: String },
    #[error("smoothing alpha must be positive, got {0}")]
    BadAlpha(f64),
    #[error("resource language `{found}` does not match bundle language `{expected}`")]
    LanguageMismatch { expected: String, found: String },
    #[error("io: {0}")]
    Io(String),
    #[error(transparent)]
    Wire(#[from] crate::wire::WireError),
}

impl From<std::io::Error> for ResourceError {
    fn from(e: std::io::Error) -> Self {
        ResourceError::Io(e.to_string())
    }
}

/// Everything the candidate generators and feature extractors need for one
/// language. Immutable once built; safe to share across threads.
#[derive(Debug)]
pub struct LanguageResources {
    pub language: String,
    pub lexicon: Lexicon,
    pub ngrams: NGramModel,
    pub embeddings: EmbeddingStore,
    pub replacements: ReplacementDict,
}

impl LanguageResources {
    pub fn new(
        language: &str,
        lexicon: Lexicon,
        ngrams: NGramModel,
        embeddings: EmbeddingStore,
        replacements: ReplacementDict,
    ) -> Result<LanguageResources, ResourceError> {
        if lexicon.language() != language {
            return Err(ResourceError::LanguageMismatch {
                expected: language.to_string(),
                found: lexicon.language().to_string(),
            });
        }
        Ok(LanguageResources {
            language: language.to_string(),
            lexicon,
            ngrams,
            embeddings,
            replacements,
        })
    }

    /// An empty bundle, useful in tests and as a stand-in when a language
    /// has no external resources.
    pub fn empty(language: &str) -> LanguageResources {
        LanguageResources {
            language: language.to_string(),
            lexicon: Lexicon::from_words(language, std::iter::empty::<&str>()),
            ngrams: NGramModel::empty(1.0),
            embeddings: EmbeddingStore::empty(),
            replacements: ReplacementDict::default(),
        }
    }

    /// Replaces the replacement dictionary (it is built from training data
    /// at model-training time, not from raw corpora).
    pub fn with_replacements(mut self, replacements: ReplacementDict) -> LanguageResources {
        self.replacements = replacements;
        self
    }
}
