//! Lexical normalization for code-switched social-media text.
//!
//! The pipeline follows a generate-and-rank design: for every input token a
//! set of normalization candidates is produced from several sources (the
//! original word, a training-data replacement dictionary, lexicon
//! edit-distance search, embedding neighbors, splits, case variants), each
//! candidate is described by a feature vector, and a random-forest classifier
//! scores the probability that the candidate is the correct normalization.
//!
//! Four model variants cover code-switched input: `Monolingual` (one
//! language's resources), `Fragments` (split the sentence at code-switch
//! points and route each fragment to a monolingual model), `Multilingual`
//! (both languages' feature blocks in one classifier), and `LanguageAware`
//! (one language block, filled according to a word-level language label).
//!
//! Supporting modules provide the corpus data model and file formats
//! ([`corpus`]), per-language resources ([`resources`]), a linear-chain
//! sequence labeler used for language identification and POS tagging
//! ([`seqlab`], [`lid`]), and the evaluation metric suite ([`eval`]).

pub mod candidates;
pub mod corpus;
pub mod eval;
pub mod lid;
pub mod ranker;
pub mod resources;
pub mod seqlab;
pub mod text;
pub mod wire;

pub use corpus::{Dataset, Sentence, Token};
pub use ranker::{NormalizationModel, Strategy};
pub use resources::LanguageResources;
