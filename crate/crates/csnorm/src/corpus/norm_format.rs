//! The norm file format: UTF-8 with LF line endings, one token per line as
//! 2-4 tab-separated fields `ORIG NORM [LID] [POS]`, a blank line ends each
//! sentence, and `__MERGE__` in the NORM field marks merge continuations.
//! See docs/FORMATS.md for the full grammar.

use super::{CorpusError, Dataset, Sentence, Token};
use std::fs;
use std::path::Path;

/// Parses norm-format text into a dataset. The language pair is not encoded
/// in the file and must be supplied; the label scheme is inferred from the
/// labels present.
pub fn parse_norm(text: &str, languages: (&str, &str)) -> Result<Dataset, CorpusError> {
    let mut sentences = Vec::new();
    let mut tokens: Vec<Token> = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        if line.is_empty() {
            if !tokens.is_empty() {
                sentences.push(Sentence { tokens: std::mem::take(&mut tokens) });
            }
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if !(2..=4).contains(&fields.len()) {
            return Err(CorpusError::FieldCount { line: lineno, found: fields.len() });
        }
        if fields[0].is_empty() {
            return Err(CorpusError::EmptyField { line: lineno, field: "orig" });
        }
        if fields[1].is_empty() {
            return Err(CorpusError::EmptyField { line: lineno, field: "norm" });
        }
        let mut token = Token::new(fields[0], fields[1])
            .map_err(|e| CorpusError::BadToken { line: lineno, reason: e.to_string() })?;
        if let Some(lid) = fields.get(2) {
            // An empty LID field is only written as a placeholder when a POS
            // tag follows; it reads back as no label.
            if !lid.is_empty() {
                token = token.with_lid(lid);
            } else if fields.len() == 3 {
                return Err(CorpusError::EmptyField { line: lineno, field: "lid" });
            }
        }
        if let Some(pos) = fields.get(3) {
            if pos.is_empty() {
                return Err(CorpusError::EmptyField { line: lineno, field: "pos" });
            }
            token = token.with_pos(pos);
        }
        if tokens.is_empty() && token.is_merge_continuation() {
            return Err(CorpusError::MergeAtStart { line: lineno });
        }
        tokens.push(token);
    }
    if !tokens.is_empty() {
        sentences.push(Sentence { tokens });
    }
    Ok(Dataset::new(sentences, languages))
}

/// Serializes a dataset back to norm-format text. Every sentence is followed
/// by one blank line, including the last.
pub fn write_norm(d: &Dataset) -> String {
    let mut out = String::new();
    for sentence in &d.sentences {
        for t in &sentence.tokens {
            out.push_str(&t.orig);
            out.push('\t');
            out.push_str(&t.norm);
            match (&t.lid, &t.pos) {
                (None, None) => {}
                (Some(lid), None) => {
                    out.push('\t');
                    out.push_str(lid);
                }
                (lid, Some(pos)) => {
                    out.push('\t');
                    if let Some(lid) = lid {
                        out.push_str(lid);
                    }
                    out.push('\t');
                    out.push_str(pos);
                }
            }
            out.push('\n');
        }
        out.push('\n');
    }
    out
}

pub fn read_norm_file<P: AsRef<Path>>(
    path: P,
    languages: (&str, &str),
) -> Result<Dataset, CorpusError> {
    let bytes = fs::read(path)?;
    let text = std::str::from_utf8(&bytes).map_err(|_| CorpusError::NotUtf8)?;
    parse_norm(text, languages)
}

pub fn write_norm_file<P: AsRef<Path>>(d: &Dataset, path: P) -> Result<(), CorpusError> {
    fs::write(path, write_norm(d))?;
    Ok(())
}
