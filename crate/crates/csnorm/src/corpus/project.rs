//! Label projection: fine-to-coarse LID mapping and carrying LID/POS tags
//! through token merges and alignments.

use super::align::{align_tokens, AlignmentLink};
use super::{CorpusError, UN_LABEL};
use std::collections::HashMap;

/// Label given to tokens that mix both languages inside one word.
pub const MIXED_LABEL: &str = "Mixed";

/// Maps a fine-grained LID label onto the coarse set {lang1, lang2, UN}.
///
/// Named-entity labels drop their `NE.` prefix first. `Mixed` maps to lang2
/// (the embedded language), and `Lang3`/`Ambig`/`Other` map to `UN`. Coarse
/// labels pass through unchanged. Matching of the special label names is
/// case-insensitive; the language codes themselves are matched exactly.
pub fn map_labels_coarse(fine: &str, languages: (&str, &str)) -> Result<String, CorpusError> {
    let (lang1, lang2) = languages;
    let stripped = fine
        .strip_prefix("NE.")
        .or_else(|| fine.strip_prefix("ne."))
        .unwrap_or(fine);
    if stripped == lang1 {
        return Ok(lang1.to_string());
    }
    if stripped == lang2 {
        return Ok(lang2.to_string());
    }
    let upper = stripped.to_uppercase();
    match upper.as_str() {
        "MIXED" => Ok(lang2.to_string()),
        "LANG3" | "AMBIG" | "OTHER" | "UN" => Ok(UN_LABEL.to_string()),
        _ => Err(CorpusError::UnknownLabel(fine.to_string())),
    }
}

/// Exceptions to the default "last segment wins" POS merge rule. Keyed by
/// (accumulated tag, next segment's tag); empty by default.
#[derive(Debug, Clone, Default)]
pub struct PosMergeExceptions {
    rules: HashMap<(String, String), String>,
}

impl PosMergeExceptions {
    pub fn empty() -> PosMergeExceptions {
        PosMergeExceptions::default()
    }

    pub fn insert(&mut self, acc: &str, next: &str, result: &str) {
        self.rules
            .insert((acc.to_string(), next.to_string()), result.to_string());
    }

    fn apply(&self, acc: &str, next: &str) -> String {
        self.rules
            .get(&(acc.to_string(), next.to_string()))
            .cloned()
            .unwrap_or_else(|| next.to_string())
    }
}

/// Combines the LID and POS tags of segments that merge into one token.
/// The merged LID is the shared label when all segments agree and `Mixed`
/// otherwise; the merged POS is the last segment's tag unless an exception
/// rule fires.
pub fn project_tags_merge(
    segments: &[(&str, &str, &str)],
    exceptions: &PosMergeExceptions,
) -> Result<(String, String), CorpusError> {
    let (first, rest) = segments
        .split_first()
        .ok_or(CorpusError::EmptySentence)?;
    let lid = if rest.iter().all(|s| s.1 == first.1) {
        first.1.to_string()
    } else {
        MIXED_LABEL.to_string()
    };
    let mut pos = first.2.to_string();
    for seg in rest {
        pos = exceptions.apply(&pos, seg.2);
    }
    Ok((lid, pos))
}

/// Projects (LID, POS) annotations from one tokenization onto another via
/// monotone alignment. 1:1 links copy tags, 1:n links copy the source tags
/// to every member of the target span, and n:1 links merge the source tags
/// with [`project_tags_merge`].
pub fn project_tags(
    annotated: &[(String, Option<String>, Option<String>)],
    target_forms: &[String],
    exceptions: &PosMergeExceptions,
) -> Result<Vec<(Option<String>, Option<String>)>, CorpusError> {
    let src_forms: Vec<&str> = annotated.iter().map(|t| t.0.as_str()).collect();
    let links: Vec<AlignmentLink> = align_tokens(&src_forms, target_forms)
        .ok_or_else(|| CorpusError::InvalidToken("sequences cannot be aligned".into()))?;
    let mut out = vec![(None, None); target_forms.len()];
    for link in &links {
        let tags: (Option<String>, Option<String>) = if link.src.len() == 1 {
            let t = &annotated[link.src.start];
            (t.1.clone(), t.2.clone())
        } else {
            let segs: Vec<(&str, &str, &str)> = annotated[link.src.clone()]
                .iter()
                .map(|t| {
                    (
                        t.0.as_str(),
                        t.1.as_deref().unwrap_or(UN_LABEL),
                        t.2.as_deref().unwrap_or("X"),
                    )
                })
                .collect();
            let (lid, pos) = project_tags_merge(&segs, exceptions)?;
            (Some(lid), Some(pos))
        };
        for i in link.tgt.clone() {
            out[i] = tags.clone();
        }
    }
    Ok(out)
}
