//! Replacement dictionary built from training data; also serves as the
//! most-frequent-replacement baseline.

use crate::corpus::Dataset;
use std::collections::HashMap;

/// Maps each training surface form to its observed normalizations with
/// counts, sorted by (count descending, normalization ascending).
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ReplacementDict {
    map: HashMap<String, Vec<(String, u64)>>,
}

/// Counts (orig, norm) pairs over the training data, identity pairs
/// included. Merge continuation tokens are skipped: their norm field is a
/// structural marker, not a word.
pub fn build_replacement_dict(train: &Dataset) -> ReplacementDict {
    let mut counts: HashMap<String, HashMap<String, u64>> = HashMap::new();
    for t in train.tokens() {
        if t.is_merge_continuation() {
            continue;
        }
        *counts
            .entry(t.orig.clone())
            .or_default()
            .entry(t.norm.clone())
            .or_insert(0) += 1;
    }
    let map = counts
        .into_iter()
        .map(|(orig, norms)| {
            let mut list: Vec<(String, u64)> = norms.into_iter().collect();
            list.sort_unstable_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
            (orig, list)
        })
        .collect();
    ReplacementDict { map }
}

impl ReplacementDict {
    /// Observed replacements for `word`, best first; empty for unknown words.
    pub fn lookup(&self, word: &str) -> &[(String, u64)] {
        self.map.get(word).map(Vec::as_slice).unwrap_or(&[])
    }

    /// The most frequent replacement. On a count tie the original word wins
    /// if it is among the tied candidates, otherwise the lexicographically
    /// smallest does; unknown words map to themselves.
    pub fn mfr_lookup(&self, word: &str) -> String {
        let list = self.lookup(word);
        match list.first() {
            None => word.to_string(),
            Some(&(_, top)) => {
                let tied = list.iter().take_while(|(_, c)| *c == top);
                for (norm, _) in tied {
                    if norm == word {
                        return word.to_string();
                    }
                }
                list[0].0.clone()
            }
        }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &[(String, u64)])> {
        self.map.iter().map(|(k, v)| (k.as_str(), v.as_slice()))
    }

    pub(crate) fn from_entries(entries: Vec<(String, Vec<(String, u64)>)>) -> ReplacementDict {
        ReplacementDict { map: entries.into_iter().collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{parse_norm, MERGE_MARKER};

    fn dataset(text: &str) -> Dataset {
        parse_norm(text, ("ID", "EN")).unwrap()
    }

    #[test]
    fn majority_replacement_wins() {
        let d = dataset("ak\taku\nak\taku\nak\tak\n\n");
        let dict = build_replacement_dict(&d);
        assert_eq!(dict.mfr_lookup("ak"), "aku");
        assert_eq!(dict.lookup("ak"), &[("aku".to_string(), 2), ("ak".to_string(), 1)]);
    }

    #[test]
    fn unknown_word_maps_to_itself() {
        let d = dataset("a\tb\n\n");
        let dict = build_replacement_dict(&d);
        assert_eq!(dict.mfr_lookup("zzz"), "zzz");
    }

    #[test]
    fn tie_with_original_keeps_original() {
        let d = dataset("ak\taku\nak\tak\n\n");
        let dict = build_replacement_dict(&d);
        assert_eq!(dict.mfr_lookup("ak"), "ak");
    }

    #[test]
    fn tie_without_original_takes_smallest() {
        let d = dataset("x\tbb\nx\taa\n\n");
        let dict = build_replacement_dict(&d);
        assert_eq!(dict.mfr_lookup("x"), "aa");
    }

    #[test]
    fn merge_continuations_are_skipped() {
        let d = dataset(&format!("yok\tyokya\nya\t{MERGE_MARKER}\n\n"));
        let dict = build_replacement_dict(&d);
        assert_eq!(dict.lookup("ya"), &[]);
        assert_eq!(dict.mfr_lookup("yok"), "yokya");
    }

    #[test]
    fn rebuild_is_deterministic() {
        let d = dataset("a\tb\na\tc\nd\td\nq\tq q\n\n");
        let d1 = build_replacement_dict(&d);
        let d2 = build_replacement_dict(&d);
        assert_eq!(d1, d2);
    }
}
