//! Word-list lexicon with exact lookup and edit-distance search.

use crate::text::{levenshtein, nfc};
use std::collections::BTreeSet;
use std::sync::OnceLock;

/// A deduplicated, case-sensitive set of words for one language.
///
/// Edit-distance queries go through a BK-tree built lazily on first use;
/// results are exactly those a full scan with Levenshtein distance would
/// produce.
#[derive(Debug)]
pub struct Lexicon {
    language: String,
    entries: BTreeSet<String>,
    index: OnceLock<BkTree>,
}

impl PartialEq for Lexicon {
    fn eq(&self, other: &Self) -> bool {
        self.language == other.language && self.entries == other.entries
    }
}

impl Lexicon {
    pub fn from_words<I, S>(language: &str, words: I) -> Lexicon
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let entries = words
            .into_iter()
            .map(|w| nfc(w.as_ref()))
            .filter(|w| !w.is_empty())
            .collect();
        Lexicon {
            language: language.to_string(),
            entries,
            index: OnceLock::new(),
        }
    }

    /// Reads a one-word-per-line file.
    pub fn read_file<P: AsRef<std::path::Path>>(
        language: &str,
        path: P,
    ) -> std::io::Result<Lexicon> {
        let text = std::fs::read_to_string(path)?;
        Ok(Lexicon::from_words(language, text.lines().map(str::trim)))
    }

    pub fn language(&self) -> &str {
        &self.language
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, word: &str) -> bool {
        self.entries.contains(word)
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(String::as_str)
    }

    /// All entries within Levenshtein distance `max_dist` of `word`, sorted
    /// by (distance, word).
    pub fn within_distance(&self, word: &str, max_dist: u32) -> Vec<(&str, u32)> {
        let tree = self.index.get_or_init(|| BkTree::build(&self.entries));
        let mut out = tree.query(word, max_dist);
        out.sort_unstable_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(b.0)));
        out
    }
}

/// BK-tree over the lexicon entries; the triangle inequality prunes most of
/// the set for small distance cutoffs.
#[derive(Debug)]
struct BkTree {
    nodes: Vec<BkNode>,
}

#[derive(Debug)]
struct BkNode {
    word: String,
    children: Vec<(u32, usize)>,
}

impl BkTree {
    fn build(entries: &BTreeSet<String>) -> BkTree {
        let mut tree = BkTree { nodes: Vec::with_capacity(entries.len()) };
        for word in entries {
            tree.insert(word);
        }
        tree
    }

    fn insert(&mut self, word: &str) {
        if self.nodes.is_empty() {
            self.nodes.push(BkNode { word: word.to_string(), children: Vec::new() });
            return;
        }
        let mut at = 0;
        loop {
            let dist = levenshtein(word, &self.nodes[at].word);
            if dist == 0 {
                return;
            }
            match self.nodes[at].children.iter().find(|(d, _)| *d == dist) {
                Some(&(_, child)) => at = child,
                None => {
                    let idx = self.nodes.len();
                    self.nodes.push(BkNode { word: word.to_string(), children: Vec::new() });
                    self.nodes[at].children.push((dist, idx));
                    return;
                }
            }
        }
    }

    fn query<'a>(&'a self, word: &str, max: u32) -> Vec<(&'a str, u32)> {
        let mut out = Vec::new();
        if self.nodes.is_empty() {
            return out;
        }
        let mut stack = vec![0usize];
        while let Some(at) = stack.pop() {
            let node = &self.nodes[at];
            // Children are keyed by exact distance, so the full value is
            // needed here; pruning happens on the tree walk.
            let dist = levenshtein(word, &node.word);
            if dist <= max {
                out.push((node.word.as_str(), dist));
            }
            let lo = dist.saturating_sub(max);
            let hi = dist.saturating_add(max);
            for &(d, child) in &node.children {
                if d >= lo && d <= hi {
                    stack.push(child);
                }
            }
        }
        out
    }
}
