//! Word embedding store with cosine nearest-neighbor queries.

use super::ResourceError;
use crate::text::nfc;
use std::collections::HashMap;
use std::io::BufRead;

/// Fixed-dimension word vectors. Raw vectors are kept as loaded; a
/// unit-normalized copy is cached for cosine computations.
#[derive(Debug, PartialEq)]
pub struct EmbeddingStore {
    dim: usize,
    words: Vec<String>,
    index: HashMap<String, u32>,
    raw: Vec<f32>,
    unit: Vec<f32>,
}

/// Loads vectors in the textual format `word v1 ... vd`, one word per line,
/// with an optional `count dim` header line. Later entries for the same
/// word overwrite earlier ones.
pub fn load_embeddings<R: BufRead>(reader: R) -> Result<EmbeddingStore, ResourceError> {
    let mut store = EmbeddingStore::empty();
    let mut first = true;
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line?;
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.is_empty() {
            continue;
        }
        if first {
            first = false;
            if fields.len() == 2
                && fields[0].parse::<usize>().is_ok()
                && fields[1].parse::<usize>().is_ok()
            {
                continue; // header
            }
        }
        let word = nfc(fields[0]);
        let mut vec = Vec::with_capacity(fields.len() - 1);
        for f in &fields[1..] {
            let v: f32 = f.parse().map_err(|_| ResourceError::BadVectorValue {
                line: lineno,
                value: f.to_string(),
            })?;
            vec.push(v);
        }
        store.insert(&word, &vec).map_err(|e| match e {
            ResourceError::DimensionMismatch { expected, found, .. } => {
                ResourceError::DimensionMismatch { line: lineno, expected, found }
            }
            ResourceError::ZeroVector { word, .. } => {
                ResourceError::ZeroVector { line: lineno, word }
            }
            other => other,
        })?;
    }
    Ok(store)
}

impl EmbeddingStore {
    pub fn empty() -> EmbeddingStore {
        EmbeddingStore {
            dim: 0,
            words: Vec::new(),
            index: HashMap::new(),
            raw: Vec::new(),
            unit: Vec::new(),
        }
    }

    pub fn insert(&mut self, word: &str, vector: &[f32]) -> Result<(), ResourceError> {
        if self.dim == 0 && self.words.is_empty() {
            self.dim = vector.len();
        }
        if vector.len() != self.dim {
            return Err(ResourceError::DimensionMismatch {
                line: 0,
                expected: self.dim,
                found: vector.len(),
            });
        }
        let norm = (vector.iter().map(|&v| (v as f64) * (v as f64)).sum::<f64>()).sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(ResourceError::ZeroVector { line: 0, word: word.to_string() });
        }
        let unit: Vec<f32> = vector.iter().map(|&v| (v as f64 / norm) as f32).collect();
        match self.index.get(word) {
            Some(&id) => {
                let start = id as usize * self.dim;
                self.raw[start..start + self.dim].copy_from_slice(vector);
                self.unit[start..start + self.dim].copy_from_slice(&unit);
            }
            None => {
                let id = self.words.len() as u32;
                self.words.push(word.to_string());
                self.index.insert(word.to_string(), id);
                self.raw.extend_from_slice(vector);
                self.unit.extend_from_slice(&unit);
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, word: &str) -> bool {
        self.index.contains_key(word)
    }

    pub fn vector(&self, word: &str) -> Option<&[f32]> {
        self.index
            .get(word)
            .map(|&id| &self.raw[id as usize * self.dim..(id as usize + 1) * self.dim])
    }

    fn unit_vector(&self, id: u32) -> &[f32] {
        &self.unit[id as usize * self.dim..(id as usize + 1) * self.dim]
    }

    /// Cosine similarity between two stored words, or `None` when either is
    /// absent.
    pub fn cosine(&self, a: &str, b: &str) -> Option<f64> {
        let ia = *self.index.get(a)?;
        let ib = *self.index.get(b)?;
        Some(dot(self.unit_vector(ia), self.unit_vector(ib)))
    }

    /// The `k` nearest neighbors of `word` by cosine similarity, excluding
    /// the word itself. Ties are ordered lexicographically; an unknown
    /// query yields an empty list.
    pub fn knn(&self, word: &str, k: usize) -> Vec<(String, f64)> {
        let query = match self.index.get(word) {
            Some(&id) => id,
            None => return Vec::new(),
        };
        let qvec = self.unit_vector(query);
        let mut scored: Vec<(u32, f64)> = (0..self.words.len() as u32)
            .filter(|&id| id != query)
            .map(|id| (id, dot(qvec, self.unit_vector(id))))
            .collect();
        scored.sort_unstable_by(|a, b| {
            b.1.total_cmp(&a.1)
                .then_with(|| self.words[a.0 as usize].cmp(&self.words[b.0 as usize]))
        });
        scored
            .into_iter()
            .take(k)
            .map(|(id, cos)| (self.words[id as usize].clone(), cos))
            .collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &[f32])> {
        self.words
            .iter()
            .enumerate()
            .map(|(i, w)| (w.as_str(), &self.raw[i * self.dim..(i + 1) * self.dim]))
    }
}

fn dot(a: &[f32], b: &[f32]) -> f64 {
    a.iter().zip(b).map(|(&x, &y)| x as f64 * y as f64).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn store(entries: &[(&str, &[f32])]) -> EmbeddingStore {
        let mut s = EmbeddingStore::empty();
        for (w, v) in entries {
            s.insert(w, v).unwrap();
        }
        s
    }

    #[test]
    fn parallel_vectors_have_cosine_one() {
        let s = store(&[("a", &[1.0, 0.0]), ("b", &[2.0, 0.0]), ("c", &[0.0, 1.0])]);
        let hits = s.knn("a", 1);
        assert_eq!(hits.len(), 1);
        assert_eq!(hits[0].0, "b");
        assert!((hits[0].1 - 1.0).abs() < 1e-9);
    }

    #[test]
    fn unknown_query_is_empty() {
        let s = store(&[("a", &[1.0, 0.0])]);
        assert!(s.knn("missing", 5).is_empty());
    }

    #[test]
    fn knn_matches_brute_force() {
        let mut s = EmbeddingStore::empty();
        let mut state = 0xdeadbeefu64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) as f32 / (1u64 << 31) as f32) - 0.5
        };
        let mut vectors = Vec::new();
        for i in 0..100 {
            let v: Vec<f32> = (0..8).map(|_| next()).collect();
            s.insert(&format!("w{i:03}"), &v).unwrap();
            vectors.push(v);
        }
        let got = s.knn("w000", 10);
        // Brute force over raw vectors.
        let norm = |v: &[f32]| v.iter().map(|&x| (x as f64).powi(2)).sum::<f64>().sqrt();
        let q = &vectors[0];
        let mut expect: Vec<(String, f64)> = (1..100)
            .map(|i| {
                let v = &vectors[i];
                let d: f64 = q.iter().zip(v).map(|(&a, &b)| a as f64 * b as f64).sum();
                (format!("w{i:03}"), d / (norm(q) * norm(v)))
            })
            .collect();
        expect.sort_by(|a, b| b.1.total_cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
        expect.truncate(10);
        assert_eq!(got.len(), 10);
        for (g, e) in got.iter().zip(&expect) {
            assert_eq!(g.0, e.0);
            assert!((g.1 - e.1).abs() < 1e-6);
        }
    }

    #[test]
    fn loads_text_format_with_header() {
        let text = "2 3\nfoo 1 0 0\nbar 0 1 0\n";
        let s = load_embeddings(text.as_bytes()).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.dim(), 3);
        assert_eq!(s.vector("foo"), Some(&[1.0f32, 0.0, 0.0][..]));
    }

    #[test]
    fn loads_without_header() {
        let text = "foo 1 0\nbar 0 1\n";
        let s = load_embeddings(text.as_bytes()).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.dim(), 2);
    }

    #[test]
    fn dimension_mismatch_reports_line() {
        let text = "foo 1 0\nbar 0 1 1\n";
        let err = load_embeddings(text.as_bytes()).unwrap_err();
        assert_eq!(
            err,
            ResourceError::DimensionMismatch { line: 2, expected: 2, found: 3 }
        );
    }

    #[test]
    fn zero_vector_rejected() {
        let err = load_embeddings("foo 0 0\n".as_bytes()).unwrap_err();
        assert!(matches!(err, ResourceError::ZeroVector { line: 1, .. }));
    }

    #[test]
    fn cached_norms_are_unit() {
        let s = store(&[("a", &[3.0, 4.0]), ("b", &[-1.0, 2.0])]);
        for id in 0..s.len() as u32 {
            let n: f64 = s.unit_vector(id).iter().map(|&v| (v as f64).powi(2)).sum();
            assert!((n.sqrt() - 1.0).abs() < 1e-6);
        }
    }
}
