//! Binary resource-bundle files (`.res`): one language's lexicon, n-gram
//! counts, embeddings, and replacement dictionary in a single file that
//! models reference by path and content hash. Layout in docs/FORMATS.md.

use super::{
    EmbeddingStore, LanguageResources, Lexicon, NGramModel, ReplacementDict, ResourceError,
};
use crate::wire::{Reader, WireError, Writer};
use std::path::Path;

const MAGIC: &[u8; 6] = b"CSNRES";
const VERSION: u32 = 1;

pub fn save_bundle<P: AsRef<Path>>(res: &LanguageResources, path: P) -> Result<(), ResourceError> {
    let mut w = Writer::new();
    w.raw(MAGIC);
    w.u32(VERSION);
    w.str(&res.language);

    // Lexicon: entries are already sorted (BTreeSet iteration order).
    w.u32(res.lexicon.len() as u32);
    for word in res.lexicon.iter() {
        w.str(word);
    }

    // N-grams: vocabulary in id order, then bigrams sorted by id pair.
    let ng = &res.ngrams;
    w.f64(ng.alpha());
    let unigrams: Vec<(&str, u64)> = ng.unigrams().collect();
    w.u32(unigrams.len() as u32);
    for (word, count) in &unigrams {
        w.str(word);
        w.u64(*count);
    }
    let mut bigrams: Vec<(Option<u32>, u32, u64)> = ng.bigram_ids().collect();
    bigrams.sort_unstable();
    w.u64(bigrams.len() as u64);
    for (prev, word, count) in bigrams {
        w.u32(prev.map(|p| p + 1).unwrap_or(0)); // 0 encodes the boundary
        w.u32(word);
        w.u64(count);
    }

    // Embeddings: raw vectors in insertion order.
    let emb = &res.embeddings;
    w.u32(emb.dim() as u32);
    w.u32(emb.len() as u32);
    for (word, vec) in emb.iter() {
        w.str(word);
        for &v in vec {
            w.f32(v);
        }
    }

    // Replacement dictionary, sorted by source word.
    let mut entries: Vec<(&str, &[(String, u64)])> = res.replacements.iter().collect();
    entries.sort_unstable_by_key(|e| e.0);
    w.u32(entries.len() as u32);
    for (word, list) in entries {
        w.str(word);
        w.u32(list.len() as u32);
        for (norm, count) in list {
            w.str(norm);
            w.u64(*count);
        }
    }

    std::fs::write(path, w.into_bytes())?;
    Ok(())
}

pub fn load_bundle<P: AsRef<Path>>(path: P) -> Result<LanguageResources, ResourceError> {
    let bytes = std::fs::read(path)?;
    let mut r = Reader::new(&bytes);
    if r.raw(6)? != MAGIC {
        return Err(WireError::BadMagic { expected: "CSNRES" }.into());
    }
    let version = r.u32()?;
    if version != VERSION {
        return Err(WireError::Version { found: version, supported: VERSION }.into());
    }
    let language = r.str()?;

    let n_lex = r.u32()? as usize;
    let mut words = Vec::with_capacity(n_lex);
    for _ in 0..n_lex {
        words.push(r.str()?);
    }
    let lexicon = Lexicon::from_words(&language, words);

    let alpha = r.f64()?;
    let n_uni = r.u32()? as usize;
    let mut unigrams = Vec::with_capacity(n_uni);
    for _ in 0..n_uni {
        let word = r.str()?;
        let count = r.u64()?;
        unigrams.push((word, count));
    }
    let n_bi = r.u64()? as usize;
    let mut bigrams = Vec::with_capacity(n_bi);
    for _ in 0..n_bi {
        let prev = r.u32()?;
        let word = r.u32()?;
        let count = r.u64()?;
        let prev = if prev == 0 { None } else { Some(prev - 1) };
        bigrams.push((prev, word, count));
    }
    let ngrams = NGramModel::from_counts(alpha, unigrams, bigrams);

    let dim = r.u32()? as usize;
    let n_emb = r.u32()? as usize;
    let mut embeddings = EmbeddingStore::empty();
    for _ in 0..n_emb {
        let word = r.str()?;
        let mut vec = Vec::with_capacity(dim);
        for _ in 0..dim {
            vec.push(r.f32()?);
        }
        embeddings.insert(&word, &vec)?;
    }

    let n_rep = r.u32()? as usize;
    let mut entries = Vec::with_capacity(n_rep);
    for _ in 0..n_rep {
        let word = r.str()?;
        let m = r.u32()? as usize;
        let mut list = Vec::with_capacity(m);
        for _ in 0..m {
            let norm = r.str()?;
            let count = r.u64()?;
            list.push((norm, count));
        }
        entries.push((word, list));
    }
    let replacements = ReplacementDict::from_entries(entries);

    LanguageResources::new(&language, lexicon, ngrams, embeddings, replacements)
}
