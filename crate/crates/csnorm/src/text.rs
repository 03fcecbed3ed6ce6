//! Small text utilities shared across modules: NFC normalization,
//! Levenshtein distance, and Turkish-specific casing.

use unicode_normalization::{is_nfc, UnicodeNormalization};

/// NFC-normalizes a string, reusing the input when it is already normalized.
pub fn nfc(s: &str) -> String {
    if is_nfc(s) {
        s.to_string()
    } else {
        s.nfc().collect()
    }
}

/// Character-level Levenshtein distance.
pub fn levenshtein(a: &str, b: &str) -> u32 {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    if a.is_empty() {
        return b.len() as u32;
    }
    if b.is_empty() {
        return a.len() as u32;
    }
    let mut prev: Vec<u32> = (0..=b.len() as u32).collect();
    let mut cur = vec![0u32; b.len() + 1];
    for (i, &ca) in a.iter().enumerate() {
        cur[0] = i as u32 + 1;
        for (j, &cb) in b.iter().enumerate() {
            let sub = prev[j] + u32::from(ca != cb);
            cur[j + 1] = sub.min(prev[j + 1] + 1).min(cur[j] + 1);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

/// Levenshtein distance with a cutoff: returns `None` when the distance
/// exceeds `max`. Used by the lexicon search where most comparisons abort
/// after a row or two.
pub fn levenshtein_bounded(a: &str, b: &str, max: u32) -> Option<u32> {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    if a.len().abs_diff(b.len()) as u32 > max {
        return None;
    }
    if a.is_empty() {
        return Some(b.len() as u32);
    }
    if b.is_empty() {
        return Some(a.len() as u32);
    }
    let mut prev: Vec<u32> = (0..=b.len() as u32).collect();
    let mut cur = vec![0u32; b.len() + 1];
    for (i, &ca) in a.iter().enumerate() {
        cur[0] = i as u32 + 1;
        let mut row_min = cur[0];
        for (j, &cb) in b.iter().enumerate() {
            let sub = prev[j] + u32::from(ca != cb);
            cur[j + 1] = sub.min(prev[j + 1] + 1).min(cur[j] + 1);
            row_min = row_min.min(cur[j + 1]);
        }
        if row_min > max {
            return None;
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    if prev[b.len()] <= max {
        Some(prev[b.len()])
    } else {
        None
    }
}

/// Lowercases with the Turkish i-mappings: `I` becomes `ı` and `İ` becomes
/// `i`; everything else follows Unicode lowercasing.
pub fn turkish_lowercase(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            'I' => out.push('ı'),
            'İ' => out.push('i'),
            _ => out.extend(c.to_lowercase()),
        }
    }
    out
}

/// Uppercases the first character, leaving the rest intact. With
/// `turkish` set, `i` maps to `İ` and `ı` maps to `I`.
pub fn capitalize_first(s: &str, turkish: bool) -> String {
    let mut chars = s.chars();
    let first = match chars.next() {
        Some(c) => c,
        None => return String::new(),
    };
    let mut out = String::with_capacity(s.len());
    if turkish && first == 'i' {
        out.push('İ');
    } else if turkish && first == 'ı' {
        out.push('I');
    } else {
        out.extend(first.to_uppercase());
    }
    out.push_str(chars.as_str());
    out
}

/// Lowercases a word, using Turkish mappings when `turkish` is set.
pub fn lowercase(s: &str, turkish: bool) -> String {
    if turkish {
        turkish_lowercase(s)
    } else {
        s.to_lowercase()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn levenshtein_basics() {
        assert_eq!(levenshtein("", ""), 0);
        assert_eq!(levenshtein("abc", "abc"), 0);
        assert_eq!(levenshtein("dha", "daha"), 1);
        assert_eq!(levenshtein("kitten", "sitting"), 3);
        assert_eq!(levenshtein("", "abc"), 3);
    }

    #[test]
    fn levenshtein_handles_multibyte() {
        assert_eq!(levenshtein("canım", "canim"), 1);
        assert_eq!(levenshtein("semesterdayim", "Semesterdayım"), 2);
    }

    #[test]
    fn bounded_matches_full_within_cutoff() {
        let words = ["daha", "dha", "yok", "yokya", "canım", "cnm", ""];
        for a in words {
            for b in words {
                let full = levenshtein(a, b);
                for max in 0..=4 {
                    let got = levenshtein_bounded(a, b, max);
                    if full <= max {
                        assert_eq!(got, Some(full), "{a:?} vs {b:?} max {max}");
                    } else {
                        assert_eq!(got, None, "{a:?} vs {b:?} max {max}");
                    }
                }
            }
        }
    }

    #[test]
    fn turkish_case_mappings() {
        assert_eq!(turkish_lowercase("ISTANBUL"), "ıstanbul");
        assert_eq!(turkish_lowercase("İSTANBUL"), "istanbul");
        assert_eq!(capitalize_first("istanbul", true), "İstanbul");
        assert_eq!(capitalize_first("ırmak", true), "Irmak");
        assert_eq!(capitalize_first("istanbul", false), "Istanbul");
        assert_eq!(capitalize_first("nerdee", false), "Nerdee");
    }
}
