//! Minimal CoNLL-U reader: FORM and UPOS columns only.

use super::{CorpusError, Dataset, Sentence, Token};

/// Parses CoNLL-U text into a POS-only dataset (`norm` equals `orig`,
/// UPOS stored as the token's POS tag, `_` meaning untagged). Comment
/// lines, multiword-token ranges (`1-2`), and empty nodes (`1.1`) are
/// skipped; any other non-integer ID is an error.
pub fn parse_conllu(text: &str) -> Result<Dataset, CorpusError> {
    let mut sentences = Vec::new();
    let mut tokens: Vec<Token> = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.trim_end_matches('\r');
        if line.is_empty() {
            if !tokens.is_empty() {
                sentences.push(
                    Sentence::new(std::mem::take(&mut tokens))
                        .map_err(|e| CorpusError::BadToken { line: lineno, reason: e.to_string() })?,
                );
            }
            continue;
        }
        if line.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() < 4 {
            return Err(CorpusError::MissingColumns { line: lineno, found: cols.len() });
        }
        let id = cols[0];
        if is_range_id(id) || is_empty_node_id(id) {
            continue;
        }
        if id.parse::<u64>().is_err() {
            return Err(CorpusError::BadConlluId { line: lineno, id: id.to_string() });
        }
        let form = cols[1];
        if form.is_empty() {
            return Err(CorpusError::EmptyField { line: lineno, field: "form" });
        }
        // CoNLL-U forms may contain internal spaces; the token model does
        // not, so such forms are stored with NBSP placeholders removed by
        // replacing spaces. They are rare and only feed POS training.
        let safe_form = form.replace(' ', "_");
        let mut token = Token::identity(&safe_form)
            .map_err(|e| CorpusError::BadToken { line: lineno, reason: e.to_string() })?;
        let upos = cols[3];
        if !upos.is_empty() && upos != "_" {
            token = token.with_pos(upos);
        }
        tokens.push(token);
    }
    if !tokens.is_empty() {
        sentences.push(Sentence::new(tokens).map_err(|e| CorpusError::BadToken {
            line: 0,
            reason: e.to_string(),
        })?);
    }
    Ok(Dataset::new(sentences, ("", "")))
}

fn is_range_id(id: &str) -> bool {
    match id.split_once('-') {
        Some((a, b)) => a.parse::<u64>().is_ok() && b.parse::<u64>().is_ok(),
        None => false,
    }
}

fn is_empty_node_id(id: &str) -> bool {
    match id.split_once('.') {
        Some((a, b)) => a.parse::<u64>().is_ok() && b.parse::<u64>().is_ok(),
        None => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_sentence() {
        let d = parse_conllu("1\tmerhaba\t_\tINTJ\t_\t_\t0\troot\t_\t_\n\n").unwrap();
        assert_eq!(d.n_sentences(), 1);
        let t = &d.sentences[0].tokens[0];
        assert_eq!(t.orig, "merhaba");
        assert_eq!(t.pos.as_deref(), Some("INTJ"));
    }

    #[test]
    fn comments_are_ignored() {
        let text = "# text = hi\n# sent_id = 1\n1\thi\t_\tINTJ\t_\t_\t0\troot\t_\t_\n\n";
        let d = parse_conllu(text).unwrap();
        assert_eq!(d.n_tokens(), 1);
    }

    #[test]
    fn range_lines_skipped_parts_kept() {
        let text = "1-2\tvamonos\t_\t_\t_\t_\t_\t_\t_\t_\n\
                    1\tvamos\t_\tVERB\t_\t_\t0\troot\t_\t_\n\
                    2\tnos\t_\tPRON\t_\t_\t1\tobj\t_\t_\n\n";
        let d = parse_conllu(text).unwrap();
        assert_eq!(d.n_tokens(), 2);
        assert_eq!(d.sentences[0].tokens[0].orig, "vamos");
        assert_eq!(d.sentences[0].tokens[1].orig, "nos");
    }

    #[test]
    fn empty_nodes_skipped() {
        let text = "1\ta\t_\tNOUN\t_\t_\t0\troot\t_\t_\n\
                    1.1\tghost\t_\tVERB\t_\t_\t_\t_\t_\t_\n\
                    2\tb\t_\tNOUN\t_\t_\t1\tdep\t_\t_\n\n";
        let d = parse_conllu(text).unwrap();
        assert_eq!(d.n_tokens(), 2);
    }

    #[test]
    fn bad_id_is_an_error() {
        let err = parse_conllu("x\ta\t_\tNOUN\t_\t_\t_\t_\t_\t_\n").unwrap_err();
        assert!(matches!(err, CorpusError::BadConlluId { line: 1, .. }));
    }

    #[test]
    fn missing_columns_is_an_error() {
        let err = parse_conllu("1\ta\t_\n").unwrap_err();
        assert!(matches!(err, CorpusError::MissingColumns { line: 1, found: 3 }));
    }

    #[test]
    fn underscore_upos_means_untagged() {
        let d = parse_conllu("1\ta\t_\t_\t_\t_\t0\troot\t_\t_\n\n").unwrap();
        assert_eq!(d.sentences[0].tokens[0].pos, None);
    }
}
