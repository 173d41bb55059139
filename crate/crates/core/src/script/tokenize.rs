//! Whitespace/punctuation tokenizer for corpus ingestion.
//!
//! ZWNJ is word-internal and never splits a token. Spaces always do, so a
//! compound written with a space comes out as two tokens.

use super::normalize::normalize;

const ARABIC_PUNCTUATION: &[char] = &[
    '\u{060C}', // ،
    '\u{060D}', '\u{061B}', // ؛
    '\u{061E}', '\u{061F}', // ؟
    '\u{066A}', // ٪
    '\u{066B}', '\u{066C}', '\u{066D}', '\u{06D4}', // ۔
];

const LATIN1_PUNCTUATION: &[char] = &[
    '\u{00A1}', '\u{00A7}', '\u{00AB}', '\u{00B6}', '\u{00B7}', '\u{00BB}', '\u{00BF}',
];

pub fn is_separator(c: char) -> bool {
    c.is_whitespace()
        || c.is_ascii_punctuation()
        || ARABIC_PUNCTUATION.contains(&c)
        || LATIN1_PUNCTUATION.contains(&c)
        || matches!(c, '\u{2010}'..='\u{2027}' | '\u{2030}'..='\u{205E}')
}

/// A maximal run of token or separator characters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Segment<'a> {
    pub text: &'a str,
    pub is_token: bool,
}

/// Splits already-normalized text into alternating token and separator runs.
/// Concatenating every segment gives back the input.
pub fn segments(text: &str) -> Vec<Segment<'_>> {
    let mut out = Vec::new();
    let mut start = 0;
    let mut current: Option<bool> = None;
    for (idx, c) in text.char_indices() {
        let token = !is_separator(c);
        match current {
            Some(kind) if kind == token => {}
            Some(kind) => {
                out.push(Segment {
                    text: &text[start..idx],
                    is_token: kind,
                });
                start = idx;
                current = Some(token);
            }
            None => current = Some(token),
        }
    }
    if let Some(kind) = current {
        out.push(Segment {
            text: &text[start..],
            is_token: kind,
        });
    }
    out
}

pub fn tokenize(text: &str) -> Vec<String> {
    let normalized = normalize(text);
    segments(&normalized)
        .into_iter()
        .filter(|s| s.is_token)
        .map(|s| s.text.to_string())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn space_splits_a_compound() {
        assert_eq!(tokenize("به هار"), vec!["به", "هار"]);
    }

    #[test]
    fn empty() {
        assert!(tokenize("").is_empty());
        assert!(tokenize("  ،؟ ").is_empty());
    }

    #[test]
    fn trailing_punctuation_is_stripped() {
        let raw = "ده\u{200C}که\u{200C}ون.";
        // reference splitter: drop every character of the separator class
        // from the end of the normalized string
        let reference: String = normalize(raw)
            .trim_end_matches(|c: char| is_separator(c))
            .to_string();
        assert_eq!(tokenize(raw), vec![reference.clone()]);
        assert_eq!(reference, normalize("ده\u{200C}که\u{200C}ون").as_str());
    }

    #[test]
    fn zwnj_is_word_internal() {
        let text = "ب\u{200C}ل";
        assert_eq!(tokenize(text), vec![text.to_string()]);
    }

    #[test]
    fn arabic_punctuation_separates() {
        assert_eq!(tokenize("گرتم،کەوتن؟"), vec!["گرتم", "کەوتن"]);
    }
}
