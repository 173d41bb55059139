use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lexfmt::tags::is_pos_letter;
use crate::script::normalize_str;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TestSetError {
    #[error("line {line}: expected {expected} tab-separated columns")]
    Columns { line: usize, expected: &'static str },
    #[error("line {line}: unknown label `{label}`")]
    BadLabel { line: usize, label: String },
    #[error("line {line}: a correct case cannot list corrections")]
    CorrectWithCorrections { line: usize },
    #[error("line {line}: an incorrect_spaced case needs a correction with a space")]
    SpacedWithoutSpace { line: usize },
    #[error("line {line}: unknown part-of-speech tag `{tag}`")]
    BadTag { line: usize, tag: String },
    #[error("line {line}: prefixes, base and suffixes do not spell `{word}`")]
    Unreconstructed { line: usize, word: String },
}

impl TestSetError {
    pub fn line(&self) -> usize {
        match self {
            TestSetError::Columns { line, .. }
            | TestSetError::BadLabel { line, .. }
            | TestSetError::CorrectWithCorrections { line }
            | TestSetError::SpacedWithoutSpace { line }
            | TestSetError::BadTag { line, .. }
            | TestSetError::Unreconstructed { line, .. } => *line,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GoldLabel {
    Correct,
    Incorrect,
    /// Two words merged for lack of a space.
    IncorrectSpaced,
}

impl GoldLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            GoldLabel::Correct => "correct",
            GoldLabel::Incorrect => "incorrect",
            GoldLabel::IncorrectSpaced => "incorrect_spaced",
        }
    }
}

impl fmt::Display for GoldLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for GoldLabel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "correct" => Ok(GoldLabel::Correct),
            "incorrect" => Ok(GoldLabel::Incorrect),
            "incorrect_spaced" => Ok(GoldLabel::IncorrectSpaced),
            other => Err(other.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpellTestCase {
    pub input: String,
    pub label: GoldLabel,
    pub corrections: Vec<String>,
}

/// `input<TAB>label[<TAB>corrections]`, corrections separated by `|`.
pub fn parse_spell_tests(text: &str) -> Result<Vec<SpellTestCase>, TestSetError> {
    let mut cases = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        if raw.trim().is_empty() || raw.trim_start().starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = raw.split('\t').collect();
        if !(2..=3).contains(&cols.len()) {
            return Err(TestSetError::Columns {
                line,
                expected: "2 or 3",
            });
        }
        let label: GoldLabel = cols[1]
            .trim()
            .parse()
            .map_err(|label| TestSetError::BadLabel { line, label })?;
        let corrections: Vec<String> = cols
            .get(2)
            .map(|c| {
                c.split('|')
                    .map(|s| normalize_str(s.trim()))
                    .filter(|s| !s.is_empty() && s != "-")
                    .collect()
            })
            .unwrap_or_default();
        match label {
            GoldLabel::Correct if !corrections.is_empty() => {
                return Err(TestSetError::CorrectWithCorrections { line })
            }
            GoldLabel::IncorrectSpaced if !corrections.iter().any(|c| c.contains(' ')) => {
                return Err(TestSetError::SpacedWithoutSpace { line })
            }
            _ => {}
        }
        cases.push(SpellTestCase {
            input: normalize_str(cols[0].trim()),
            label,
            corrections,
        });
    }
    Ok(cases)
}

pub fn serialize_spell_tests(cases: &[SpellTestCase]) -> String {
    let mut out = String::new();
    for case in cases {
        out.push_str(&case.input);
        out.push('\t');
        out.push_str(case.label.as_str());
        if !case.corrections.is_empty() {
            out.push('\t');
            out.push_str(&case.corrections.join("|"));
        }
        out.push('\n');
    }
    out
}

/// The test set without its merged-word cases.
pub fn drop_spaced(cases: &[SpellTestCase]) -> Vec<SpellTestCase> {
    cases
        .iter()
        .filter(|c| c.label != GoldLabel::IncorrectSpaced)
        .cloned()
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphTestCase {
    pub word: String,
    pub lemma: String,
    pub pos_tags: BTreeSet<char>,
    pub stem: Option<String>,
    pub base: String,
    pub prefixes: Vec<String>,
    pub suffixes: Vec<String>,
    pub note: String,
}

fn optional(col: &str) -> Option<String> {
    let col = col.trim();
    (!col.is_empty() && col != "-").then(|| normalize_str(col))
}

fn morphemes(col: &str) -> Vec<String> {
    optional(col)
        .map(|c| {
            c.split('+')
                .filter(|s| !s.is_empty())
                .map(str::to_string)
                .collect()
        })
        .unwrap_or_default()
}

/// `word lemma pos stem base prefixes suffixes [note]`, tab-separated.
/// `pos` is a comma-separated list of tag letters; `-` marks an empty
/// column; morphemes are joined with `+`.
pub fn parse_morph_tests(text: &str) -> Result<Vec<MorphTestCase>, TestSetError> {
    let mut cases = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        if raw.trim().is_empty() || raw.trim_start().starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = raw.split('\t').collect();
        if !(7..=8).contains(&cols.len()) {
            return Err(TestSetError::Columns {
                line,
                expected: "7 or 8",
            });
        }
        let mut pos_tags = BTreeSet::new();
        for tag in cols[2]
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty() && *t != "-")
        {
            let mut chars = tag.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) if is_pos_letter(c) => {
                    pos_tags.insert(c);
                }
                _ => {
                    return Err(TestSetError::BadTag {
                        line,
                        tag: tag.to_string(),
                    })
                }
            }
        }
        let case = MorphTestCase {
            word: normalize_str(cols[0].trim()),
            lemma: optional(cols[1]).unwrap_or_default(),
            pos_tags,
            stem: optional(cols[3]),
            base: optional(cols[4]).unwrap_or_default(),
            prefixes: morphemes(cols[5]),
            suffixes: morphemes(cols[6]),
            note: cols
                .get(7)
                .map(|n| n.trim().to_string())
                .unwrap_or_default(),
        };
        let spelled = format!(
            "{}{}{}",
            case.prefixes.concat(),
            case.base,
            case.suffixes.concat()
        );
        if spelled != case.word {
            return Err(TestSetError::Unreconstructed {
                line,
                word: case.word,
            });
        }
        cases.push(case);
    }
    Ok(cases)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spell_rows() {
        let text = "# c\nگرتم\tcorrect\nمرج\tincorrect\tمهرج\nتهنیا\tincorrect\tتهنها|تەنها\n";
        let cases = parse_spell_tests(text).unwrap();
        assert_eq!(cases.len(), 3);
        assert_eq!(cases[2].corrections.len(), 2);
        assert_eq!(
            parse_spell_tests(&serialize_spell_tests(&cases)).unwrap(),
            cases
        );
    }

    #[test]
    fn spell_invariants() {
        assert_eq!(
            parse_spell_tests("a\tcorrect\tb\n").unwrap_err(),
            TestSetError::CorrectWithCorrections { line: 1 }
        );
        assert_eq!(
            parse_spell_tests("ab\tincorrect_spaced\tab\n").unwrap_err(),
            TestSetError::SpacedWithoutSpace { line: 1 }
        );
        assert!(matches!(
            parse_spell_tests("\n\na\twrong\n").unwrap_err(),
            TestSetError::BadLabel { line: 3, .. }
        ));
    }

    #[test]
    fn drop_spaced_only_drops_spaced() {
        let cases =
            parse_spell_tests("ab\tincorrect_spaced\ta b\nc\tcorrect\nd\tincorrect\te\n").unwrap();
        let kept = drop_spaced(&cases);
        assert_eq!(kept.len(), 2);
        assert!(kept.iter().all(|c| c.label != GoldLabel::IncorrectSpaced));
    }

    #[test]
    fn morph_rows() {
        let text = "دەکەون\tکەوتن\tV\tکەو\tکەو\tدە\tن\tfall\n";
        let cases = parse_morph_tests(text).unwrap();
        assert_eq!(cases[0].prefixes, vec!["دە"]);
        assert_eq!(cases[0].suffixes, vec!["ن"]);
        assert_eq!(cases[0].stem.as_deref(), Some("کەو"));
        assert_eq!(
            parse_morph_tests("دەکەون\tکەوتن\tV\t-\tکەو\t-\tن\n").unwrap_err(),
            TestSetError::Unreconstructed {
                line: 1,
                word: "دەکەون".into()
            }
        );
        assert!(matches!(
            parse_morph_tests("a\ta\tQ\t-\ta\t-\t-\n").unwrap_err(),
            TestSetError::BadTag { .. }
        ));
    }
}
