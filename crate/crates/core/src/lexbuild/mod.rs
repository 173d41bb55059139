//! Lexicon construction: merging word lists, validating annotations and
//! fetching proper-name labels.

mod sparql;

use std::collections::BTreeMap;
use std::fmt;

use crate::lexfmt::tags::{is_verb_tag, resolve_pos, POS_TAGS};
use crate::lexfmt::{DicEntry, Dictionary};
use crate::script::{is_normalized, transliterate, Direction};

pub use sparql::{
    build_sparql_query, fetch_labels, parse_label_response, FetchError, FixtureTransport,
    HttpTransport, QueryError, Transport, DEFAULT_ENDPOINT, DEFAULT_LIMIT, ENDPOINT_ENV,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TagSchema {
    tags: BTreeMap<char, String>,
}

impl Default for TagSchema {
    fn default() -> Self {
        TagSchema::sorani()
    }
}

impl TagSchema {
    /// The fifteen-letter inventory of the annotated lexicon.
    pub fn sorani() -> Self {
        TagSchema {
            tags: POS_TAGS.iter().map(|(l, n)| (*l, n.to_string())).collect(),
        }
    }

    pub fn tags(&self) -> &BTreeMap<char, String> {
        &self.tags
    }

    pub fn name(&self, letter: char) -> Option<&str> {
        self.tags.get(&letter).map(String::as_str)
    }

    pub fn contains(&self, letter: char) -> bool {
        self.tags.contains_key(&letter)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Diagnostic {
    UnknownTag { value: String },
    MissingStem,
    MalformedCompound { written: String },
    Unnormalized { field: &'static str, value: String },
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::UnknownTag { value } => write!(f, "unknown part-of-speech tag `{value}`"),
            Diagnostic::MissingStem => f.write_str("verb entry without st: field"),
            Diagnostic::MalformedCompound { written } => {
                write!(f, "malformed compound `{written}`")
            }
            Diagnostic::Unnormalized { field, value } => {
                write!(f, "{field} `{value}` is not normalized")
            }
        }
    }
}

/// Problems with one entry; empty when the entry is valid.
pub fn validate_entry(entry: &DicEntry, schema: &TagSchema) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    let tag = entry
        .pos
        .as_deref()
        .map(|po| resolve_pos(po, entry.infl_class.as_deref()).filter(|&t| schema.contains(t)));
    if let (Some(None), Some(po)) = (tag, &entry.pos) {
        out.push(Diagnostic::UnknownTag { value: po.clone() });
    }
    if tag.flatten().is_some_and(is_verb_tag) && entry.stem.is_none() {
        out.push(Diagnostic::MissingStem);
    }
    if let Some(parts) = &entry.compound_parts {
        if parts.len() < 2 || parts.iter().any(String::is_empty) {
            out.push(Diagnostic::MalformedCompound {
                written: entry.written_form(),
            });
        }
    }
    if !is_normalized(&entry.surface) {
        out.push(Diagnostic::Unnormalized {
            field: "surface",
            value: entry.surface.clone(),
        });
    }
    if let Some(stem) = entry.stem.as_deref().filter(|s| !is_normalized(s)) {
        out.push(Diagnostic::Unnormalized {
            field: "stem",
            value: stem.to_string(),
        });
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SourceScript {
    Arabic,
    Latin,
}

impl std::str::FromStr for SourceScript {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "arabic" | "ckb" => Ok(SourceScript::Arabic),
            "latin" => Ok(SourceScript::Latin),
            other => Err(format!("unknown script `{other}` (arabic or latin)")),
        }
    }
}

/// A word list with the annotation every word in it receives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordSource {
    pub words: Vec<String>,
    pub script: SourceScript,
    pub flags: String,
    pub pos: Option<String>,
    pub needs_review: bool,
}

impl WordSource {
    pub fn new(words: Vec<String>, script: SourceScript) -> Self {
        WordSource {
            words,
            script,
            flags: String::new(),
            pos: None,
            needs_review: true,
        }
    }

    pub fn with_flags(mut self, flags: &str) -> Self {
        self.flags = flags.to_string();
        self
    }

    pub fn with_pos(mut self, pos: &str) -> Self {
        self.pos = Some(pos.to_string());
        self
    }

    /// One word per line; `#` comments and blank lines are skipped.
    pub fn parse_words(text: &str) -> Vec<String> {
        text.lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(str::to_string)
            .collect()
    }

    fn entries(&self) -> impl Iterator<Item = DicEntry> + '_ {
        self.words
            .iter()
            .filter(|w| !w.trim().is_empty())
            .map(|word| {
                let written = match self.script {
                    SourceScript::Latin => transliterate(word.trim(), Direction::LatinToArabic),
                    SourceScript::Arabic => word.trim().to_string(),
                };
                let mut entry = DicEntry::new(&written).with_flags(&self.flags);
                entry.pos = self.pos.clone();
                entry.needs_review = self.needs_review;
                entry
            })
    }
}

/// Collapses identical entries and sorts. Entries that differ only in the
/// review mark collapse into one, marked if any copy was.
pub fn merge_dictionaries<'a, I>(dicts: I) -> Dictionary
where
    I: IntoIterator<Item = &'a Dictionary>,
{
    collapse(dicts.into_iter().flat_map(|d| d.iter().cloned()))
}

pub fn merge_sources(sources: &[WordSource]) -> Dictionary {
    collapse(sources.iter().flat_map(WordSource::entries))
}

fn collapse(entries: impl Iterator<Item = DicEntry>) -> Dictionary {
    let mut merged: BTreeMap<DicEntry, bool> = BTreeMap::new();
    for mut entry in entries {
        let review = std::mem::take(&mut entry.needs_review);
        *merged.entry(entry).or_insert(false) |= review;
    }
    merged
        .into_iter()
        .map(|(mut entry, review)| {
            entry.needs_review = review;
            entry
        })
        .collect()
}
