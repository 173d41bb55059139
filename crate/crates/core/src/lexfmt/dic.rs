use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::fields::{parse_fields, MorphFields};
use super::tags::{is_verb_tag, resolve_pos};
use crate::script::normalize_str;

pub const NEEDS_REVIEW: &str = "# needs_review";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DicError {
    #[error("line {line}: expected a decimal entry count")]
    MalformedHeader { line: usize },
    #[error("line {line}: header declares {declared} entries but {parsed} were found")]
    CountMismatch {
        line: usize,
        declared: usize,
        parsed: usize,
    },
    #[error("line {line}: bad field `{field}`")]
    BadField { line: usize, field: String },
    #[error("line {line}: empty surface form")]
    EmptySurface { line: usize },
}

impl DicError {
    pub fn line(&self) -> usize {
        match self {
            DicError::MalformedHeader { line }
            | DicError::CountMismatch { line, .. }
            | DicError::BadField { line, .. }
            | DicError::EmptySurface { line } => *line,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DicEntry {
    /// Normalized surface; compound parts are stored joined.
    pub surface: String,
    pub flags: BTreeSet<char>,
    /// Raw `po:` value (a tag letter or a name such as `noun`/`verb`).
    pub pos: Option<String>,
    /// `is:` value.
    pub infl_class: Option<String>,
    /// `st:` value.
    pub stem: Option<String>,
    pub compound_parts: Option<Vec<String>>,
    /// Any other fields, kept verbatim.
    pub extra: MorphFields,
    pub needs_review: bool,
}

impl DicEntry {
    pub fn new(surface: &str) -> Self {
        let mut entry = DicEntry::default();
        entry.set_surface(surface);
        entry
    }

    pub fn with_flags(mut self, flags: &str) -> Self {
        self.flags = flags.chars().collect();
        self
    }

    pub fn with_pos(mut self, pos: &str) -> Self {
        self.pos = Some(pos.to_string());
        self
    }

    pub fn with_class(mut self, class: &str) -> Self {
        self.infl_class = Some(class.to_string());
        self
    }

    pub fn with_stem(mut self, stem: &str) -> Self {
        self.stem = Some(normalize_str(stem));
        self
    }

    /// Sets the surface from its written form; hyphens mark compound parts.
    pub fn set_surface(&mut self, written: &str) {
        let written = normalize_str(written);
        if written.contains('-') {
            let parts: Vec<String> = written.split('-').map(str::to_string).collect();
            self.surface = parts.concat();
            self.compound_parts = Some(parts);
        } else {
            self.surface = written;
            self.compound_parts = None;
        }
    }

    /// The surface as written in the file, with compound hyphens.
    pub fn written_form(&self) -> String {
        match &self.compound_parts {
            Some(parts) => parts.join("-"),
            None => self.surface.clone(),
        }
    }

    /// The part-of-speech letter, if the `po:` value resolves.
    pub fn pos_tag(&self) -> Option<char> {
        resolve_pos(self.pos.as_deref()?, self.infl_class.as_deref())
    }

    pub fn is_verb(&self) -> bool {
        self.pos_tag().is_some_and(is_verb_tag)
    }

    pub fn has_flag(&self, flag: char) -> bool {
        self.flags.contains(&flag)
    }

    pub fn to_line(&self) -> String {
        let mut line = self.written_form();
        if !self.flags.is_empty() {
            line.push('/');
            line.extend(self.flags.iter());
        }
        for (key, value) in [
            ("po", &self.pos),
            ("is", &self.infl_class),
            ("st", &self.stem),
        ] {
            if let Some(v) = value {
                line.push(' ');
                line.push_str(key);
                line.push(':');
                line.push_str(v);
            }
        }
        self.extra.write_to(&mut line);
        line
    }

    fn parse_line(raw: &str, line: usize) -> Result<DicEntry, DicError> {
        let mut tokens = raw.split_whitespace();
        let head = tokens.next().ok_or(DicError::EmptySurface { line })?;
        let (written, flags) = match head.split_once('/') {
            Some((w, f)) => (w, f),
            None => (head, ""),
        };
        if written.is_empty() {
            return Err(DicError::EmptySurface { line });
        }
        let mut entry = DicEntry::new(written);
        entry.flags = flags.chars().collect();
        let fields = parse_fields(tokens).map_err(|field| DicError::BadField { line, field })?;
        for (key, value) in fields.0 {
            let slot = match key.as_str() {
                "po" => &mut entry.pos,
                "is" => &mut entry.infl_class,
                "st" => &mut entry.stem,
                _ => {
                    entry.extra.push(key, value);
                    continue;
                }
            };
            if slot.is_some() {
                return Err(DicError::BadField {
                    line,
                    field: format!("{key}:{value}"),
                });
            }
            *slot = Some(value);
        }
        Ok(entry)
    }
}

/// Root entries indexed by normalized surface. Homographs are kept.
#[derive(Debug, Clone, Default)]
pub struct Dictionary {
    entries: Vec<DicEntry>,
    index: HashMap<String, Vec<usize>>,
}

impl PartialEq for Dictionary {
    fn eq(&self, other: &Self) -> bool {
        self.sorted_entries() == other.sorted_entries()
    }
}

impl Eq for Dictionary {}

impl FromIterator<DicEntry> for Dictionary {
    fn from_iter<T: IntoIterator<Item = DicEntry>>(iter: T) -> Self {
        let mut dict = Dictionary::default();
        for entry in iter {
            dict.push(entry);
        }
        dict
    }
}

impl Dictionary {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, entry: DicEntry) {
        self.index
            .entry(entry.surface.clone())
            .or_default()
            .push(self.entries.len());
        self.entries.push(entry);
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[DicEntry] {
        &self.entries
    }

    pub fn iter(&self) -> std::slice::Iter<'_, DicEntry> {
        self.entries.iter()
    }

    /// Exact lookup; callers normalize first.
    pub fn lookup<'a>(&'a self, surface: &str) -> impl Iterator<Item = &'a DicEntry> + 'a {
        self.index
            .get(surface)
            .into_iter()
            .flatten()
            .map(move |&i| &self.entries[i])
    }

    pub fn contains(&self, surface: &str) -> bool {
        self.index.contains_key(surface)
    }

    pub fn sorted_entries(&self) -> Vec<&DicEntry> {
        let mut sorted: Vec<&DicEntry> = self.entries.iter().collect();
        sorted.sort();
        sorted
    }

    /// Verb-category entries without a stem field.
    pub fn missing_stems(&self) -> impl Iterator<Item = &DicEntry> {
        self.entries
            .iter()
            .filter(|e| e.is_verb() && e.stem.is_none())
    }
}

pub fn parse_dic(text: &str) -> Result<Dictionary, DicError> {
    let mut declared: Option<(usize, usize)> = None;
    let mut dict = Dictionary::new();
    let mut review_next = false;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if trimmed.starts_with('#') {
            if trimmed == NEEDS_REVIEW {
                review_next = true;
            }
            continue;
        }
        if declared.is_none() {
            let count = trimmed
                .trim_start_matches('\u{FEFF}')
                .parse::<usize>()
                .map_err(|_| DicError::MalformedHeader { line })?;
            declared = Some((count, line));
            continue;
        }
        let mut entry = DicEntry::parse_line(trimmed, line)?;
        entry.needs_review = std::mem::take(&mut review_next);
        dict.push(entry);
    }
    let (count, header_line) = declared.ok_or(DicError::MalformedHeader { line: 1 })?;
    if count != dict.len() {
        return Err(DicError::CountMismatch {
            line: header_line,
            declared: count,
            parsed: dict.len(),
        });
    }
    Ok(dict)
}

pub fn serialize_dic(dict: &Dictionary) -> String {
    let mut out = format!("{}\n", dict.len());
    for entry in dict.sorted_entries() {
        if entry.needs_review {
            out.push_str(NEEDS_REVIEW);
            out.push('\n');
        }
        out.push_str(&entry.to_line());
        out.push('\n');
    }
    out
}
