//! Rule-table transliteration between Kurdish Latin and Sorani Arabic script.
//!
//! The table is a list of `(latin, arabic)` letter correspondences applied
//! longest-match-first. Two pieces of Sorani orthography sit on top of it:
//!
//! * a vowel that starts a syllable (word-initially or after another vowel)
//!   is written on a hamza seat `ئ`;
//! * the short vowel `i` is not written at all. Reading Arabic script back,
//!   it is restored wherever the consonant sequence would otherwise be an
//!   impossible Sorani syllable: a word-initial cluster (other than a
//!   consonant plus glide), a medial run of three or more consonants, or a
//!   word-final cluster that is not a sonorant/fricative followed by a stop.
//!
//! `و` and `ی` double as vowels (`u`, `î`) and glides (`w`, `y`); next to a
//! vowel they are read as the glide.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use thiserror::Error;
use unicode_normalization::UnicodeNormalization;

use super::normalize::normalize;

pub const HAMZA_SEAT: char = '\u{0626}';

const DEFAULT_TABLE: &str = include_str!("../../data/translit.tsv");

const LATIN_VOWELS: &[char] = &['a', 'e', 'ê', 'i', 'î', 'o', 'u', 'û'];
const GLIDES: &[&str] = &["w", "y"];
const CODA_FIRST: &[&str] = &[
    "r", "ř", "l", "ł", "n", "m", "w", "y", "s", "ş", "x", "f", "z", "ẍ",
];
const CODA_SECOND: &[&str] = &["t", "d", "k", "g", "q"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    LatinToArabic,
    ArabicToLatin,
}

impl FromStr for Direction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "latin-to-arabic" | "l2a" | "latin2arabic" => Ok(Direction::LatinToArabic),
            "arabic-to-latin" | "a2l" | "arabic2latin" => Ok(Direction::ArabicToLatin),
            other => Err(format!(
                "unknown direction `{other}` (expected latin-to-arabic or arabic-to-latin)"
            )),
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::LatinToArabic => "latin-to-arabic",
            Direction::ArabicToLatin => "arabic-to-latin",
        })
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TableError {
    #[error("line {line}: expected `latin<TAB>arabic`")]
    Malformed { line: usize },
    #[error("line {line}: empty Latin pattern")]
    EmptyLatin { line: usize },
}

#[derive(Debug, Clone)]
struct Readings {
    first: String,
    vowel: Option<String>,
    consonant: Option<String>,
}

impl Readings {
    fn is_ambiguous(&self) -> bool {
        self.vowel.is_some() && self.consonant.is_some()
    }

    fn only_vowel(&self) -> bool {
        self.vowel.is_some() && self.consonant.is_none()
    }
}

#[derive(Debug, Clone)]
pub struct TransliterationTable {
    pairs: Vec<(String, String)>,
    forward: Vec<(Vec<char>, String, bool)>,
    reverse: Vec<(Vec<char>, Readings)>,
    hidden_vowel: Option<String>,
}

impl PartialEq for TransliterationTable {
    fn eq(&self, other: &Self) -> bool {
        self.pairs == other.pairs
    }
}

impl TransliterationTable {
    pub fn new(pairs: Vec<(String, String)>) -> Self {
        let mut forward: Vec<(Vec<char>, String, bool)> = pairs
            .iter()
            .map(|(latin, arabic)| {
                (
                    latin.chars().collect(),
                    arabic.clone(),
                    is_vowel_pattern(latin),
                )
            })
            .collect();
        // stable: among equal lengths the earlier rule wins
        forward.sort_by_key(|(latin, _, _)| std::cmp::Reverse(latin.len()));

        let mut reverse: Vec<(Vec<char>, Readings)> = Vec::new();
        let mut hidden_vowel = None;
        for (latin, arabic) in &pairs {
            if arabic.is_empty() {
                hidden_vowel.get_or_insert_with(|| latin.clone());
                continue;
            }
            let key: Vec<char> = arabic.chars().collect();
            let vowel = is_vowel_pattern(latin);
            match reverse.iter_mut().find(|(k, _)| *k == key) {
                Some((_, readings)) => {
                    let slot = if vowel {
                        &mut readings.vowel
                    } else {
                        &mut readings.consonant
                    };
                    slot.get_or_insert_with(|| latin.clone());
                }
                None => reverse.push((
                    key,
                    Readings {
                        first: latin.clone(),
                        vowel: vowel.then(|| latin.clone()),
                        consonant: (!vowel).then(|| latin.clone()),
                    },
                )),
            }
        }
        reverse.sort_by_key(|(arabic, _)| std::cmp::Reverse(arabic.len()));

        TransliterationTable {
            pairs,
            forward,
            reverse,
            hidden_vowel,
        }
    }

    /// Parses the two-column, tab-separated table format.
    pub fn parse(text: &str) -> Result<Self, TableError> {
        let mut pairs = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            if raw.trim().is_empty() || raw.trim_start().starts_with('#') {
                continue;
            }
            let (latin, arabic) = raw.split_once('\t').ok_or(TableError::Malformed { line })?;
            if arabic.contains('\t') {
                return Err(TableError::Malformed { line });
            }
            let latin: String = latin.trim().nfc().collect();
            if latin.is_empty() {
                return Err(TableError::EmptyLatin { line });
            }
            pairs.push((latin, normalize(arabic.trim()).into_string()));
        }
        Ok(Self::new(pairs))
    }

    /// The shipped Hawar-style Sorani table.
    pub fn sorani() -> &'static TransliterationTable {
        static TABLE: OnceLock<TransliterationTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            TransliterationTable::parse(DEFAULT_TABLE)
                .expect("shipped transliteration table parses")
        })
    }

    pub fn pairs(&self) -> &[(String, String)] {
        &self.pairs
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for (latin, arabic) in &self.pairs {
            out.push_str(latin);
            out.push('\t');
            out.push_str(arabic);
            out.push('\n');
        }
        out
    }

    pub fn transliterate(&self, text: &str, direction: Direction) -> String {
        match direction {
            Direction::LatinToArabic => self.to_arabic(text),
            Direction::ArabicToLatin => self.to_latin(text),
        }
    }

    fn to_arabic(&self, text: &str) -> String {
        let chars: Vec<char> = text.nfc().flat_map(char::to_lowercase).collect();
        let mut out = String::with_capacity(text.len() * 2);
        // None marks a word boundary
        let mut prev_vowel: Option<bool> = None;
        let mut i = 0;
        while i < chars.len() {
            let rest = &chars[i..];
            match self
                .forward
                .iter()
                .find(|(latin, _, _)| rest.starts_with(latin))
            {
                Some((latin, arabic, vowel)) => {
                    if *vowel && prev_vowel != Some(false) {
                        out.push(HAMZA_SEAT);
                    }
                    out.push_str(arabic);
                    prev_vowel = Some(*vowel);
                    i += latin.len();
                }
                None => {
                    out.push(chars[i]);
                    prev_vowel = None;
                    i += 1;
                }
            }
        }
        normalize(&out).into_string()
    }

    fn to_latin(&self, text: &str) -> String {
        let text = normalize(text);
        let chars: Vec<char> = text.chars().collect();
        let mut out = String::with_capacity(text.len());
        let mut word: Vec<Unit> = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            if chars[i] == HAMZA_SEAT {
                word.push(Unit::Seat);
                i += 1;
                continue;
            }
            let rest = &chars[i..];
            match self
                .reverse
                .iter()
                .position(|(arabic, _)| rest.starts_with(arabic))
            {
                Some(idx) => {
                    i += self.reverse[idx].0.len();
                    word.push(Unit::Letter(idx));
                }
                None => {
                    self.flush_word(&mut word, &mut out);
                    out.push(chars[i]);
                    i += 1;
                }
            }
        }
        self.flush_word(&mut word, &mut out);
        out
    }

    fn flush_word(&self, word: &mut Vec<Unit>, out: &mut String) {
        if word.is_empty() {
            return;
        }
        let segments = self.resolve_readings(word);
        match &self.hidden_vowel {
            Some(hidden) => out.push_str(&repair_syllables(&segments, hidden)),
            None => segments.iter().for_each(|s| out.push_str(&s.text)),
        }
        word.clear();
    }

    fn readings(&self, idx: usize) -> &Readings {
        &self.reverse[idx].1
    }

    fn resolve_readings(&self, units: &[Unit]) -> Vec<Segment> {
        let hidden = self.hidden_vowel.clone().unwrap_or_default();
        let mut segments: Vec<Segment> = Vec::with_capacity(units.len());
        let mut force_vowel = false;
        for (k, unit) in units.iter().enumerate() {
            let next = units.get(k + 1);
            match unit {
                Unit::Seat => {
                    let next_can_be_vowel =
                        matches!(next, Some(Unit::Letter(j)) if self.readings(*j).vowel.is_some());
                    if next_can_be_vowel {
                        force_vowel = true;
                    } else {
                        segments.push(Segment {
                            text: hidden.clone(),
                            vowel: true,
                        });
                    }
                }
                Unit::Letter(idx) => {
                    let readings = self.readings(*idx);
                    let segment = if readings.is_ambiguous() {
                        let vowel = readings.vowel.clone().unwrap_or_default();
                        let consonant = readings.consonant.clone().unwrap_or_default();
                        let prev_vowel = segments.last().is_some_and(|s| s.vowel);
                        let next_vowel =
                            matches!(next, Some(Unit::Letter(j)) if self.readings(*j).only_vowel());
                        if !force_vowel && (prev_vowel || next_vowel) {
                            Segment {
                                text: consonant,
                                vowel: false,
                            }
                        } else {
                            Segment {
                                text: vowel,
                                vowel: true,
                            }
                        }
                    } else {
                        Segment {
                            vowel: is_vowel_pattern(&readings.first),
                            text: readings.first.clone(),
                        }
                    };
                    force_vowel = false;
                    segments.push(segment);
                }
            }
        }
        segments
    }
}

/// Transliterates with the shipped Sorani table.
pub fn transliterate(text: &str, direction: Direction) -> String {
    TransliterationTable::sorani().transliterate(text, direction)
}

#[derive(Debug, Clone, Copy)]
enum Unit {
    Seat,
    Letter(usize),
}

#[derive(Debug, Clone)]
struct Segment {
    text: String,
    vowel: bool,
}

fn is_vowel_pattern(latin: &str) -> bool {
    !latin.is_empty() && latin.chars().all(|c| LATIN_VOWELS.contains(&c))
}

fn is_glide(segment: &Segment) -> bool {
    GLIDES.contains(&segment.text.as_str())
}

fn valid_coda(first: &Segment, second: &Segment) -> bool {
    CODA_FIRST.contains(&first.text.as_str()) && CODA_SECOND.contains(&second.text.as_str())
}

fn repair_syllables(segments: &[Segment], hidden: &str) -> String {
    let mut out = String::new();
    if segments.is_empty() {
        return out;
    }
    let vowels: Vec<usize> = segments
        .iter()
        .enumerate()
        .filter(|(_, s)| s.vowel)
        .map(|(i, _)| i)
        .collect();
    let Some(&first_vowel) = vowels.first() else {
        out.push_str(&segments[0].text);
        out.push_str(hidden);
        emit_final(&segments[1..], hidden, &mut out);
        return out;
    };
    emit_initial(&segments[..first_vowel], hidden, &mut out);
    for (k, &v) in vowels.iter().enumerate() {
        out.push_str(&segments[v].text);
        match vowels.get(k + 1) {
            Some(&next) => emit_medial(&segments[v + 1..next], hidden, &mut out),
            None => emit_final(&segments[v + 1..], hidden, &mut out),
        }
    }
    out
}

fn push_all(run: &[Segment], out: &mut String) {
    run.iter().for_each(|s| out.push_str(&s.text));
}

fn emit_initial(run: &[Segment], hidden: &str, out: &mut String) {
    if run.len() <= 1 || (run.len() == 2 && is_glide(&run[1])) {
        push_all(run, out);
        return;
    }
    out.push_str(&run[0].text);
    out.push_str(hidden);
    emit_medial(&run[1..], hidden, out);
}

fn emit_medial(run: &[Segment], hidden: &str, out: &mut String) {
    let n = run.len();
    if n <= 2 {
        push_all(run, out);
        return;
    }
    let onset_len = if is_glide(&run[n - 1]) { 2 } else { 1 };
    out.push_str(&run[0].text);
    let middle = &run[1..n - onset_len];
    let mut rest = middle;
    if middle.len() % 2 == 1 {
        out.push_str(hidden);
        out.push_str(&middle[0].text);
        rest = &middle[1..];
    }
    for pair in rest.chunks(2) {
        out.push_str(&pair[0].text);
        out.push_str(hidden);
        out.push_str(&pair[1].text);
    }
    push_all(&run[n - onset_len..], out);
}

fn emit_final(run: &[Segment], hidden: &str, out: &mut String) {
    if run.is_empty() {
        return;
    }
    let coda = if run.len() >= 2 && valid_coda(&run[0], &run[1]) {
        2
    } else {
        1
    };
    push_all(&run[..coda], out);
    for segment in &run[coda..] {
        out.push_str(hidden);
        out.push_str(&segment.text);
    }
}
