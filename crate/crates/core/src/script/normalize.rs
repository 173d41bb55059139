//! Codepoint-stable normalization for Sorani Arabic-script text.
//!
//! Dictionary lookups compare strings by codepoint, so every surface form,
//! query and corpus token goes through [`normalize`] first. The pipeline is:
//!
//! 1. compatibility-decompose Arabic presentation forms (U+FB50..U+FDFF,
//!    U+FE70..U+FEFF) into their base letters,
//! 2. apply the Kurdish character policy ([`SUBSTITUTIONS`]) and drop tatweel,
//! 3. rewrite heh + ZWNJ as the Kurdish vowel letter ae (U+06D5) and keep
//!    any other ZWNJ only between a left-joining letter and a following
//!    Arabic-script letter, where it is orthographic,
//! 4. canonical composition (NFC).
//!
//! The pass is repeated until it reaches a fixed point, which makes the
//! whole function idempotent by construction.

use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};
use unicode_normalization::char::decompose_compatible;
use unicode_normalization::UnicodeNormalization;

pub const ZWNJ: char = '\u{200C}';
pub const HEH: char = '\u{0647}';
pub const AE: char = '\u{06D5}';
const TATWEEL: char = '\u{0640}';

/// The Kurdish character policy: each pair maps a codepoint that must never
/// appear in normalized text onto its Kurdish replacement.
pub const SUBSTITUTIONS: &[(char, char)] = &[
    ('\u{0643}', '\u{06A9}'), // ARABIC KAF -> KEHEH
    ('\u{064A}', '\u{06CC}'), // ARABIC YEH -> FARSI YEH
    ('\u{0649}', '\u{06CC}'), // ALEF MAKSURA -> FARSI YEH
];

/// Text that has been through [`normalize`].
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NormalizedText(String);

impl NormalizedText {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

impl Deref for NormalizedText {
    type Target = str;

    fn deref(&self) -> &str {
        &self.0
    }
}

impl AsRef<str> for NormalizedText {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for NormalizedText {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<NormalizedText> for String {
    fn from(text: NormalizedText) -> String {
        text.0
    }
}

pub fn normalize(text: &str) -> NormalizedText {
    let mut current = single_pass(text);
    // Converges after one or two passes in practice; the bound only guards
    // against a pathological table edit.
    for _ in 0..16 {
        let next = single_pass(&current);
        if next == current {
            break;
        }
        current = next;
    }
    NormalizedText(current)
}

/// Convenience wrapper returning a plain `String`.
pub fn normalize_str(text: &str) -> String {
    normalize(text).into_string()
}

pub fn is_normalized(text: &str) -> bool {
    normalize(text).as_str() == text
}

fn single_pass(text: &str) -> String {
    let mut expanded = Vec::with_capacity(text.len());
    for c in text.chars() {
        if is_presentation_form(c) {
            decompose_compatible(c, |d| expanded.push(d));
        } else {
            expanded.push(c);
        }
    }

    let substituted: Vec<char> = expanded
        .into_iter()
        .filter(|&c| c != TATWEEL)
        .map(substitute)
        .collect();

    let mut out = String::with_capacity(text.len());
    let mut last: Option<char> = None;
    let mut i = 0;
    while i < substituted.len() {
        let c = substituted[i];
        if c == HEH && substituted.get(i + 1) == Some(&ZWNJ) {
            out.push(AE);
            last = Some(AE);
            i += 1;
            while substituted.get(i) == Some(&ZWNJ) {
                i += 1;
            }
            continue;
        }
        if c == ZWNJ {
            while substituted.get(i) == Some(&ZWNJ) {
                i += 1;
            }
            let next = substituted.get(i).copied();
            let keep = last.is_some_and(joins_left) && next.is_some_and(is_arabic_letter);
            if keep {
                out.push(ZWNJ);
                last = Some(ZWNJ);
            }
            continue;
        }
        out.push(c);
        last = Some(c);
        i += 1;
    }

    out.nfc().collect()
}

fn substitute(c: char) -> char {
    SUBSTITUTIONS
        .iter()
        .find(|(from, _)| *from == c)
        .map_or(c, |&(_, to)| to)
}

fn is_presentation_form(c: char) -> bool {
    matches!(c, '\u{FB50}'..='\u{FDFF}' | '\u{FE70}'..='\u{FEFE}')
}

pub fn is_arabic_letter(c: char) -> bool {
    matches!(
        c,
        '\u{0620}'..='\u{064A}'
            | '\u{066E}'..='\u{066F}'
            | '\u{0671}'..='\u{06D3}'
            | '\u{06D5}'
            | '\u{06EE}'..='\u{06EF}'
            | '\u{06FA}'..='\u{06FC}'
            | '\u{06FF}'
            | '\u{0750}'..='\u{077F}'
    )
}

/// Right-joining and non-joining letters: they never connect to the letter
/// that follows them, so a ZWNJ after them has no visual effect.
fn is_right_joining(c: char) -> bool {
    matches!(
        c,
        '\u{0621}'..='\u{0625}'
            | '\u{0627}'
            | '\u{0629}'
            | '\u{062F}'..='\u{0632}'
            | '\u{0648}'
            | '\u{0671}'..='\u{0673}'
            | '\u{0675}'..='\u{0677}'
            | '\u{0688}'..='\u{0699}'
            | '\u{06C0}'
            | '\u{06C3}'..='\u{06CB}'
            | '\u{06CD}'
            | '\u{06CF}'
            | '\u{06D2}'..='\u{06D3}'
            | '\u{06D5}'
            | '\u{06EE}'..='\u{06EF}'
    )
}

fn joins_left(c: char) -> bool {
    is_arabic_letter(c) && !is_right_joining(c)
}
