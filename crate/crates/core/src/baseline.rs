//! Frequency-list baseline: a corpus word is correct when it occurs at
//! least `min_freq` times; corrections are the admitted words closest by
//! Levenshtein distance.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::engine::{Suggestion, SuggestionSource};
use crate::script::{normalize, normalize_str, tokenize};

pub const DEFAULT_MIN_FREQ: u64 = 10;

const MIN_FREQ_PREFIX: &str = "# min_freq=";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FrequencyError {
    #[error("line {line}: expected `word<TAB>count`")]
    Malformed { line: usize },
    #[error("line {line}: bad count `{value}`")]
    BadCount { line: usize, value: String },
    #[error("line {line}: duplicate word `{word}`")]
    Duplicate { line: usize, word: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrequencyList {
    counts: BTreeMap<String, u64>,
    min_freq: u64,
}

impl Default for FrequencyList {
    fn default() -> Self {
        FrequencyList {
            counts: BTreeMap::new(),
            min_freq: DEFAULT_MIN_FREQ,
        }
    }
}

impl FrequencyList {
    pub fn new(min_freq: u64) -> Self {
        FrequencyList {
            counts: BTreeMap::new(),
            min_freq: min_freq.max(1),
        }
    }

    pub fn min_freq(&self) -> u64 {
        self.min_freq
    }

    pub fn counts(&self) -> &BTreeMap<String, u64> {
        &self.counts
    }

    pub fn count(&self, word: &str) -> u64 {
        self.counts
            .get(normalize(word).as_str())
            .copied()
            .unwrap_or(0)
    }

    pub fn add(&mut self, token: &str, n: u64) {
        let token = normalize_str(token);
        if !token.is_empty() {
            *self.counts.entry(token).or_insert(0) += n;
        }
    }

    /// Adds every token of a raw text.
    pub fn add_text(&mut self, text: &str) {
        for token in tokenize(text) {
            *self.counts.entry(token).or_insert(0) += 1;
        }
    }

    pub fn admitted(&self) -> impl Iterator<Item = (&str, u64)> {
        self.counts
            .iter()
            .filter(|(_, &c)| c >= self.min_freq)
            .map(|(w, &c)| (w.as_str(), c))
    }

    pub fn admitted_len(&self) -> usize {
        self.admitted().count()
    }

    pub fn is_admitted(&self, normalized: &str) -> bool {
        self.counts
            .get(normalized)
            .is_some_and(|&c| c >= self.min_freq)
    }

    /// Two-column `word<TAB>count` text sorted by word, after a
    /// `# min_freq=N` line.
    pub fn to_tsv(&self) -> String {
        let mut out = format!("{MIN_FREQ_PREFIX}{}\n", self.min_freq);
        for (word, count) in &self.counts {
            out.push_str(word);
            out.push('\t');
            out.push_str(&count.to_string());
            out.push('\n');
        }
        out
    }

    pub fn from_tsv(text: &str) -> Result<Self, FrequencyError> {
        let mut list = FrequencyList::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if let Some(value) = trimmed.strip_prefix(MIN_FREQ_PREFIX) {
                list.min_freq = value
                    .trim()
                    .parse()
                    .ok()
                    .filter(|&v| v >= 1)
                    .ok_or_else(|| FrequencyError::BadCount {
                        line,
                        value: value.to_string(),
                    })?;
                continue;
            }
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let (word, count) = trimmed
                .split_once('\t')
                .ok_or(FrequencyError::Malformed { line })?;
            let count: u64 = count.trim().parse().map_err(|_| FrequencyError::BadCount {
                line,
                value: count.to_string(),
            })?;
            let word = normalize_str(word.trim());
            if word.is_empty() {
                return Err(FrequencyError::Malformed { line });
            }
            if list.counts.insert(word.clone(), count).is_some() {
                return Err(FrequencyError::Duplicate { line, word });
            }
        }
        Ok(list)
    }
}

/// Counts normalized tokens from an already tokenized stream.
pub fn build_frequency_list<I, S>(tokens: I, min_freq: u64) -> FrequencyList
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    let mut list = FrequencyList::new(min_freq);
    for token in tokens {
        list.add(token.as_ref(), 1);
    }
    list
}

/// Edit distance over Unicode scalar values. Callers normalize.
pub fn levenshtein(a: &str, b: &str) -> usize {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    let mut cur = vec![0; b.len() + 1];
    for (i, ca) in a.iter().enumerate() {
        cur[0] = i + 1;
        for (j, cb) in b.iter().enumerate() {
            let sub = prev[j] + usize::from(ca != cb);
            cur[j + 1] = sub.min(prev[j + 1] + 1).min(cur[j] + 1);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

pub fn baseline_check(word: &str, list: &FrequencyList) -> bool {
    list.is_admitted(normalize(word).as_str())
}

/// The `k` admitted words nearest to `word`, ties broken by higher count
/// and then lexicographically. Empty when the word is admitted.
pub fn baseline_suggest(word: &str, list: &FrequencyList, k: usize) -> Vec<Suggestion> {
    let word = normalize_str(word);
    if k == 0 || list.is_admitted(&word) {
        return Vec::new();
    }
    let len = word.chars().count();
    // (distance, Reverse(count), word) kept sorted, at most k long
    let mut best: Vec<(usize, std::cmp::Reverse<u64>, &str)> = Vec::with_capacity(k + 1);
    for (candidate, count) in list.admitted() {
        if best.len() == k {
            let worst = best[k - 1].0;
            // the length gap is a lower bound on the distance
            if candidate.chars().count().abs_diff(len) > worst {
                continue;
            }
        }
        let key = (
            levenshtein(&word, candidate),
            std::cmp::Reverse(count),
            candidate,
        );
        let pos = best.partition_point(|b| *b < key);
        if pos < k {
            best.insert(pos, key);
            best.truncate(k);
        }
    }
    best.into_iter()
        .map(
            |(distance, std::cmp::Reverse(count), candidate)| Suggestion {
                candidate: candidate.to_string(),
                distance,
                source: SuggestionSource::Frequency(count),
            },
        )
        .collect()
}
