use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use super::Engine;
use crate::script::normalize;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SuggestionSource {
    /// Character edits over the TRY alphabet or a REP rewrite.
    Edit,
    /// The query split in two valid words.
    Split,
    /// A baseline word-list entry with its corpus count.
    Frequency(u64),
}

impl SuggestionSource {
    pub fn priority(&self) -> u8 {
        match self {
            SuggestionSource::Edit | SuggestionSource::Frequency(_) => 0,
            SuggestionSource::Split => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Suggestion {
    pub candidate: String,
    pub distance: usize,
    pub source: SuggestionSource,
}

impl Suggestion {
    pub fn rank_key(&self) -> (usize, u8, &str) {
        (self.distance, self.source.priority(), &self.candidate)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuggestOptions {
    pub max_distance: usize,
    pub max_results: usize,
    pub enable_splits: bool,
}

impl Default for SuggestOptions {
    fn default() -> Self {
        SuggestOptions {
            max_distance: 2,
            max_results: 10,
            enable_splits: false,
        }
    }
}

impl Engine {
    /// Ranked corrections for a misspelled word; `[]` for accepted words.
    ///
    /// Candidates are reached breadth-first by single edits (substitution,
    /// deletion, insertion, adjacent transposition over the TRY alphabet)
    /// and REP rewrites, each counting as one step. `distance` is the
    /// number of steps.
    pub fn suggest(&self, word: &str, opts: &SuggestOptions) -> Vec<Suggestion> {
        let word = normalize(word).into_string();
        if word.is_empty() || self.check(&word) {
            return Vec::new();
        }
        let closure = self.closure();
        let mut alphabet: Vec<char> = Vec::new();
        for c in self.rules.try_chars.chars() {
            if !alphabet.contains(&c) {
                alphabet.push(c);
            }
        }
        let reps = &self.rules.replacements;

        let mut hits: HashMap<String, usize> = HashMap::new();
        let mut seen: HashSet<String> = HashSet::from([word.clone()]);
        let mut frontier = vec![word.clone()];
        for depth in 1..=opts.max_distance {
            let last = depth == opts.max_distance;
            let mut next = Vec::new();
            for w in &frontier {
                for_each_neighbour(w, &alphabet, reps, |cand| {
                    if seen.contains(cand) {
                        return;
                    }
                    if closure.contains(cand) && !hits.contains_key(cand) {
                        hits.insert(cand.to_string(), depth);
                    }
                    if !last {
                        seen.insert(cand.to_string());
                        next.push(cand.to_string());
                    }
                });
            }
            frontier = next;
        }

        let mut out: Vec<Suggestion> = hits
            .into_iter()
            .map(|(candidate, distance)| Suggestion {
                candidate,
                distance,
                source: SuggestionSource::Edit,
            })
            .collect();

        if opts.enable_splits && opts.max_distance >= 1 {
            for (b, _) in word.char_indices().skip(1) {
                let (left, right) = word.split_at(b);
                if closure.contains(left) && closure.contains(right) {
                    out.push(Suggestion {
                        candidate: format!("{left} {right}"),
                        distance: 1,
                        source: SuggestionSource::Split,
                    });
                }
            }
        }

        out.sort_by(|a, b| a.rank_key().cmp(&b.rank_key()));
        let mut emitted = HashSet::new();
        out.retain(|s| emitted.insert(s.candidate.clone()));
        out.truncate(opts.max_results);
        out
    }
}

/// Calls `f` with every string one edit away from `word`.
fn for_each_neighbour<F>(word: &str, alphabet: &[char], reps: &[(String, String)], mut f: F)
where
    F: FnMut(&str),
{
    let chars: Vec<char> = word.chars().collect();
    let mut buf = String::with_capacity(word.len() + 4);
    let mut emit = |buf: &mut String, parts: &mut dyn Iterator<Item = char>| {
        buf.clear();
        buf.extend(parts);
        f(buf);
    };

    for i in 0..chars.len() {
        // deletion
        emit(
            &mut buf,
            &mut chars[..i].iter().chain(&chars[i + 1..]).copied(),
        );
        // transposition
        if i + 1 < chars.len() && chars[i] != chars[i + 1] {
            emit(
                &mut buf,
                &mut chars[..i]
                    .iter()
                    .chain([&chars[i + 1], &chars[i]])
                    .chain(&chars[i + 2..])
                    .copied(),
            );
        }
        // substitution
        for &c in alphabet {
            if c != chars[i] {
                emit(
                    &mut buf,
                    &mut chars[..i]
                        .iter()
                        .copied()
                        .chain(std::iter::once(c))
                        .chain(chars[i + 1..].iter().copied()),
                );
            }
        }
    }
    // insertion
    for i in 0..=chars.len() {
        for &c in alphabet {
            emit(
                &mut buf,
                &mut chars[..i]
                    .iter()
                    .copied()
                    .chain(std::iter::once(c))
                    .chain(chars[i..].iter().copied()),
            );
        }
    }
    for (from, to) in reps {
        if from.is_empty() {
            continue;
        }
        for (at, _) in word.match_indices(from.as_str()) {
            buf.clear();
            buf.push_str(&word[..at]);
            buf.push_str(to);
            buf.push_str(&word[at + from.len()..]);
            f(&buf);
        }
    }
}
