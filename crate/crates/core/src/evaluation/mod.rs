//! Spell-checking and morphological-analysis evaluation.

pub mod published;
mod report;
mod testset;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::engine::Engine;
use crate::lexfmt::tags::is_verb_tag;
use crate::script::{normalize, normalize_str, tokenize};

pub use report::{render_report, render_rows, render_spell_table, Report, ReportFormat, UNDEFINED};
pub use testset::{
    drop_spaced, parse_morph_tests, parse_spell_tests, serialize_spell_tests, GoldLabel,
    MorphTestCase, SpellTestCase, TestSetError,
};

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum EvalError {
    #[error("the test set has no gold-incorrect cases")]
    NoIncorrectCases,
    #[error("the test set is empty")]
    EmptyTestSet,
}

/// An exact ratio; equality is by value.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Fraction {
    pub num: u64,
    pub den: u64,
}

impl Fraction {
    /// `None` when the denominator is zero.
    pub fn new(num: u64, den: u64) -> Option<Self> {
        (den > 0).then_some(Fraction { num, den })
    }

    pub fn value(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    pub fn percent(&self) -> f64 {
        100.0 * self.value()
    }
}

impl PartialEq for Fraction {
    fn eq(&self, other: &Self) -> bool {
        u128::from(self.num) * u128::from(other.den) == u128::from(other.num) * u128::from(self.den)
    }
}

impl Eq for Fraction {}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (u128::from(self.num) * u128::from(other.den))
            .cmp(&(u128::from(other.num) * u128::from(self.den)))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    TruePositive,
    FalsePositive,
    TrueNegative,
    FalseNegative,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfusionCounts {
    pub tp: u64,
    pub fp: u64,
    pub tn: u64,
    #[serde(rename = "fn")]
    pub fn_: u64,
}

impl ConfusionCounts {
    pub fn new(tp: u64, fp: u64, tn: u64, fn_: u64) -> Self {
        ConfusionCounts { tp, fp, tn, fn_ }
    }

    pub fn total(&self) -> u64 {
        self.tp + self.fp + self.tn + self.fn_
    }

    pub fn record(&mut self, outcome: Outcome) {
        match outcome {
            Outcome::TruePositive => self.tp += 1,
            Outcome::FalsePositive => self.fp += 1,
            Outcome::TrueNegative => self.tn += 1,
            Outcome::FalseNegative => self.fn_ += 1,
        }
    }
}

/// Correct words accepted are true positives and rejected ones false
/// positives; incorrect words rejected are true negatives and accepted ones
/// false negatives. Precision is then tp/(tp+fp) over the correct words.
pub fn classify_case(case: &SpellTestCase, accepted: bool) -> Outcome {
    match (case.label == GoldLabel::Correct, accepted) {
        (true, true) => Outcome::TruePositive,
        (true, false) => Outcome::FalsePositive,
        (false, false) => Outcome::TrueNegative,
        (false, true) => Outcome::FalseNegative,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metrics {
    pub acc: Option<Fraction>,
    pub precision: Option<Fraction>,
    pub recall: Option<Fraction>,
    pub f1: Option<Fraction>,
}

/// Undefined components (zero denominators) are `None`, never zero.
pub fn compute_metrics(c: &ConfusionCounts) -> Metrics {
    let precision = Fraction::new(c.tp, c.tp + c.fp);
    // with no gold-correct cases there is nothing to recall
    let recall = precision.and_then(|_| Fraction::new(c.tp, c.tp + c.fn_));
    // 2pr/(p+r) = 2tp/(2tp+fp+fn); p+r is zero exactly when tp is
    let f1 = match (precision, recall) {
        (Some(_), Some(_)) if c.tp > 0 => Fraction::new(2 * c.tp, 2 * c.tp + c.fp + c.fn_),
        _ => None,
    };
    Metrics {
        acc: Fraction::new(c.tp + c.tn, c.total()),
        precision,
        recall,
        f1,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuggestionHits {
    pub sugg1: Fraction,
    pub sugg3: Fraction,
    pub sugg_all: Fraction,
}

/// Fraction of gold-incorrect cases with a gold correction at rank 1,
/// within the top 3, and anywhere in the list.
pub fn suggestion_hits<F>(
    cases: &[SpellTestCase],
    mut suggester: F,
) -> Result<SuggestionHits, EvalError>
where
    F: FnMut(&str) -> Vec<String>,
{
    let (mut at1, mut at3, mut any, mut total) = (0u64, 0u64, 0u64, 0u64);
    for case in cases.iter().filter(|c| c.label != GoldLabel::Correct) {
        total += 1;
        let suggestions = suggester(&case.input);
        let rank = suggestions
            .iter()
            .position(|s| case.corrections.iter().any(|g| *g == normalize_str(s)));
        if let Some(r) = rank {
            any += 1;
            if r < 3 {
                at3 += 1;
            }
            if r == 0 {
                at1 += 1;
            }
        }
    }
    let frac = |n| Fraction::new(n, total).ok_or(EvalError::NoIncorrectCases);
    Ok(SuggestionHits {
        sugg1: frac(at1)?,
        sugg3: frac(at3)?,
        sugg_all: frac(any)?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpellReport {
    pub system: String,
    pub testset: String,
    pub counts: ConfusionCounts,
    pub metrics: Metrics,
    /// `None` when the test set has no gold-incorrect cases.
    pub suggestions: Option<SuggestionHits>,
}

impl SpellReport {
    pub fn from_counts(system: &str, testset: &str, counts: ConfusionCounts) -> Self {
        SpellReport {
            system: system.to_string(),
            testset: testset.to_string(),
            counts,
            metrics: compute_metrics(&counts),
            suggestions: None,
        }
    }
}

pub fn evaluate_spell<C, S>(
    system: &str,
    testset: &str,
    cases: &[SpellTestCase],
    mut checker: C,
    suggester: S,
) -> SpellReport
where
    C: FnMut(&str) -> bool,
    S: FnMut(&str) -> Vec<String>,
{
    let mut counts = ConfusionCounts::default();
    for case in cases {
        counts.record(classify_case(case, checker(&case.input)));
    }
    let mut report = SpellReport::from_counts(system, testset, counts);
    report.suggestions = suggestion_hits(cases, suggester).ok();
    report
}

/// Accepts an input only if every token of it is accepted.
pub fn accept_all_tokens(input: &str, mut check: impl FnMut(&str) -> bool) -> bool {
    let tokens = tokenize(input);
    !tokens.is_empty() && tokens.iter().all(|t| check(t))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MorphAspect {
    Segmentation,
    Pos,
    Stem,
}

impl std::str::FromStr for MorphAspect {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "segmentation" => Ok(MorphAspect::Segmentation),
            "pos" => Ok(MorphAspect::Pos),
            "stem" => Ok(MorphAspect::Stem),
            other => Err(format!("unknown aspect `{other}`")),
        }
    }
}

impl fmt::Display for MorphAspect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MorphAspect::Segmentation => "segmentation",
            MorphAspect::Pos => "pos",
            MorphAspect::Stem => "stem",
        })
    }
}

/// What an analyzer returns for one analysis.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphPrediction {
    pub prefixes: Vec<String>,
    pub base: String,
    pub suffixes: Vec<String>,
    pub pos: Option<char>,
    pub stem: Option<String>,
}

pub fn engine_predictions(engine: &Engine, word: &str) -> Vec<MorphPrediction> {
    engine
        .analyze(word)
        .into_iter()
        .map(|a| MorphPrediction {
            prefixes: a.prefixes(),
            base: a.base_segment().to_string(),
            suffixes: a.suffixes(),
            pos: a.pos_tag,
            stem: a.stem.map(str::to_string),
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphReport {
    pub aspect: MorphAspect,
    pub correct: u64,
    pub total: u64,
    pub accuracy: Fraction,
}

fn is_verb_case(case: &MorphTestCase) -> bool {
    case.stem.is_some() && case.pos_tags.iter().any(|&t| is_verb_tag(t))
}

/// Accuracy of one aspect. Stemming is scored on verb cases only.
pub fn evaluate_morph<A>(
    cases: &[MorphTestCase],
    mut analyzer: A,
    aspect: MorphAspect,
) -> Result<MorphReport, EvalError>
where
    A: FnMut(&str) -> Vec<MorphPrediction>,
{
    let mut correct = 0;
    let mut total = 0;
    for case in cases {
        if aspect == MorphAspect::Stem && !is_verb_case(case) {
            continue;
        }
        total += 1;
        let predictions = analyzer(&case.word);
        let hit = match aspect {
            MorphAspect::Segmentation => predictions.iter().any(|p| {
                p.prefixes == case.prefixes && p.base == case.base && p.suffixes == case.suffixes
            }),
            MorphAspect::Pos => predictions
                .iter()
                .any(|p| p.pos.is_some_and(|t| case.pos_tags.contains(&t))),
            MorphAspect::Stem => predictions
                .iter()
                .any(|p| p.pos.is_some_and(is_verb_tag) && p.stem.is_some() && p.stem == case.stem),
        };
        correct += u64::from(hit);
    }
    let accuracy = Fraction::new(correct, total).ok_or(EvalError::EmptyTestSet)?;
    Ok(MorphReport {
        aspect,
        correct,
        total,
        accuracy,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverageReport {
    pub analyzed: u64,
    pub total: u64,
    pub coverage: Fraction,
}

/// Share of distinct normalized words with at least one analysis.
pub fn coverage<'w, I, A>(words: I, mut analyzable: A) -> Result<CoverageReport, EvalError>
where
    I: IntoIterator<Item = &'w str>,
    A: FnMut(&str) -> bool,
{
    let distinct: BTreeSet<String> = words
        .into_iter()
        .map(|w| normalize(w.trim()).into_string())
        .filter(|w| !w.is_empty())
        .collect();
    let analyzed = distinct.iter().filter(|w| analyzable(w)).count() as u64;
    let total = distinct.len() as u64;
    let coverage = Fraction::new(analyzed, total).ok_or(EvalError::EmptyTestSet)?;
    Ok(CoverageReport {
        analyzed,
        total,
        coverage,
    })
}
