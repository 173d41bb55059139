//! Published full-scale figures. They need the complete lexicon, rule set,
//! corpora and test sets, which are not distributed, so they are reference
//! values for reports and never pass/fail targets.

use super::ConfusionCounts;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PublishedRow {
    pub system: &'static str,
    pub testset: &'static str,
    pub counts: Option<ConfusionCounts>,
    pub acc_percent: Option<f64>,
    pub precision: Option<f64>,
    pub recall: Option<f64>,
    pub f1: Option<f64>,
    pub sugg1_percent: f64,
    pub sugg3_percent: f64,
    pub sugg_all_percent: f64,
}

const fn counts(tp: u64, fp: u64, tn: u64, fn_: u64) -> Option<ConfusionCounts> {
    Some(ConfusionCounts { tp, fp, tn, fn_ })
}

pub const SPELL_RESULTS: &[PublishedRow] = &[
    PublishedRow {
        system: "Baseline",
        testset: "T1",
        counts: counts(0, 0, 178, 206),
        acc_percent: None,
        precision: None,
        recall: None,
        f1: None,
        sugg1_percent: 26.82,
        sugg3_percent: 37.76,
        sugg_all_percent: 46.35,
    },
    PublishedRow {
        system: "Baseline",
        testset: "T2",
        counts: counts(597, 251, 105, 441),
        acc_percent: Some(50.36),
        precision: Some(0.70),
        recall: Some(0.58),
        f1: Some(0.63),
        sugg1_percent: 10.87,
        sugg3_percent: 15.76,
        sugg_all_percent: 19.02,
    },
    PublishedRow {
        system: "Baseline",
        testset: "T2\\space",
        counts: counts(597, 251, 105, 210),
        acc_percent: Some(60.36),
        precision: Some(0.70),
        recall: Some(0.74),
        f1: Some(0.72),
        sugg1_percent: 18.69,
        sugg3_percent: 27.10,
        sugg_all_percent: 32.71,
    },
    PublishedRow {
        system: "Amani and Koochari",
        testset: "T1",
        counts: None,
        acc_percent: None,
        precision: Some(0.98),
        recall: Some(0.97),
        f1: Some(0.98),
        sugg1_percent: 68.17,
        sugg3_percent: 73.94,
        sugg_all_percent: 74.94,
    },
    PublishedRow {
        system: "Mahmudi",
        testset: "T1",
        counts: counts(357, 0, 15, 0),
        acc_percent: Some(100.0),
        precision: Some(1.00),
        recall: Some(1.00),
        f1: Some(1.00),
        sugg1_percent: 55.65,
        sugg3_percent: 75.71,
        sugg_all_percent: 93.50,
    },
    PublishedRow {
        system: "Mahmudi",
        testset: "T2",
        counts: counts(539, 108, 753, 0),
        acc_percent: Some(92.29),
        precision: Some(0.83),
        recall: Some(1.00),
        f1: Some(0.91),
        sugg1_percent: 69.57,
        sugg3_percent: 80.33,
        sugg_all_percent: 84.97,
    },
    PublishedRow {
        system: "Engine",
        testset: "T1",
        counts: counts(0, 0, 208, 176),
        acc_percent: None,
        precision: None,
        recall: None,
        f1: None,
        sugg1_percent: 22.92,
        sugg3_percent: 39.84,
        sugg_all_percent: 47.66,
    },
    PublishedRow {
        system: "Engine",
        testset: "T2",
        counts: counts(367, 481, 182, 364),
        acc_percent: Some(39.38),
        precision: Some(0.43),
        recall: Some(0.50),
        f1: Some(0.46),
        sugg1_percent: 18.30,
        sugg3_percent: 26.99,
        sugg_all_percent: 31.52,
    },
    PublishedRow {
        system: "Engine",
        testset: "T2\\space",
        counts: counts(367, 481, 93, 222),
        acc_percent: Some(39.55),
        precision: Some(0.43),
        recall: Some(0.62),
        f1: Some(0.51),
        sugg1_percent: 16.51,
        sugg3_percent: 24.30,
        sugg_all_percent: 27.73,
    },
];

pub const T1_CASES: usize = 385;
pub const T2_CASES: usize = 1_400;

pub const SEGMENTATION_ACCURACY_PERCENT: f64 = 80.14;
pub const POS_ACCURACY_PERCENT: f64 = 86.02;
pub const STEM_ACCURACY_PERCENT: f64 = 63.75;
pub const MORPH_GOLD_CASES: usize = 140;
pub const COVERAGE_PERCENT: f64 = 27.16;
pub const COVERAGE_WORDS: usize = 235_210;

pub const CORPUS_UNIQUE_FORMS: usize = 2_376_405;
pub const BASELINE_ADMITTED: usize = 265_216;

pub const LEXICON_ENTRIES: usize = 23_223;
pub const PREFIX_RULES: usize = 1_812;
pub const SUFFIX_RULES: usize = 2_481;
pub const NOUN_SUFFIX_RULES: usize = 913;
