mod common;

use ckb_spell::baseline::{baseline_check, baseline_suggest, FrequencyList, DEFAULT_MIN_FREQ};
use ckb_spell::engine::SuggestOptions;
use ckb_spell::evaluation::published::SPELL_RESULTS;
use ckb_spell::evaluation::{
    accept_all_tokens, classify_case, compute_metrics, coverage, drop_spaced, engine_predictions,
    evaluate_morph, evaluate_spell, parse_spell_tests, render_spell_table, serialize_spell_tests,
    suggestion_hits, ConfusionCounts, EvalError, Fraction, GoldLabel, MorphAspect, Outcome,
    ReportFormat, SpellTestCase,
};
use ckb_spell::fixtures::{
    morph_gold, sample_engine, spell_gold, spell_synthetic, TABLE1, TOY_CORPUS,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

fn frac(n: u64, d: u64) -> Fraction {
    Fraction::new(n, d).unwrap()
}

fn case(input: &str, label: GoldLabel, corrections: &[&str]) -> SpellTestCase {
    SpellTestCase {
        input: input.to_string(),
        label,
        corrections: corrections.iter().map(|s| s.to_string()).collect(),
    }
}

#[test]
fn published_rows_reproduce() {
    for row in SPELL_RESULTS {
        let Some(counts) = row.counts else { continue };
        let m = compute_metrics(&counts);
        let pairs = [
            (m.acc.map(|f| f.percent()), row.acc_percent, 0.005),
            (m.precision.map(|f| f.value()), row.precision, 0.005),
            (m.recall.map(|f| f.value()), row.recall, 0.005),
            (m.f1.map(|f| f.value()), row.f1, 0.005),
        ];
        for (computed, printed, tol) in pairs {
            if let Some(printed) = printed {
                let computed = computed.unwrap_or_else(|| panic!("{} {}", row.system, row.testset));
                assert!(
                    (computed - printed).abs() <= tol,
                    "{} {}: {computed} vs {printed}",
                    row.system,
                    row.testset
                );
            }
        }
        if counts.tp + counts.fp == 0 {
            assert_eq!(m.precision, None);
            assert_eq!(m.f1, None);
        }
    }
}

#[test]
fn metrics_by_hand() {
    let m = compute_metrics(&ConfusionCounts::new(3, 1, 4, 2));
    assert_eq!(m.acc, Some(frac(7, 10)));
    assert_eq!(m.precision, Some(frac(3, 4)));
    assert_eq!(m.recall, Some(frac(3, 5)));
    assert_eq!(m.f1, Some(frac(2, 3)));
    let empty = compute_metrics(&ConfusionCounts::default());
    assert_eq!(empty.acc, None);
}

#[test]
fn outcomes_partition_the_cases() {
    let cases = spell_gold();
    let e = sample_engine();
    let mut counts = ConfusionCounts::default();
    for c in &cases {
        let accepted = accept_all_tokens(&c.input, |t| e.check(t));
        let outcome = classify_case(c, accepted);
        match c.label {
            GoldLabel::Correct => assert!(matches!(
                outcome,
                Outcome::TruePositive | Outcome::FalsePositive
            )),
            _ => assert!(matches!(
                outcome,
                Outcome::TrueNegative | Outcome::FalseNegative
            )),
        }
        counts.record(outcome);
    }
    assert_eq!(counts.total(), cases.len() as u64);
}

#[test]
fn three_case_example() {
    let cases = [
        case("ا", GoldLabel::Incorrect, &["اا"]),
        case("ب", GoldLabel::Incorrect, &["بب"]),
        case("پ", GoldLabel::Incorrect, &["پپ"]),
        case("ت", GoldLabel::Correct, &[]),
    ];
    let hits = suggestion_hits(&cases, |w| match w {
        "ا" => vec!["اا".into(), "x".into()],
        "ب" => vec!["x".into(), "y".into(), "بب".into()],
        _ => vec!["x".into()],
    })
    .unwrap();
    assert_eq!(
        (hits.sugg1, hits.sugg3, hits.sugg_all),
        (frac(1, 3), frac(2, 3), frac(2, 3))
    );
    assert_eq!(
        suggestion_hits(&cases[3..], |_| Vec::new()).unwrap_err(),
        EvalError::NoIncorrectCases
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn suggestion_rates_are_monotone(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let vocab: Vec<String> = (0..6).map(|_| common::word(&mut rng, 1, 3)).collect();
        let n = rng.gen_range(1..12);
        let cases: Vec<SpellTestCase> = (0..n)
            .map(|_| {
                let gold = vocab.choose(&mut rng).unwrap();
                case(&common::word(&mut rng, 1, 3), GoldLabel::Incorrect, &[gold])
            })
            .collect();
        let hits = suggestion_hits(&cases, |_| {
            let k = rng.gen_range(0..6);
            vocab.choose_multiple(&mut rng, k).cloned().collect()
        })
        .unwrap();
        prop_assert!(hits.sugg1 <= hits.sugg3);
        prop_assert!(hits.sugg3 <= hits.sugg_all);
        prop_assert!(hits.sugg_all <= frac(1, 1));
    }
}

#[test]
fn engine_on_gold_sets() {
    let e = sample_engine();
    let opts = SuggestOptions {
        enable_splits: true,
        ..SuggestOptions::default()
    };
    let suggester = |w: &str| {
        e.suggest(w, &opts)
            .into_iter()
            .map(|s| s.candidate)
            .collect::<Vec<_>>()
    };
    let gold = evaluate_spell(
        "engine",
        "gold",
        &spell_gold(),
        |w| accept_all_tokens(w, |t| e.check(t)),
        suggester,
    );
    assert_eq!(gold.counts, ConfusionCounts::new(6, 0, 7, 1));
    let hits = gold.suggestions.unwrap();
    assert!(hits.sugg1 <= hits.sugg3 && hits.sugg3 <= hits.sugg_all);
    assert_eq!(hits.sugg_all, frac(7, 8));

    let synthetic = evaluate_spell(
        "engine",
        "synthetic",
        &spell_synthetic(),
        |w| e.check(w),
        suggester,
    );
    assert_eq!(synthetic.counts, ConfusionCounts::new(1, 1, 1, 1));
    let half = Some(frac(1, 2));
    assert_eq!(
        (
            synthetic.metrics.acc,
            synthetic.metrics.precision,
            synthetic.metrics.recall
        ),
        (half, half, half)
    );
    assert_eq!(synthetic.suggestions.unwrap().sugg1, frac(1, 2));
}

#[test]
fn baseline_on_gold_sets() {
    let mut list = FrequencyList::new(DEFAULT_MIN_FREQ);
    list.add_text(TOY_CORPUS);
    let suggester = |w: &str| {
        baseline_suggest(w, &list, 10)
            .into_iter()
            .map(|s| s.candidate)
            .collect::<Vec<_>>()
    };
    let check = |w: &str| accept_all_tokens(w, |t| baseline_check(t, &list));
    let gold = evaluate_spell("baseline", "gold", &spell_gold(), check, suggester);
    assert_eq!(gold.counts, ConfusionCounts::new(5, 1, 8, 0));
    let synthetic = evaluate_spell(
        "baseline",
        "synthetic",
        &spell_synthetic(),
        check,
        suggester,
    );
    assert_eq!(synthetic.counts, ConfusionCounts::new(1, 1, 2, 0));
}

#[test]
fn spaced_cases_can_be_dropped() {
    let cases = spell_gold();
    let kept = drop_spaced(&cases);
    let spaced = cases
        .iter()
        .filter(|c| c.label == GoldLabel::IncorrectSpaced)
        .count();
    assert!(spaced > 0);
    assert_eq!(kept.len() + spaced, cases.len());
    assert!(kept.iter().all(|c| c.label != GoldLabel::IncorrectSpaced));
    assert_eq!(
        parse_spell_tests(&serialize_spell_tests(&cases)).unwrap(),
        cases
    );
}

#[test]
fn morph_gold_is_fully_analyzed() {
    let e = sample_engine();
    let gold = morph_gold();
    for aspect in [
        MorphAspect::Segmentation,
        MorphAspect::Pos,
        MorphAspect::Stem,
    ] {
        let report = evaluate_morph(&gold, |w| engine_predictions(e, w), aspect).unwrap();
        assert_eq!(report.accuracy, frac(1, 1), "{aspect}");
    }
    let stem = evaluate_morph(&gold, |w| engine_predictions(e, w), MorphAspect::Stem).unwrap();
    assert!(stem.total < gold.len() as u64);
    assert_eq!(
        evaluate_morph(&[], |_| Vec::new(), MorphAspect::Pos).unwrap_err(),
        EvalError::EmptyTestSet
    );
}

#[test]
fn coverage_of_the_paradigm_plus_junk() {
    let e = sample_engine();
    let junk = "قژقژپ";
    assert!(!e.closure().contains(junk));
    let mut words: Vec<String> = TABLE1.iter().map(|r| r.arabic()).collect();
    words.push(junk.to_string());
    let report = coverage(words.iter().map(String::as_str), |w| {
        !e.analyze(w).is_empty()
    })
    .unwrap();
    assert_eq!((report.analyzed, report.total), (9, 10));
    assert_eq!(report.coverage, frac(9, 10));
    // repeats count once
    let doubled = words.iter().chain(&words).map(String::as_str);
    assert_eq!(
        coverage(doubled, |w| !e.analyze(w).is_empty())
            .unwrap()
            .coverage,
        frac(9, 10)
    );
}

#[test]
fn reports_render() {
    let e = sample_engine();
    let report = evaluate_spell(
        "engine",
        "synthetic",
        &spell_synthetic(),
        |w| e.check(w),
        |_| Vec::new(),
    );
    let tsv = render_spell_table(std::slice::from_ref(&report), ReportFormat::Tsv);
    let lines: Vec<&str> = tsv.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[1].split('\t').count(), 13);
    assert!(lines[1].starts_with("engine\tsynthetic\t1\t1\t1\t1\t50.00\t0.50\t0.50\t0.50"));
    let json = render_spell_table(&[report], ReportFormat::Json);
    assert!(serde_json::from_str::<serde_json::Value>(&json).is_ok());
}
