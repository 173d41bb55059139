mod common;

use std::collections::BTreeSet;

use ckb_spell::engine::{Engine, SuggestOptions};
use ckb_spell::fixtures::{expand_paradigm_negatives, sample_engine, TABLE1};
use ckb_spell::lexfmt::{AffixKind, AffixRule, CondAtom, DicEntry, Dictionary};
use ckb_spell::script::normalize_str;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

fn atom_matches(atom: &CondAtom, c: char) -> bool {
    match atom {
        CondAtom::Any => true,
        CondAtom::Char(x) => *x == c,
        CondAtom::Class { negated, chars } => chars.contains(&c) != *negated,
    }
}

/// Rule applicability written out from the format's definition.
fn oracle_applies(rule: &AffixRule, base: &str) -> bool {
    let chars: Vec<char> = base.chars().collect();
    let strip: Vec<char> = rule.strip.chars().collect();
    let atoms = &rule.condition.0;
    if chars.len() <= strip.len() || chars.len() < atoms.len() {
        return false;
    }
    match rule.kind {
        AffixKind::Suffix => {
            chars[chars.len() - strip.len()..] == strip[..]
                && atoms
                    .iter()
                    .zip(&chars[chars.len() - atoms.len()..])
                    .all(|(a, &c)| atom_matches(a, c))
        }
        AffixKind::Prefix => {
            chars[..strip.len()] == strip[..]
                && atoms.iter().zip(&chars).all(|(a, &c)| atom_matches(a, c))
        }
    }
}

fn oracle_generate(engine: &Engine, entry: &DicEntry) -> BTreeSet<String> {
    let chars: Vec<char> = entry.surface.chars().collect();
    let rules: Vec<&AffixRule> = entry
        .flags
        .iter()
        .filter_map(|f| engine.rules().class(*f))
        .flat_map(|c| c.rules.iter())
        .filter(|r| oracle_applies(r, &entry.surface))
        .collect();
    let mut forms = BTreeSet::from([entry.surface.clone()]);
    for r in &rules {
        let n = r.strip.chars().count();
        let form = match r.kind {
            AffixKind::Suffix => format!(
                "{}{}",
                chars[..chars.len() - n].iter().collect::<String>(),
                r.append
            ),
            AffixKind::Prefix => format!("{}{}", r.append, chars[n..].iter().collect::<String>()),
        };
        forms.insert(form);
    }
    for p in rules
        .iter()
        .filter(|r| r.kind == AffixKind::Prefix && r.cross_product)
    {
        for s in rules
            .iter()
            .filter(|r| r.kind == AffixKind::Suffix && r.cross_product)
        {
            let (np, ns) = (p.strip.chars().count(), s.strip.chars().count());
            if np + ns < chars.len() {
                let core: String = chars[np..chars.len() - ns].iter().collect();
                forms.insert(format!("{}{core}{}", p.append, s.append));
            }
        }
    }
    forms
}

#[test]
fn check_examples() {
    let e = sample_engine();
    assert!(e.check("گرتم"));
    assert!(e.check("گرتیمینەوە"));
    assert!(!e.check("یمینەوەگرت"));
    assert!(!e.check(""));
}

#[test]
fn analysis_examples() {
    let e = sample_engine();
    let a = e.analyze("ده\u{200C}که\u{200C}ون");
    assert!(a.iter().any(|a| a.prefixes() == ["دە"]
        && a.base_segment() == "کەو"
        && a.suffixes() == ["ن"]
        && a.pos_tag == Some('V')));
    let a = e.analyze("که\u{200C}وتن");
    assert!(a.iter().any(|a| a.prefixes().is_empty()
        && a.base_segment() == "کەوت"
        && a.suffixes() == ["ن"]
        && a.pos_tag == Some('I')));
    let a = e.analyze("گرتیانن");
    let hit = a.iter().find(|a| a.base_segment() == "گرت").unwrap();
    assert_eq!(hit.suffix_rule.unwrap().append, "یانن");
    assert_eq!(hit.suffixes(), ["یان", "ن"]);
}

#[test]
fn stems() {
    let e = sample_engine();
    assert_eq!(e.stem("گرتیمینەوە"), ["گرت"]);
    assert!(e.check("ئاخیوکە"));
    assert!(e.stem("ئاخیوکە").is_empty());
    assert!(e.stem("کتێبەکان").is_empty());
    assert!(e.stem("قفقف").is_empty());
    assert_eq!(e.stem("کەوتن"), ["کەوت"]);
}

#[test]
fn generation() {
    let e = sample_engine();
    let bare = DicEntry::new("کتێب");
    assert_eq!(
        e.generate(&bare).unwrap(),
        BTreeSet::from(["کتێب".to_string()])
    );
    let girt = e.dictionary().lookup("گرت").next().unwrap();
    let forms = e.generate(girt).unwrap();
    for row in &TABLE1 {
        assert!(forms.contains(&row.arabic()), "{}", row.latin);
    }
    let unresolved = DicEntry::new("کتێب").with_flags("Q");
    assert!(e.generate(&unresolved).is_err());
}

#[test]
fn generation_matches_brute_force() {
    let e = sample_engine();
    for entry in e.dictionary().iter() {
        assert_eq!(
            e.generate(entry).unwrap(),
            oracle_generate(e, entry),
            "{}",
            entry.surface
        );
    }
}

#[test]
fn generation_analysis_duality() {
    let e = sample_engine();
    for entry in e.dictionary().iter() {
        for form in e.generate(entry).unwrap() {
            let analyses = e.analyze(&form);
            assert!(
                analyses.iter().any(|a| a.base == entry),
                "{form} from {}",
                entry.surface
            );
            for a in &analyses {
                assert_eq!(a.reconstruct(), form);
                if let (Some(p), Some(s)) = (a.prefix_rule, a.suffix_rule) {
                    assert!(p.cross_product && s.cross_product);
                }
            }
        }
    }
}

#[test]
fn negatives_are_rejected() {
    let e = sample_engine();
    let negatives = expand_paradigm_negatives(e);
    assert!(negatives.len() >= 20);
    for w in &negatives {
        assert!(!e.check(w), "{w}");
    }
    let row4 = &TABLE1[4];
    let moved: String = row4.suffixes.concat() + row4.base;
    assert!(negatives.contains(&moved));
}

fn fuzz_word(rng: &mut impl Rng, closure: &[&String]) -> String {
    if rng.gen_bool(0.5) {
        let mut chars: Vec<char> = closure.choose(rng).unwrap().chars().collect();
        match rng.gen_range(0..3) {
            0 if chars.len() > 1 => {
                chars.remove(rng.gen_range(0..chars.len()));
            }
            1 => chars.insert(
                rng.gen_range(0..=chars.len()),
                *common::LETTERS.choose(rng).unwrap(),
            ),
            _ => {}
        }
        chars.into_iter().collect()
    } else {
        common::word(rng, 1, 8)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn check_agrees_with_analyze_and_closure(seed in any::<u64>()) {
        let e = sample_engine();
        let mut closure: Vec<&String> = e.closure().iter().collect();
        closure.sort();
        let mut rng = common::rng(seed);
        let w = fuzz_word(&mut rng, &closure);
        prop_assert_eq!(e.check(&w), !e.analyze(&w).is_empty());
        prop_assert_eq!(e.check(&w), e.closure().contains(&normalize_str(&w)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn suggestions_are_valid_sorted_and_unique(seed in any::<u64>()) {
        let e = sample_engine();
        let mut closure: Vec<&String> = e.closure().iter().collect();
        closure.sort();
        let mut rng = common::rng(seed);
        let w = fuzz_word(&mut rng, &closure);
        let opts = SuggestOptions { enable_splits: rng.gen_bool(0.3), ..SuggestOptions::default() };
        let out = e.suggest(&w, &opts);
        if e.check(&w) {
            prop_assert!(out.is_empty());
        }
        prop_assert!(out.len() <= opts.max_results);
        for s in &out {
            prop_assert!(s.candidate.split(' ').all(|part| e.check(part)));
            prop_assert!(s.distance >= 1 && s.distance <= opts.max_distance);
        }
        prop_assert!(out.windows(2).all(|p| p[0].rank_key() < p[1].rank_key()));
        let unique: BTreeSet<&str> = out.iter().map(|s| s.candidate.as_str()).collect();
        prop_assert_eq!(unique.len(), out.len());
        prop_assert_eq!(e.suggest(&w, &opts), out);
    }
}

#[test]
fn suggestion_examples() {
    let e = sample_engine();
    let opts = SuggestOptions::default();
    let s = e.suggest("مرج", &opts);
    assert!(s.iter().take(10).any(|s| s.candidate == "مهرج"));
    assert!(e.suggest("مهرج", &opts).is_empty());
    assert!(e.suggest("گرتیمینەوە", &opts).is_empty());
    let s = e.suggest("دهتواین", &opts);
    let hit = s.iter().find(|s| s.candidate == "دهتوانین").unwrap();
    assert_eq!(hit.distance, 1);
}

#[test]
fn splits_only_when_enabled() {
    let e = sample_engine();
    let off = e.suggest("گرتمکەوتن", &SuggestOptions::default());
    assert!(off.iter().all(|s| !s.candidate.contains(' ')));
    let on = e.suggest(
        "گرتمکەوتن",
        &SuggestOptions {
            enable_splits: true,
            ..SuggestOptions::default()
        },
    );
    assert!(on.iter().any(|s| s.candidate == "گرتم کەوتن"));
}

#[test]
fn unresolved_flags_are_reported_at_load() {
    let dict: Dictionary = [DicEntry::new("ماڵ").with_flags("NQ")]
        .into_iter()
        .collect();
    let e = Engine::new(dict, sample_engine().rules().clone());
    assert_eq!(e.unresolved_flags().len(), 1);
    // the resolvable flag still works
    assert!(e.check("ماڵەکان"));
}
