#![allow(dead_code)]

use ckb_spell::lexfmt::{
    AffixClass, AffixKind, AffixRuleSet, CondAtom, Condition, DicEntry, Dictionary, MorphFields,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const LETTERS: &[char] = &[
    'ا', 'ب', 'پ', 'ت', 'ج', 'چ', 'خ', 'د', 'ر', 'ڕ', 'ز', 'ژ', 'س', 'ش', 'ف', 'ڤ', 'ق', 'ک', 'گ',
    'ل', 'ڵ', 'م', 'ن', 'ه', 'ە', 'و', 'ۆ', 'ی', 'ێ', 'ئ',
];

const FLAGS: &[char] = &['N', 'A', 'V', 'I', 'T', 'B', 'E', 'X', 'v', 'i', 't', 'l'];
const POS: &[&str] = &[
    "N",
    "A",
    "V",
    "Z",
    "noun",
    "adjective",
    "verb",
    "pronoun",
    "W",
];
const CLASSES: &[&str] = &[
    "present_stem",
    "past_stem_transitive_active",
    "infinitive_intransitive",
];
const EXTRA_KEYS: &[&str] = &["ds", "al", "ph", "so"];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn word(rng: &mut impl Rng, min: usize, max: usize) -> String {
    let n = rng.gen_range(min..=max);
    (0..n).map(|_| *LETTERS.choose(rng).unwrap()).collect()
}

pub fn random_entry(rng: &mut impl Rng) -> DicEntry {
    let written = if rng.gen_bool(0.1) {
        format!("{}-{}", word(rng, 1, 4), word(rng, 1, 4))
    } else {
        word(rng, 1, 7)
    };
    let mut entry = DicEntry::new(&written);
    let n_flags = rng.gen_range(0..4);
    entry.flags = (0..n_flags).map(|_| *FLAGS.choose(rng).unwrap()).collect();
    if rng.gen_bool(0.7) {
        entry.pos = Some(POS.choose(rng).unwrap().to_string());
    }
    if rng.gen_bool(0.3) {
        entry.infl_class = Some(CLASSES.choose(rng).unwrap().to_string());
    }
    if rng.gen_bool(0.4) {
        entry.stem = Some(word(rng, 1, 4));
    }
    for _ in 0..rng.gen_range(0..3) {
        let key = *EXTRA_KEYS.choose(rng).unwrap();
        let value = if rng.gen_bool(0.5) {
            word(rng, 1, 4)
        } else {
            "x_y".to_string()
        };
        entry.extra.push(key, value);
    }
    entry.needs_review = rng.gen_bool(0.2);
    entry
}

pub fn random_dictionary(seed: u64) -> Dictionary {
    let mut rng = rng(seed);
    let n = rng.gen_range(0..20);
    (0..n).map(|_| random_entry(&mut rng)).collect()
}

fn random_condition(rng: &mut impl Rng) -> Condition {
    if rng.gen_bool(0.4) {
        return Condition::any();
    }
    let atoms = (0..rng.gen_range(1..3))
        .map(|_| match rng.gen_range(0..3) {
            0 => CondAtom::Any,
            1 => CondAtom::Char(*LETTERS.choose(rng).unwrap()),
            _ => CondAtom::Class {
                negated: rng.gen_bool(0.5),
                chars: word(rng, 1, 4).chars().collect(),
            },
        })
        .collect();
    Condition(atoms)
}

pub fn random_rules(seed: u64) -> AffixRuleSet {
    let mut rng = rng(seed);
    let mut set = AffixRuleSet::new();
    set.try_chars = word(&mut rng, 0, 8);
    for _ in 0..rng.gen_range(0..4) {
        set.replacements
            .push((word(&mut rng, 1, 2), word(&mut rng, 1, 2)));
    }
    let mut flags = FLAGS.to_vec();
    flags.shuffle(&mut rng);
    for &flag in flags.iter().take(rng.gen_range(0..6)) {
        let kind = if rng.gen_bool(0.5) {
            AffixKind::Suffix
        } else {
            AffixKind::Prefix
        };
        let mut class = AffixClass::new(kind, flag, rng.gen_bool(0.5));
        for _ in 0..rng.gen_range(0..5) {
            let strip = if rng.gen_bool(0.7) {
                String::new()
            } else {
                word(&mut rng, 1, 2)
            };
            let append = if rng.gen_bool(0.05) {
                String::new()
            } else {
                word(&mut rng, 1, 4)
            };
            let mut morph = MorphFields::new();
            if rng.gen_bool(0.5) {
                morph.push("is", "definite");
            }
            if rng.gen_bool(0.3) && !append.is_empty() {
                morph.push("sg", append.clone());
            }
            class.add_rule(&strip, &append, random_condition(&mut rng), morph);
        }
        set.classes.insert(flag, class);
    }
    set
}
