//! Desk-scale Sorani resources: a sample lexicon and rule set, gold test
//! sets, a toy corpus and recorded label-query responses.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::sync::OnceLock;

use crate::engine::Engine;
use crate::evaluation::{parse_morph_tests, parse_spell_tests, MorphTestCase, SpellTestCase};
use crate::lexfmt::{parse_aff, parse_dic, AffixRuleSet, Dictionary};
use crate::script::{transliterate, Direction};

pub const SAMPLE_AFF: &str = include_str!("../../data/sample.aff");
pub const SAMPLE_DIC: &str = include_str!("../../data/sample.dic");
pub const MORPH_GOLD: &str = include_str!("../../data/morph_gold.tsv");
pub const SPELL_GOLD: &str = include_str!("../../data/spell_gold.tsv");
pub const SPELL_SYNTHETIC: &str = include_str!("../../data/spell_synthetic.tsv");
pub const TOY_CORPUS: &str = include_str!("../../data/toy_corpus.txt");
pub const LATIN_WORDS: &str = include_str!("../../data/latin_words.txt");
pub const WIKIDATA_CITIES: &str = include_str!("../../data/wikidata_q515.json");
pub const WIKIDATA_EMPTY: &str = include_str!("../../data/wikidata_empty.json");

/// Words of the toy corpus that occur at least ten times.
pub const TOY_CORPUS_ADMITTED: usize = 33;

/// The directory holding the files above, for tools that take paths.
pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data")
}

pub fn sample_rules() -> AffixRuleSet {
    parse_aff(SAMPLE_AFF).expect("sample.aff parses")
}

pub fn sample_dictionary() -> Dictionary {
    parse_dic(SAMPLE_DIC).expect("sample.dic parses")
}

pub fn sample_engine() -> &'static Engine {
    static ENGINE: OnceLock<Engine> = OnceLock::new();
    ENGINE.get_or_init(|| Engine::new(sample_dictionary(), sample_rules()))
}

pub fn morph_gold() -> Vec<MorphTestCase> {
    parse_morph_tests(MORPH_GOLD).expect("morph_gold.tsv parses")
}

pub fn spell_gold() -> Vec<SpellTestCase> {
    parse_spell_tests(SPELL_GOLD).expect("spell_gold.tsv parses")
}

pub fn spell_synthetic() -> Vec<SpellTestCase> {
    parse_spell_tests(SPELL_SYNTHETIC).expect("spell_synthetic.tsv parses")
}

pub fn latin_words() -> Vec<&'static str> {
    LATIN_WORDS
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect()
}

/// One inflected form: its Latin spelling and its Arabic-script morphemes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParadigmRow {
    pub latin: &'static str,
    pub gloss: &'static str,
    pub prefixes: &'static [&'static str],
    pub base: &'static str,
    pub suffixes: &'static [&'static str],
}

impl ParadigmRow {
    /// The surface form, transliterated from the Latin spelling.
    pub fn arabic(&self) -> String {
        transliterate(self.latin, Direction::LatinToArabic)
    }

    pub fn morphemes(&self) -> Vec<&'static str> {
        self.prefixes
            .iter()
            .copied()
            .chain(std::iter::once(self.base))
            .chain(self.suffixes.iter().copied())
            .collect()
    }

    pub fn joined(&self) -> String {
        self.morphemes().concat()
    }
}

const fn row(
    latin: &'static str,
    gloss: &'static str,
    prefixes: &'static [&'static str],
    base: &'static str,
    suffixes: &'static [&'static str],
) -> ParadigmRow {
    ParadigmRow {
        latin,
        gloss,
        prefixes,
        base,
        suffixes,
    }
}

/// Placement of the emphasis clitic îş and the agent marker =im around the
/// past stem girt.
pub const TABLE1: [ParadigmRow; 9] = [
    row(
        "girt",
        "past stem of GIRTIN (to take, to get)",
        &[],
        "گرت",
        &[],
    ),
    row("girtim", "I got.", &[], "گرت", &["م"]),
    row("girtîmin", "I got them.", &[], "گرت", &["یم", "ن"]),
    row(
        "girtîmîne",
        "I got them to/with.",
        &[],
        "گرت",
        &["یم", "ین", "ە"],
    ),
    row(
        "girtîmînewe",
        "I got them to/with again.",
        &[],
        "گرت",
        &["یم", "ین", "ەوە"],
    ),
    row(
        "girtîşîmînewe",
        "I got them also to/with again.",
        &[],
        "گرت",
        &["یش", "یم", "ین", "ەوە"],
    ),
    row(
        "neyşîmgirtînewe",
        "I did not get them also to/with again.",
        &["نە", "یش", "یم"],
        "گرت",
        &["ین", "ەوە"],
    ),
    row(
        "neyşîmdegirtînewe",
        "I was not getting them also to/with again.",
        &["نە", "یش", "یم", "دە"],
        "گرت",
        &["ین", "ەوە"],
    ),
    row(
        "dayşîmnedegirtînewe",
        "I was not taking down them also to/with again.",
        &["دا", "یش", "یم", "نە", "دە"],
        "گرت",
        &["ین", "ەوە"],
    ),
];

/// Present and past forms of KEWTIN and GIRTIN.
pub const EXAMPLES: [ParadigmRow; 4] = [
    row("dekewin", "(they) are falling.", &["دە"], "کەو", &["ن"]),
    row("degirin", "(they) are getting.", &["دە"], "گر", &["ن"]),
    row("kewtin", "(they) fell.", &[], "کەوت", &["ن"]),
    row("girtyanin", "(they) got (them).", &[], "گرت", &["یان", "ن"]),
];

fn reorderings(m: &[&str]) -> Vec<Vec<String>> {
    let owned: Vec<String> = m.iter().map(|s| s.to_string()).collect();
    let n = owned.len();
    let mut out = Vec::new();
    for i in 0..n.saturating_sub(1) {
        let mut v = owned.clone();
        v.swap(i, i + 1);
        out.push(v);
    }
    for k in 1..n {
        let mut v = owned.clone();
        v.rotate_left(k);
        out.push(v);
    }
    let mut rev = owned.clone();
    rev.reverse();
    out.push(rev);
    // every contiguous block moved to the front and to the back
    for start in 0..n {
        for end in start + 1..=n {
            let block = &owned[start..end];
            let rest: Vec<String> = owned[..start]
                .iter()
                .chain(&owned[end..])
                .cloned()
                .collect();
            out.push(block.iter().chain(&rest).cloned().collect());
            out.push(rest.iter().chain(block).cloned().collect());
        }
    }
    out
}

/// Reorderings of the paradigm's morphemes that the rules cannot produce,
/// such as the suffix block of a row moved in front of its base. Sorted and
/// free of duplicates; every word is checked against the engine's closure.
pub fn expand_paradigm_negatives(engine: &Engine) -> Vec<String> {
    let closure = engine.closure();
    let originals: BTreeSet<String> = TABLE1.iter().map(ParadigmRow::joined).collect();
    let mut out = BTreeSet::new();
    for row in &TABLE1 {
        let mut candidates = reorderings(&row.morphemes());
        let suffix_first: Vec<&str> = row
            .suffixes
            .iter()
            .chain(row.prefixes)
            .chain([&row.base])
            .copied()
            .collect();
        candidates.push(suffix_first.iter().map(|s| s.to_string()).collect());
        for candidate in candidates {
            let word = candidate.concat();
            if !originals.contains(&word) && !closure.contains(&word) {
                out.insert(word);
            }
        }
    }
    out.into_iter().collect()
}
