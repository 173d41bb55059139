//! Affix-stripping checker and analyzer.
//!
//! A word is accepted when it decomposes as at most one prefix rule, a
//! dictionary base and at most one suffix rule. Both affixes may apply only
//! when both classes allow cross products. Conditions are tested against
//! the dictionary base.

mod suggest;

use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::OnceLock;

use thiserror::Error;

use crate::lexfmt::tags::is_verb_tag;
use crate::lexfmt::{AffixKind, AffixRule, AffixRuleSet, DicEntry, Dictionary};
use crate::script::normalize;

pub use suggest::{SuggestOptions, Suggestion, SuggestionSource};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("entry `{surface}` uses flag `{flag}`, which has no affix class")]
    UnresolvedFlag { surface: String, flag: char },
}

/// One decomposition of a surface form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Analysis<'a> {
    pub surface: String,
    pub base: &'a DicEntry,
    pub prefix_rule: Option<&'a AffixRule>,
    pub suffix_rule: Option<&'a AffixRule>,
    pub pos_tag: Option<char>,
    pub stem: Option<&'a str>,
    /// Prefix append, base without strips, suffix append. Empty appends are
    /// omitted, so the concatenation is always the surface.
    pub morphemes: Vec<String>,
}

impl<'a> Analysis<'a> {
    fn new(
        surface: &str,
        base: &'a DicEntry,
        prefix_rule: Option<&'a AffixRule>,
        suffix_rule: Option<&'a AffixRule>,
    ) -> Self {
        let mut morphemes = Vec::with_capacity(3);
        if let Some(p) = prefix_rule.filter(|p| !p.append.is_empty()) {
            morphemes.push(p.append.clone());
        }
        let mut core = base.surface.as_str();
        if let Some(p) = prefix_rule {
            core = &core[p.strip.len()..];
        }
        if let Some(s) = suffix_rule {
            core = &core[..core.len() - s.strip.len()];
        }
        morphemes.push(core.to_string());
        if let Some(s) = suffix_rule.filter(|s| !s.append.is_empty()) {
            morphemes.push(s.append.clone());
        }
        Analysis {
            surface: surface.to_string(),
            base,
            prefix_rule,
            suffix_rule,
            pos_tag: base.pos_tag(),
            stem: base.stem.as_deref(),
            morphemes,
        }
    }

    /// The base as it appears inside the surface (strips removed).
    pub fn base_segment(&self) -> &str {
        let idx = usize::from(self.prefix_rule.is_some_and(|p| !p.append.is_empty()));
        &self.morphemes[idx]
    }

    pub fn prefixes(&self) -> Vec<String> {
        self.prefix_rule
            .map(AffixRule::segments)
            .unwrap_or_default()
    }

    pub fn suffixes(&self) -> Vec<String> {
        self.suffix_rule
            .map(AffixRule::segments)
            .unwrap_or_default()
    }

    /// Re-applies the rules to the base entry.
    pub fn reconstruct(&self) -> String {
        let base = self.base.surface.as_str();
        let start = self.prefix_rule.map_or(0, |p| p.strip.len());
        let end = base.len() - self.suffix_rule.map_or(0, |s| s.strip.len());
        format!(
            "{}{}{}",
            self.prefix_rule.map_or("", |p| p.append.as_str()),
            &base[start..end],
            self.suffix_rule.map_or("", |s| s.append.as_str()),
        )
    }
}

#[derive(Debug, Clone, Copy)]
struct RuleRef {
    flag: char,
    idx: usize,
}

pub struct Engine {
    dict: Dictionary,
    rules: AffixRuleSet,
    prefixes: HashMap<String, Vec<RuleRef>>,
    suffixes: HashMap<String, Vec<RuleRef>>,
    closure: OnceLock<HashSet<String>>,
}

impl std::fmt::Debug for Engine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Engine")
            .field("entries", &self.dict.len())
            .field("rules", &self.rules.rule_count())
            .finish()
    }
}

impl Engine {
    pub fn new(dict: Dictionary, rules: AffixRuleSet) -> Self {
        let mut prefixes: HashMap<String, Vec<RuleRef>> = HashMap::new();
        let mut suffixes: HashMap<String, Vec<RuleRef>> = HashMap::new();
        for class in rules.classes.values() {
            let index = match class.kind {
                AffixKind::Prefix => &mut prefixes,
                AffixKind::Suffix => &mut suffixes,
            };
            for (idx, rule) in class.rules.iter().enumerate() {
                index.entry(rule.append.clone()).or_default().push(RuleRef {
                    flag: class.flag,
                    idx,
                });
            }
        }
        Engine {
            dict,
            rules,
            prefixes,
            suffixes,
            closure: OnceLock::new(),
        }
    }

    pub fn dictionary(&self) -> &Dictionary {
        &self.dict
    }

    pub fn rules(&self) -> &AffixRuleSet {
        &self.rules
    }

    fn rule(&self, r: RuleRef) -> &AffixRule {
        &self.rules.classes[&r.flag].rules[r.idx]
    }

    fn rules_for<'s>(
        &'s self,
        index: &'s HashMap<String, Vec<RuleRef>>,
        append: &str,
    ) -> impl Iterator<Item = &'s AffixRule> + 's {
        index
            .get(append)
            .into_iter()
            .flatten()
            .map(move |&r| self.rule(r))
    }

    pub fn check(&self, word: &str) -> bool {
        !self.analyze(word).is_empty()
    }

    /// Every decomposition of `word`: bare entries, then suffix-only,
    /// prefix-only and prefix+suffix analyses.
    pub fn analyze(&self, word: &str) -> Vec<Analysis<'_>> {
        let word = normalize(word);
        let word = word.as_str();
        let mut out = Vec::new();
        if word.is_empty() {
            return out;
        }

        for entry in self.dict.lookup(word) {
            out.push(Analysis::new(word, entry, None, None));
        }

        let boundaries: Vec<usize> = word
            .char_indices()
            .map(|(i, _)| i)
            .chain(std::iter::once(word.len()))
            .collect();

        // suffix only: core = word[..b], append = word[b..]
        for &b in boundaries.iter().rev() {
            if b == 0 {
                continue;
            }
            let (core, append) = word.split_at(b);
            for rule in self.rules_for(&self.suffixes, append) {
                let base = format!("{core}{}", rule.strip);
                self.push_matches(&mut out, word, &base, None, Some(rule));
            }
        }

        // prefix only: append = word[..b], core = word[b..]
        for &b in &boundaries {
            if b == word.len() {
                continue;
            }
            let (append, core) = word.split_at(b);
            for rule in self.rules_for(&self.prefixes, append) {
                let base = format!("{}{core}", rule.strip);
                self.push_matches(&mut out, word, &base, Some(rule), None);
            }
        }

        // prefix + suffix
        for &pb in &boundaries {
            let prules: Vec<&AffixRule> = self
                .rules_for(&self.prefixes, &word[..pb])
                .filter(|p| p.cross_product)
                .collect();
            if prules.is_empty() {
                continue;
            }
            for &sb in boundaries.iter().rev() {
                if sb <= pb {
                    break;
                }
                let (core, s_append) = (&word[pb..sb], &word[sb..]);
                for srule in self.rules_for(&self.suffixes, s_append) {
                    if !srule.cross_product {
                        continue;
                    }
                    for &prule in &prules {
                        let base = format!("{}{core}{}", prule.strip, srule.strip);
                        self.push_matches(&mut out, word, &base, Some(prule), Some(srule));
                    }
                }
            }
        }
        out
    }

    fn push_matches<'s>(
        &'s self,
        out: &mut Vec<Analysis<'s>>,
        word: &str,
        base: &str,
        prule: Option<&'s AffixRule>,
        srule: Option<&'s AffixRule>,
    ) {
        if let Some(p) = prule {
            if !p.condition.matches_start(base) {
                return;
            }
        }
        if let Some(s) = srule {
            if !s.condition.matches_end(base) {
                return;
            }
        }
        for entry in self.dict.lookup(base) {
            let flagged = prule.is_none_or(|p| entry.has_flag(p.flag))
                && srule.is_none_or(|s| entry.has_flag(s.flag));
            if flagged {
                out.push(Analysis::new(word, entry, prule, srule));
            }
        }
    }

    /// Verb stems (`st:`) of the analyses whose base is a verb category.
    pub fn stem(&self, word: &str) -> Vec<String> {
        let mut stems: Vec<String> = Vec::new();
        for analysis in self.analyze(word) {
            if !analysis.pos_tag.is_some_and(is_verb_tag) {
                continue;
            }
            if let Some(stem) = analysis.stem {
                if !stems.iter().any(|s| s == stem) {
                    stems.push(stem.to_string());
                }
            }
        }
        stems
    }

    /// All forms of `entry`: the bare surface plus every applicable single
    /// prefix, single suffix and cross-product combination.
    pub fn generate(&self, entry: &DicEntry) -> Result<BTreeSet<String>, EngineError> {
        let mut prefix_rules = Vec::new();
        let mut suffix_rules = Vec::new();
        for &flag in &entry.flags {
            let class = self
                .rules
                .class(flag)
                .ok_or_else(|| EngineError::UnresolvedFlag {
                    surface: entry.surface.clone(),
                    flag,
                })?;
            let target = match class.kind {
                AffixKind::Prefix => &mut prefix_rules,
                AffixKind::Suffix => &mut suffix_rules,
            };
            target.extend(class.rules.iter().filter(|r| r.applies_to(&entry.surface)));
        }

        let base = entry.surface.as_str();
        let mut forms = BTreeSet::from([base.to_string()]);
        for s in &suffix_rules {
            forms.insert(s.apply(base));
        }
        for p in &prefix_rules {
            forms.insert(p.apply(base));
        }
        for p in prefix_rules.iter().filter(|p| p.cross_product) {
            for s in suffix_rules.iter().filter(|s| s.cross_product) {
                if p.strip.len() + s.strip.len() < base.len() {
                    let core = &base[p.strip.len()..base.len() - s.strip.len()];
                    forms.insert(format!("{}{core}{}", p.append, s.append));
                }
            }
        }
        Ok(forms)
    }

    /// Union of [`generate`](Self::generate) over the dictionary, skipping
    /// unresolved flags. Built once on first use.
    pub fn closure(&self) -> &HashSet<String> {
        self.closure.get_or_init(|| {
            let mut all = HashSet::new();
            for entry in self.dict.iter() {
                let mut usable = entry.clone();
                usable.flags.retain(|f| self.rules.resolves(*f));
                if let Ok(forms) = self.generate(&usable) {
                    all.extend(forms);
                }
            }
            all
        })
    }

    /// Load-time diagnostics for flags without a class.
    pub fn unresolved_flags(&self) -> Vec<EngineError> {
        self.rules
            .unresolved_flags(&self.dict)
            .into_iter()
            .map(|(surface, flag)| EngineError::UnresolvedFlag {
                surface: surface.to_string(),
                flag,
            })
            .collect()
    }
}
