use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::condition::{CondAtom, Condition, ConditionError};
use super::dic::Dictionary;
use super::fields::{parse_fields, MorphFields};
use crate::script::normalize_str;

pub const DEFAULT_ENCODING: &str = "UTF-8";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AffixKind {
    Prefix,
    Suffix,
}

impl AffixKind {
    pub fn keyword(self) -> &'static str {
        match self {
            AffixKind::Prefix => "PFX",
            AffixKind::Suffix => "SFX",
        }
    }

    fn from_keyword(word: &str) -> Option<Self> {
        match word {
            "PFX" => Some(AffixKind::Prefix),
            "SFX" => Some(AffixKind::Suffix),
            _ => None,
        }
    }
}

impl fmt::Display for AffixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AffError {
    #[error("line {line}: unknown directive `{directive}`")]
    UnknownDirective { line: usize, directive: String },
    #[error("line {line}: class `{flag}` declares {declared} rules but has {found}")]
    ClassCountMismatch {
        line: usize,
        flag: char,
        declared: usize,
        found: usize,
    },
    #[error("line {line}: unbalanced or empty bracket class in condition `{condition}`")]
    BadCondition { line: usize, condition: String },
    #[error("line {line}: class `{flag}` is declared as {declared} but the rule is {found}")]
    MixedKindInClass {
        line: usize,
        flag: char,
        declared: AffixKind,
        found: AffixKind,
    },
    #[error("line {line}: rule for undeclared class `{flag}`")]
    UndeclaredClass { line: usize, flag: char },
    #[error("line {line}: class `{flag}` declared twice")]
    DuplicateClass { line: usize, flag: char },
    #[error("line {line}: REP declares {declared} pairs but has {found}")]
    ReplacementCountMismatch {
        line: usize,
        declared: usize,
        found: usize,
    },
    #[error("line {line}: bad field `{field}`")]
    BadField { line: usize, field: String },
    #[error("line {line}: malformed line")]
    Malformed { line: usize },
}

impl AffError {
    pub fn line(&self) -> usize {
        match self {
            AffError::UnknownDirective { line, .. }
            | AffError::ClassCountMismatch { line, .. }
            | AffError::BadCondition { line, .. }
            | AffError::MixedKindInClass { line, .. }
            | AffError::UndeclaredClass { line, .. }
            | AffError::DuplicateClass { line, .. }
            | AffError::ReplacementCountMismatch { line, .. }
            | AffError::BadField { line, .. }
            | AffError::Malformed { line } => *line,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffixRule {
    pub kind: AffixKind,
    pub flag: char,
    pub cross_product: bool,
    pub strip: String,
    pub append: String,
    pub condition: Condition,
    pub morph: MorphFields,
}

impl AffixRule {
    /// Morpheme segments of the appended string: the `sg:` field split at
    /// `+`, or the whole append as one segment.
    pub fn segments(&self) -> Vec<String> {
        match self.morph.get("sg") {
            Some(sg) => sg
                .split('+')
                .filter(|s| !s.is_empty())
                .map(str::to_string)
                .collect(),
            None if self.append.is_empty() => Vec::new(),
            None => vec![self.append.clone()],
        }
    }

    /// Whether the rule can apply to `base`: the strip string is present,
    /// the condition holds and something of the base survives stripping.
    pub fn applies_to(&self, base: &str) -> bool {
        match self.kind {
            AffixKind::Suffix => {
                base.len() > self.strip.len()
                    && base.ends_with(&self.strip)
                    && self.condition.matches_end(base)
            }
            AffixKind::Prefix => {
                base.len() > self.strip.len()
                    && base.starts_with(&self.strip)
                    && self.condition.matches_start(base)
            }
        }
    }

    /// `base` with the strip string removed and the append added. Callers
    /// check [`applies_to`](Self::applies_to) first.
    pub fn apply(&self, base: &str) -> String {
        match self.kind {
            AffixKind::Suffix => {
                format!("{}{}", &base[..base.len() - self.strip.len()], self.append)
            }
            AffixKind::Prefix => format!("{}{}", self.append, &base[self.strip.len()..]),
        }
    }

    fn to_line(&self) -> String {
        let mut line = format!(
            "{} {} {} {} {}",
            self.kind,
            self.flag,
            zero_if_empty(&self.strip),
            zero_if_empty(&self.append),
            self.condition
        );
        self.morph.write_to(&mut line);
        line
    }
}

fn zero_if_empty(s: &str) -> &str {
    if s.is_empty() {
        "0"
    } else {
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffixClass {
    pub kind: AffixKind,
    pub flag: char,
    pub cross_product: bool,
    pub rules: Vec<AffixRule>,
}

impl AffixClass {
    pub fn new(kind: AffixKind, flag: char, cross_product: bool) -> Self {
        AffixClass {
            kind,
            flag,
            cross_product,
            rules: Vec::new(),
        }
    }

    pub fn add_rule(
        &mut self,
        strip: &str,
        append: &str,
        condition: Condition,
        morph: MorphFields,
    ) {
        // bases are never empty, so a lone `.` is the same as no condition
        let condition = if condition.0 == [CondAtom::Any] {
            Condition::any()
        } else {
            condition
        };
        self.rules.push(AffixRule {
            kind: self.kind,
            flag: self.flag,
            cross_product: self.cross_product,
            strip: normalize_str(strip),
            append: normalize_str(append),
            condition,
            morph,
        });
    }

    /// A class with no rules: its flag is accepted in the lexicon but adds
    /// no forms.
    pub fn is_inert(&self) -> bool {
        self.rules.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffixRuleSet {
    pub encoding: String,
    pub try_chars: String,
    pub replacements: Vec<(String, String)>,
    pub classes: BTreeMap<char, AffixClass>,
}

impl Default for AffixRuleSet {
    fn default() -> Self {
        AffixRuleSet {
            encoding: DEFAULT_ENCODING.to_string(),
            try_chars: String::new(),
            replacements: Vec::new(),
            classes: BTreeMap::new(),
        }
    }
}

impl AffixRuleSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn class(&self, flag: char) -> Option<&AffixClass> {
        self.classes.get(&flag)
    }

    pub fn resolves(&self, flag: char) -> bool {
        self.classes.contains_key(&flag)
    }

    pub fn inert_flags(&self) -> impl Iterator<Item = char> + '_ {
        self.classes
            .values()
            .filter(|c| c.is_inert())
            .map(|c| c.flag)
    }

    pub fn rules(&self) -> impl Iterator<Item = &AffixRule> {
        self.classes.values().flat_map(|c| c.rules.iter())
    }

    pub fn rule_count(&self) -> usize {
        self.classes.values().map(|c| c.rules.len()).sum()
    }

    /// Flags used in `dict` that have no class, as (surface, flag) pairs.
    pub fn unresolved_flags<'a>(&'a self, dict: &'a Dictionary) -> Vec<(&'a str, char)> {
        dict.iter()
            .flat_map(|e| e.flags.iter().map(move |f| (e.surface.as_str(), *f)))
            .filter(|(_, f)| !self.resolves(*f))
            .collect()
    }
}

struct PendingRep {
    line: usize,
    declared: usize,
}

pub fn parse_aff(text: &str) -> Result<AffixRuleSet, AffError> {
    let mut set = AffixRuleSet::new();
    let mut header_lines: BTreeMap<char, (usize, usize)> = BTreeMap::new();
    let mut rep: Option<PendingRep> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim().trim_start_matches('\u{FEFF}');
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        match fields[0] {
            "SET" => {
                let [_, enc] = fields[..] else {
                    return Err(AffError::Malformed { line });
                };
                set.encoding = enc.to_string();
            }
            "TRY" => {
                let [_, chars] = fields[..] else {
                    return Err(AffError::Malformed { line });
                };
                set.try_chars = normalize_str(chars);
            }
            "REP" => match (&rep, &fields[..]) {
                (None, [_, count]) => {
                    let declared = count.parse().map_err(|_| AffError::Malformed { line })?;
                    rep = Some(PendingRep { line, declared });
                }
                (Some(_), [_, from, to]) => {
                    set.replacements
                        .push((normalize_str(from), normalize_str(to)));
                }
                _ => return Err(AffError::Malformed { line }),
            },
            keyword => {
                let Some(kind) = AffixKind::from_keyword(keyword) else {
                    return Err(AffError::UnknownDirective {
                        line,
                        directive: keyword.to_string(),
                    });
                };
                let flag =
                    single_char(fields.get(1).copied()).ok_or(AffError::Malformed { line })?;
                if is_class_header(&fields) {
                    if set.classes.contains_key(&flag) {
                        return Err(AffError::DuplicateClass { line, flag });
                    }
                    let declared = fields[3]
                        .parse()
                        .map_err(|_| AffError::Malformed { line })?;
                    header_lines.insert(flag, (line, declared));
                    set.classes
                        .insert(flag, AffixClass::new(kind, flag, fields[2] == "Y"));
                    continue;
                }
                if fields.len() < 5 {
                    return Err(AffError::Malformed { line });
                }
                let class = set
                    .classes
                    .get_mut(&flag)
                    .ok_or(AffError::UndeclaredClass { line, flag })?;
                if class.kind != kind {
                    return Err(AffError::MixedKindInClass {
                        line,
                        flag,
                        declared: class.kind,
                        found: kind,
                    });
                }
                let condition = Condition::parse(fields[4]).map_err(|e| match e {
                    ConditionError::Unbalanced | ConditionError::EmptyClass => {
                        AffError::BadCondition {
                            line,
                            condition: fields[4].to_string(),
                        }
                    }
                })?;
                let morph = parse_fields(fields[5..].iter().copied())
                    .map_err(|field| AffError::BadField { line, field })?;
                class.add_rule(
                    empty_if_zero(fields[2]),
                    empty_if_zero(fields[3]),
                    condition,
                    morph,
                );
            }
        }
    }

    if let Some(pending) = rep {
        if pending.declared != set.replacements.len() {
            return Err(AffError::ReplacementCountMismatch {
                line: pending.line,
                declared: pending.declared,
                found: set.replacements.len(),
            });
        }
    }
    let mut mismatches: Vec<AffError> = header_lines
        .iter()
        .filter_map(|(flag, &(line, declared))| {
            let found = set.classes[flag].rules.len();
            (found != declared).then_some(AffError::ClassCountMismatch {
                line,
                flag: *flag,
                declared,
                found,
            })
        })
        .collect();
    mismatches.sort_by_key(AffError::line);
    match mismatches.into_iter().next() {
        Some(err) => Err(err),
        None => Ok(set),
    }
}

fn is_class_header(fields: &[&str]) -> bool {
    fields.len() == 4 && matches!(fields[2], "Y" | "N") && fields[3].parse::<usize>().is_ok()
}

fn single_char(s: Option<&str>) -> Option<char> {
    let mut chars = s?.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => Some(c),
        _ => None,
    }
}

fn empty_if_zero(s: &str) -> &str {
    if s == "0" {
        ""
    } else {
        s
    }
}

pub fn serialize_aff(set: &AffixRuleSet) -> String {
    let mut out = format!("SET {}\n", set.encoding);
    if !set.try_chars.is_empty() {
        out.push_str(&format!("TRY {}\n", set.try_chars));
    }
    if !set.replacements.is_empty() {
        out.push_str(&format!("REP {}\n", set.replacements.len()));
        for (from, to) in &set.replacements {
            out.push_str(&format!("REP {from} {to}\n"));
        }
    }
    for class in set.classes.values() {
        out.push('\n');
        out.push_str(&format!(
            "{} {} {} {}\n",
            class.kind,
            class.flag,
            if class.cross_product { "Y" } else { "N" },
            class.rules.len()
        ));
        for rule in &class.rules {
            out.push_str(&rule.to_line());
            out.push('\n');
        }
    }
    out
}
