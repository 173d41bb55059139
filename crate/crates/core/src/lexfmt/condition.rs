use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CondAtom {
    Any,
    Char(char),
    Class { negated: bool, chars: Vec<char> },
}

impl CondAtom {
    pub fn matches(&self, c: char) -> bool {
        match self {
            CondAtom::Any => true,
            CondAtom::Char(x) => *x == c,
            CondAtom::Class { negated, chars } => chars.contains(&c) != *negated,
        }
    }
}

/// A sequence of atoms anchored at the end (suffixes) or start (prefixes)
/// of the dictionary base. The empty condition and `.` accept any base.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Condition(pub Vec<CondAtom>);

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConditionError {
    Unbalanced,
    EmptyClass,
}

impl Condition {
    pub fn any() -> Self {
        Condition(Vec::new())
    }

    pub fn parse(text: &str) -> Result<Self, ConditionError> {
        if text == "." {
            return Ok(Condition::any());
        }
        let mut atoms = Vec::new();
        let mut chars = text.chars();
        while let Some(c) = chars.next() {
            match c {
                '[' => {
                    let mut negated = false;
                    let mut members = Vec::new();
                    let mut closed = false;
                    for (i, m) in chars.by_ref().enumerate() {
                        match m {
                            '^' if i == 0 => negated = true,
                            ']' => {
                                closed = true;
                                break;
                            }
                            '[' => return Err(ConditionError::Unbalanced),
                            other => members.push(other),
                        }
                    }
                    if !closed {
                        return Err(ConditionError::Unbalanced);
                    }
                    if members.is_empty() {
                        return Err(ConditionError::EmptyClass);
                    }
                    atoms.push(CondAtom::Class {
                        negated,
                        chars: members,
                    });
                }
                ']' => return Err(ConditionError::Unbalanced),
                '.' => atoms.push(CondAtom::Any),
                other => atoms.push(CondAtom::Char(other)),
            }
        }
        Ok(Condition(atoms))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn matches_end(&self, word: &str) -> bool {
        let mut chars = word.chars().rev();
        self.0
            .iter()
            .rev()
            .all(|atom| chars.next().is_some_and(|c| atom.matches(c)))
    }

    pub fn matches_start(&self, word: &str) -> bool {
        let mut chars = word.chars();
        self.0
            .iter()
            .all(|atom| chars.next().is_some_and(|c| atom.matches(c)))
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str(".");
        }
        for atom in &self.0 {
            match atom {
                CondAtom::Any => f.write_str(".")?,
                CondAtom::Char(c) => write!(f, "{c}")?,
                CondAtom::Class { negated, chars } => {
                    f.write_str("[")?;
                    if *negated {
                        f.write_str("^")?;
                    }
                    for c in chars {
                        write!(f, "{c}")?;
                    }
                    f.write_str("]")?;
                }
            }
        }
        Ok(())
    }
}
