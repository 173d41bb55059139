use serde::{Deserialize, Serialize};

use crate::script::normalize_str;

/// Morphological `key:value` annotations in source order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MorphFields(pub Vec<(String, String)>);

impl MorphFields {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.0
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.0.push((key.into(), value.into()));
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.0.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }

    pub(crate) fn write_to(&self, out: &mut String) {
        for (k, v) in &self.0 {
            out.push(' ');
            out.push_str(k);
            out.push(':');
            out.push_str(v);
        }
    }
}

/// Field keys follow the two-lowercase-letter convention (`po`, `is`, `st`).
pub fn is_valid_key(key: &str) -> bool {
    key.len() == 2 && key.bytes().all(|b| b.is_ascii_lowercase())
}

fn looks_like_field(token: &str) -> bool {
    token.split_once(':').is_some_and(|(k, _)| is_valid_key(k))
}

/// Parses whitespace-separated `key:value` tokens. A key followed by an empty
/// value takes the next token as its value (`st: ئاخ`). Returns the offending
/// token on error.
pub(crate) fn parse_fields<'a, I>(tokens: I) -> Result<MorphFields, String>
where
    I: IntoIterator<Item = &'a str>,
{
    let mut fields = MorphFields::new();
    let mut tokens = tokens.into_iter().peekable();
    while let Some(token) = tokens.next() {
        let Some((key, value)) = token.split_once(':') else {
            return Err(token.to_string());
        };
        if !is_valid_key(key) {
            return Err(token.to_string());
        }
        let value = if value.is_empty() {
            match tokens.peek() {
                Some(next) if !looks_like_field(next) => tokens.next().unwrap_or_default(),
                _ => return Err(token.to_string()),
            }
        } else {
            value
        };
        fields.push(key, normalize_str(value));
    }
    Ok(fields)
}
