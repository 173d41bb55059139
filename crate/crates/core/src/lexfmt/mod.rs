//! The `.dic` and `.aff` resource formats.
//!
//! `.dic`: a decimal entry count, then one `surface[/FLAGS] key:value...`
//! entry per line. `.aff`: `SET`, `TRY` and `REP` directives followed by
//! `PFX`/`SFX` classes. Lines starting with `#` are comments.

mod aff;
mod condition;
mod dic;
mod fields;
pub mod tags;

use std::path::Path;

use thiserror::Error;

pub use aff::{
    parse_aff, serialize_aff, AffError, AffixClass, AffixKind, AffixRule, AffixRuleSet,
    DEFAULT_ENCODING,
};
pub use condition::{CondAtom, Condition, ConditionError};
pub use dic::{parse_dic, serialize_dic, DicEntry, DicError, Dictionary, NEEDS_REVIEW};
pub use fields::{is_valid_key, MorphFields};

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("unknown encoding `{0}`")]
    UnknownEncoding(String),
    #[error("{path}: not valid {encoding}")]
    Undecodable { path: String, encoding: String },
    #[error("{path}: {source}")]
    Dic { path: String, source: DicError },
    #[error("{path}: {source}")]
    Aff { path: String, source: AffError },
}

/// Decodes `bytes` in the named encoding, rejecting malformed input.
pub fn decode(bytes: &[u8], encoding: &str) -> Result<String, LoadError> {
    let enc = encoding_rs::Encoding::for_label(encoding.as_bytes())
        .ok_or_else(|| LoadError::UnknownEncoding(encoding.to_string()))?;
    let (text, had_errors) = enc.decode_without_bom_handling(bytes);
    if had_errors {
        return Err(LoadError::Undecodable {
            path: String::new(),
            encoding: encoding.to_string(),
        });
    }
    Ok(text.into_owned())
}

fn declared_encoding(bytes: &[u8]) -> String {
    bytes
        .split(|&b| b == b'\n')
        .filter_map(|line| line.strip_prefix(b"SET "))
        .map(|rest| String::from_utf8_lossy(rest).trim().to_string())
        .next()
        .unwrap_or_else(|| DEFAULT_ENCODING.to_string())
}

fn read(path: &Path) -> Result<Vec<u8>, LoadError> {
    std::fs::read(path).map_err(|source| LoadError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn with_path(err: LoadError, path: &Path) -> LoadError {
    match err {
        LoadError::Undecodable { encoding, .. } => LoadError::Undecodable {
            path: path.display().to_string(),
            encoding,
        },
        other => other,
    }
}

/// Reads an affix file, decoding it per its `SET` directive.
pub fn load_aff(path: &Path) -> Result<AffixRuleSet, LoadError> {
    let bytes = read(path)?;
    let text = decode(&bytes, &declared_encoding(&bytes)).map_err(|e| with_path(e, path))?;
    parse_aff(&text).map_err(|source| LoadError::Aff {
        path: path.display().to_string(),
        source,
    })
}

/// Reads a dictionary in the encoding declared by its affix file.
pub fn load_dic(path: &Path, encoding: &str) -> Result<Dictionary, LoadError> {
    let bytes = read(path)?;
    let text = decode(&bytes, encoding).map_err(|e| with_path(e, path))?;
    parse_dic(&text).map_err(|source| LoadError::Dic {
        path: path.display().to_string(),
        source,
    })
}
