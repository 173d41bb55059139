//! Arabic-script Kurdish text handling.

mod normalize;
mod tokenize;
mod translit;

pub use normalize::{
    is_arabic_letter, is_normalized, normalize, normalize_str, NormalizedText, AE, HEH,
    SUBSTITUTIONS, ZWNJ,
};
pub use tokenize::{is_separator, segments, tokenize, Segment};
pub use translit::{transliterate, Direction, TableError, TransliterationTable, HAMZA_SEAT};
