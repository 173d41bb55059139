use ckb_spell::fixtures::latin_words;
use ckb_spell::script::{
    is_separator, normalize, normalize_str, segments, tokenize, transliterate, Direction,
    SUBSTITUTIONS, ZWNJ,
};
use proptest::prelude::*;

fn mixed_text() -> impl Strategy<Value = String> {
    let pieces = prop_oneof![
        Just('\u{0643}'),
        Just('\u{064A}'),
        Just('\u{0649}'),
        Just('\u{0647}'),
        Just(ZWNJ),
        Just('\u{0640}'),
        Just('\u{06D5}'),
        Just(' '),
        Just('.'),
        Just('،'),
        proptest::char::range('\u{0620}', '\u{06FF}'),
        proptest::char::range('\u{FB50}', '\u{FDFF}'),
        proptest::char::range('\u{FE70}', '\u{FEFE}'),
        proptest::char::range('a', 'z'),
        any::<char>(),
    ];
    proptest::collection::vec(pieces, 0..24).prop_map(|cs| cs.into_iter().collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn normalize_is_idempotent(text in mixed_text()) {
        let once = normalize_str(&text);
        prop_assert_eq!(normalize_str(&once), once);
    }

    #[test]
    fn normalized_text_has_no_substituted_codepoints(text in mixed_text()) {
        let out = normalize_str(&text);
        for (from, _) in SUBSTITUTIONS {
            prop_assert!(!out.contains(*from));
        }
    }

    #[test]
    fn tokens_are_non_empty_and_rebuild_the_input(text in mixed_text()) {
        for token in tokenize(&text) {
            prop_assert!(!token.is_empty());
            prop_assert!(!token.chars().any(is_separator));
        }
        let normalized = normalize_str(&text);
        let parts = segments(&normalized);
        let tokens: Vec<&str> = parts.iter().filter(|s| s.is_token).map(|s| s.text).collect();
        prop_assert_eq!(tokens, tokenize(&text));
        let rebuilt: String = parts.iter().map(|s| s.text).collect();
        prop_assert_eq!(rebuilt, normalized);
    }
}

#[test]
fn kaf_follows_the_substitution_table() {
    let raw = "\u{0643}ورد \u{0643}ت\u{064A}ب";
    let oracle: String = raw
        .chars()
        .map(|c| {
            SUBSTITUTIONS
                .iter()
                .find(|(f, _)| *f == c)
                .map_or(c, |(_, t)| *t)
        })
        .collect();
    assert_eq!(normalize(raw).as_str(), oracle);
    assert_eq!(normalize("").as_str(), "");
}

#[test]
fn heh_zwnj_is_the_vowel_letter() {
    assert_eq!(normalize_str("ده\u{200C}که\u{200C}ون"), "دەکەون");
    assert_eq!(normalize_str("مهرج"), "مهرج");
}

#[test]
fn transliteration_examples() {
    assert_eq!(
        transliterate("kewtin", Direction::LatinToArabic),
        normalize_str("که\u{200C}وتن")
    );
    assert_eq!(transliterate("girtin", Direction::LatinToArabic), "گرتن");
    assert_eq!(transliterate("", Direction::LatinToArabic), "");
    assert_eq!(transliterate("", Direction::ArabicToLatin), "");
    assert_eq!(
        transliterate("girtin 42!", Direction::LatinToArabic),
        "گرتن 42!"
    );
}

#[test]
fn latin_vocabulary_round_trips() {
    for word in latin_words() {
        let arabic = transliterate(word, Direction::LatinToArabic);
        assert_eq!(
            transliterate(&arabic, Direction::ArabicToLatin),
            word,
            "via {arabic}"
        );
    }
}

#[test]
fn tokenize_examples() {
    assert_eq!(tokenize("به هار"), vec!["به", "هار"]);
    assert!(tokenize("").is_empty());
    assert_eq!(tokenize("ده\u{200C}که\u{200C}ون."), vec!["دەکەون"]);
}

#[test]
fn tokenize_matches_a_reference_splitter() {
    let text = "ئەو، گرتیانن؛ «کوردستان» (هەولێر) دەکەون؟ بەڵام... نا!";
    let reference: Vec<String> = normalize_str(text)
        .split(|c: char| c.is_whitespace() || c.is_ascii_punctuation() || "،؛؟«»…".contains(c))
        .filter(|t| !t.is_empty())
        .map(str::to_string)
        .collect();
    assert_eq!(tokenize(text), reference);
}

#[test]
fn zwnj_is_word_internal() {
    let word = "نامە\u{200C}کان";
    assert!(!is_separator(ZWNJ));
    assert_eq!(tokenize(word).len(), 1);
}
