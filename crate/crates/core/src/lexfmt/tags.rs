/// Part-of-speech letters of the annotated lexicon.
pub const POS_TAGS: &[(char, &str)] = &[
    ('N', "noun"),
    ('V', "present stem"),
    ('I', "past stem intransitive"),
    ('T', "past stem transitive"),
    ('A', "adjective"),
    ('R', "adverb"),
    ('E', "numeral"),
    ('C', "conjunction"),
    ('D', "interjection"),
    ('B', "pronoun"),
    ('F', "adposition"),
    ('G', "particle"),
    ('X', "infinitive"),
    ('Z', "proper names"),
    ('W', "exceptional cases"),
];

/// Letters whose entries are verb stems and carry an `st:` field.
pub const VERB_TAGS: &[char] = &['V', 'I', 'T', 'X'];

const NAME_ALIASES: &[(&str, char)] = &[
    ("noun", 'N'),
    ("adjective", 'A'),
    ("adverb", 'R'),
    ("numeral", 'E'),
    ("conjunction", 'C'),
    ("interjection", 'D'),
    ("pronoun", 'B'),
    ("adposition", 'F'),
    ("preposition", 'F'),
    ("postposition", 'F'),
    ("particle", 'G'),
    ("infinitive", 'X'),
    ("proper_name", 'Z'),
    ("propn", 'Z'),
    ("exceptional", 'W'),
];

pub fn is_pos_letter(c: char) -> bool {
    POS_TAGS.iter().any(|(l, _)| *l == c)
}

pub fn is_verb_tag(c: char) -> bool {
    VERB_TAGS.contains(&c)
}

/// Resolves a `po:` value to a tag letter.
///
/// Accepts a tag letter directly or a lowercase name. `verb` is refined with
/// the inflectional class (`is:`), e.g. `past_stem_transitive_active` is `T`.
pub fn resolve_pos(po: &str, infl_class: Option<&str>) -> Option<char> {
    let mut chars = po.chars();
    if let (Some(c), None) = (chars.next(), chars.next()) {
        return is_pos_letter(c).then_some(c);
    }
    let name = po.to_ascii_lowercase();
    if name == "verb" {
        let class = infl_class?;
        return if class.starts_with("infinitive") {
            Some('X')
        } else if class.starts_with("present_stem") {
            Some('V')
        } else if class.starts_with("past_stem") {
            if class.contains("intransitive") {
                Some('I')
            } else if class.contains("transitive") {
                Some('T')
            } else {
                None
            }
        } else {
            None
        };
    }
    NAME_ALIASES
        .iter()
        .find(|(alias, _)| *alias == name)
        .map(|(_, letter)| *letter)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fifteen_unique_letters() {
        let mut letters: Vec<char> = POS_TAGS.iter().map(|(l, _)| *l).collect();
        letters.sort_unstable();
        letters.dedup();
        assert_eq!(letters.len(), 15);
    }

    #[test]
    fn verb_refined_by_class() {
        assert_eq!(
            resolve_pos("verb", Some("past_stem_transitive_active")),
            Some('T')
        );
        assert_eq!(
            resolve_pos("verb", Some("past_stem_intransitive_passive")),
            Some('I')
        );
        assert_eq!(
            resolve_pos("verb", Some("present_stem_transitive_active")),
            Some('V')
        );
        assert_eq!(
            resolve_pos("verb", Some("infinitive_intransitive_passive")),
            Some('X')
        );
        assert_eq!(resolve_pos("verb", None), None);
    }

    #[test]
    fn letters_and_names() {
        assert_eq!(resolve_pos("N", None), Some('N'));
        assert_eq!(resolve_pos("noun", None), Some('N'));
        assert_eq!(resolve_pos("Q", None), None);
        assert_eq!(resolve_pos("gerund", None), None);
    }
}
