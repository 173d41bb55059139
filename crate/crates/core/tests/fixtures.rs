use ckb_spell::evaluation::GoldLabel;
use ckb_spell::fixtures::{
    data_dir, morph_gold, sample_engine, spell_gold, spell_synthetic, EXAMPLES, TABLE1,
};
use ckb_spell::lexfmt::parse_aff;

#[test]
fn paradigm_forms_are_accepted() {
    let e = sample_engine();
    for row in TABLE1.iter().chain(&EXAMPLES) {
        assert!(e.check(&row.arabic()), "{}", row.latin);
    }
    let girt = e.dictionary().lookup("گرت").next().unwrap();
    let forms = e.generate(girt).unwrap();
    assert!(TABLE1.iter().all(|r| forms.contains(&r.arabic())));
}

#[test]
fn gold_rows_are_consistent() {
    let e = sample_engine();
    for case in morph_gold() {
        let joined = case.prefixes.concat() + &case.base + &case.suffixes.concat();
        assert_eq!(joined, case.word);
        assert!(e.check(&case.word), "{}", case.word);
    }
}

#[test]
fn spell_gold_corrections_are_words() {
    let e = sample_engine();
    for case in spell_gold().iter().chain(&spell_synthetic()) {
        for correction in &case.corrections {
            assert!(correction.split(' ').all(|w| e.check(w)), "{correction}");
        }
        if case.label == GoldLabel::IncorrectSpaced {
            assert!(case
                .corrections
                .iter()
                .any(|c| c.replace(' ', "") == case.input));
        }
    }
}

#[test]
fn agent_marker_attaches_through_distinct_flags() {
    let e = sample_engine();
    // present stem: ن marks the agent
    let present = e.analyze("دەگرن");
    let p = present.iter().find(|a| a.base_segment() == "گر").unwrap();
    assert_eq!(p.suffix_rule.unwrap().flag, 'V');
    assert_eq!(p.suffixes(), ["ن"]);
    // past transitive stem: ن marks the patient, after the agent clitic
    let past = e.analyze("گرتیانن");
    let t = past.iter().find(|a| a.base_segment() == "گرت").unwrap();
    assert_eq!(t.suffix_rule.unwrap().flag, 'T');
    assert_eq!(t.suffixes().last().map(String::as_str), Some("ن"));
}

#[test]
fn data_files_match_the_embedded_copies() {
    let aff = std::fs::read_to_string(data_dir().join("sample.aff")).unwrap();
    assert_eq!(parse_aff(&aff).unwrap(), *sample_engine().rules());
}
