use std::io::Read;
use std::path::Path;

use anyhow::{anyhow, Context};
use ckb_spell::baseline::{baseline_check, baseline_suggest, FrequencyList, DEFAULT_MIN_FREQ};
use ckb_spell::engine::{Engine, SuggestOptions, Suggestion, SuggestionSource};
use ckb_spell::evaluation::{
    accept_all_tokens, coverage, drop_spaced, engine_predictions, evaluate_morph, evaluate_spell,
    parse_morph_tests, parse_spell_tests, render_report, render_rows, render_spell_table,
    MorphAspect, Report,
};
use ckb_spell::fixtures::{sample_dictionary, sample_rules, TOY_CORPUS};
use ckb_spell::lexbuild::{
    build_sparql_query, fetch_labels, merge_dictionaries, merge_sources, validate_entry,
    FetchError, FixtureTransport, HttpTransport, TagSchema, WordSource,
};
use ckb_spell::lexfmt::{load_aff, load_dic, serialize_dic, AffixRuleSet, Dictionary};
use ckb_spell::script::{normalize_str, tokenize, transliterate};

use crate::args::{
    BaselineCommand, Cli, Command, EvalCommand, LexiconCommand, SuggestArgs, System,
};
use crate::{Failure, Verdict};

type Outcome = Result<Verdict, Failure>;

fn existing(path: &Path) -> Result<&Path, Failure> {
    if path.is_file() {
        Ok(path)
    } else {
        Err(Failure::Resource(anyhow!(
            "{}: no such file",
            path.display()
        )))
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    let path = existing(path)?;
    Ok(std::fs::read_to_string(path).with_context(|| path.display().to_string())?)
}

fn write_text(path: &Path, text: &str) -> Result<(), Failure> {
    Ok(std::fs::write(path, text).with_context(|| path.display().to_string())?)
}

fn load_resources(cli: &Cli) -> Result<(Dictionary, AffixRuleSet), Failure> {
    // both paths are checked before anything is parsed
    for path in cli.dic.iter().chain(&cli.aff) {
        existing(path)?;
    }
    let rules = match &cli.aff {
        Some(path) => load_aff(path)?,
        None => sample_rules(),
    };
    let dict = match &cli.dic {
        Some(path) => load_dic(path, &rules.encoding)?,
        None => sample_dictionary(),
    };
    Ok((dict, rules))
}

fn load_engine(cli: &Cli) -> Result<Engine, Failure> {
    let (dict, rules) = load_resources(cli)?;
    let engine = Engine::new(dict, rules);
    for err in engine.unresolved_flags() {
        eprintln!("warning: {err}");
    }
    Ok(engine)
}

fn load_list(path: &Path) -> Result<FrequencyList, Failure> {
    let text = read_text(path)?;
    Ok(FrequencyList::from_tsv(&text).with_context(|| path.display().to_string())?)
}

fn toy_list() -> FrequencyList {
    let mut list = FrequencyList::new(DEFAULT_MIN_FREQ);
    list.add_text(TOY_CORPUS);
    list
}

fn verdict(all_ok: bool) -> Verdict {
    if all_ok {
        Verdict::Clean
    } else {
        Verdict::Errors
    }
}

fn emit(cli: &Cli, header: &[&str], rows: &[Vec<String>]) {
    print!("{}", render_rows(header, rows, cli.format));
}

fn suggest_options(a: &SuggestArgs) -> SuggestOptions {
    SuggestOptions {
        max_distance: a.max_distance,
        max_results: a.max_results,
        enable_splits: a.splits,
    }
}

fn source_name(source: &SuggestionSource) -> String {
    match source {
        SuggestionSource::Edit => "edit".into(),
        SuggestionSource::Split => "split".into(),
        SuggestionSource::Frequency(n) => format!("frequency:{n}"),
    }
}

fn suggestion_rows(out: &[Suggestion]) -> Vec<Vec<String>> {
    out.iter()
        .enumerate()
        .map(|(i, s)| {
            vec![
                (i + 1).to_string(),
                s.candidate.clone(),
                s.distance.to_string(),
                source_name(&s.source),
            ]
        })
        .collect()
}

const SUGGEST_HEADER: [&str; 4] = ["rank", "suggestion", "distance", "source"];

pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Check { words } => {
            let engine = load_engine(cli)?;
            let rows: Vec<Vec<String>> = words
                .iter()
                .map(|w| {
                    let ok = engine.check(w);
                    vec![
                        normalize_str(w),
                        if ok { "correct" } else { "incorrect" }.to_string(),
                    ]
                })
                .collect();
            emit(cli, &["word", "verdict"], &rows);
            Ok(verdict(rows.iter().all(|r| r[1] == "correct")))
        }
        Command::Suggest { word, opts } => {
            let engine = load_engine(cli)?;
            let out = engine.suggest(word, &suggest_options(opts));
            emit(cli, &SUGGEST_HEADER, &suggestion_rows(&out));
            Ok(verdict(engine.check(word)))
        }
        Command::Analyze { word } => {
            let engine = load_engine(cli)?;
            let analyses = engine.analyze(word);
            let rows: Vec<Vec<String>> = analyses
                .iter()
                .map(|a| {
                    vec![
                        a.surface.clone(),
                        a.prefixes()
                            .into_iter()
                            .chain([a.base_segment().to_string()])
                            .chain(a.suffixes())
                            .collect::<Vec<_>>()
                            .join("+"),
                        a.pos_tag.map_or_else(|| "-".into(), String::from),
                        a.stem.unwrap_or("-").to_string(),
                        a.base.surface.clone(),
                    ]
                })
                .collect();
            emit(cli, &["word", "morphemes", "pos", "stem", "entry"], &rows);
            Ok(verdict(!analyses.is_empty()))
        }
        Command::Stem { word } => {
            let engine = load_engine(cli)?;
            let word = normalize_str(word);
            let rows: Vec<Vec<String>> = engine
                .stem(&word)
                .into_iter()
                .map(|s| vec![word.clone(), s])
                .collect();
            emit(cli, &["word", "stem"], &rows);
            Ok(verdict(engine.check(&word)))
        }
        Command::Generate { lemma } => {
            let engine = load_engine(cli)?;
            let lemma = normalize_str(lemma);
            let entries: Vec<_> = engine.dictionary().lookup(&lemma).collect();
            if entries.is_empty() {
                eprintln!("{lemma}: not in the lexicon");
                return Ok(Verdict::Errors);
            }
            let mut rows = Vec::new();
            for entry in entries {
                let forms = engine
                    .generate(entry)
                    .map_err(|e| Failure::Resource(e.into()))?;
                rows.extend(forms.into_iter().map(|f| vec![entry.written_form(), f]));
            }
            emit(cli, &["entry", "form"], &rows);
            Ok(Verdict::Clean)
        }
        Command::Baseline { command } => baseline(cli, command),
        Command::Eval { command } => eval(cli, command),
        Command::Lexicon { command } => lexicon(cli, command),
        Command::Transliterate { direction, text } => {
            let input = if text.is_empty() {
                let mut buf = String::new();
                std::io::stdin().read_to_string(&mut buf).context("stdin")?;
                buf
            } else {
                format!("{}\n", text.join(" "))
            };
            print!("{}", transliterate(&input, *direction));
            Ok(Verdict::Clean)
        }
    }
}

fn baseline(cli: &Cli, command: &BaselineCommand) -> Outcome {
    match command {
        BaselineCommand::Build {
            corpus,
            output,
            min_freq,
        } => {
            let mut list = FrequencyList::new(*min_freq);
            for path in corpus {
                existing(path)?;
            }
            for path in corpus {
                list.add_text(&read_text(path)?);
            }
            write_text(output, &list.to_tsv())?;
            eprintln!(
                "{} words, {} admitted",
                list.counts().len(),
                list.admitted_len()
            );
            Ok(Verdict::Clean)
        }
        BaselineCommand::Check { list, words } => {
            let list = load_list(list)?;
            let rows: Vec<Vec<String>> = words
                .iter()
                .map(|w| {
                    let ok = baseline_check(w, &list);
                    vec![
                        normalize_str(w),
                        if ok { "correct" } else { "incorrect" }.to_string(),
                    ]
                })
                .collect();
            emit(cli, &["word", "verdict"], &rows);
            Ok(verdict(rows.iter().all(|r| r[1] == "correct")))
        }
        BaselineCommand::Suggest { list, word, k } => {
            let list = load_list(list)?;
            emit(
                cli,
                &SUGGEST_HEADER,
                &suggestion_rows(&baseline_suggest(word, &list, *k)),
            );
            Ok(verdict(baseline_check(word, &list)))
        }
    }
}

fn testset_name(path: &Path) -> String {
    path.file_stem()
        .map_or_else(|| "testset".into(), |s| s.to_string_lossy().into_owned())
}

fn eval(cli: &Cli, command: &EvalCommand) -> Outcome {
    match command {
        EvalCommand::Spell {
            testset,
            system,
            list,
            drop_spaced: drop,
            opts,
        } => {
            let text = read_text(testset)?;
            let mut cases =
                parse_spell_tests(&text).with_context(|| testset.display().to_string())?;
            if *drop {
                cases = drop_spaced(&cases);
            }
            let mut name = testset_name(testset);
            if *drop {
                name.push_str("\\space");
            }
            let report = match system {
                System::Engine => {
                    let engine = load_engine(cli)?;
                    let opts = suggest_options(opts);
                    evaluate_spell(
                        "engine",
                        &name,
                        &cases,
                        |w| accept_all_tokens(w, |t| engine.check(t)),
                        |w| {
                            engine
                                .suggest(w, &opts)
                                .into_iter()
                                .map(|s| s.candidate)
                                .collect()
                        },
                    )
                }
                System::Baseline => {
                    let list = match list {
                        Some(path) => load_list(path)?,
                        None => toy_list(),
                    };
                    evaluate_spell(
                        "baseline",
                        &name,
                        &cases,
                        |w| accept_all_tokens(w, |t| baseline_check(t, &list)),
                        |w| {
                            baseline_suggest(w, &list, opts.max_results)
                                .into_iter()
                                .map(|s| s.candidate)
                                .collect()
                        },
                    )
                }
            };
            print!("{}", render_spell_table(&[report], cli.format));
            Ok(Verdict::Clean)
        }
        EvalCommand::Morph { testset, aspect } => {
            let text = read_text(testset)?;
            let cases = parse_morph_tests(&text).with_context(|| testset.display().to_string())?;
            let engine = load_engine(cli)?;
            let aspects = if aspect.is_empty() {
                vec![
                    MorphAspect::Segmentation,
                    MorphAspect::Pos,
                    MorphAspect::Stem,
                ]
            } else {
                aspect.clone()
            };
            let mut reports = Vec::new();
            for a in aspects {
                let report = evaluate_morph(&cases, |w| engine_predictions(&engine, w), a)
                    .map_err(|e| Failure::Usage(format!("{}: {e}", testset.display())))?;
                reports.push(report);
            }
            let rows: Vec<Vec<String>> = reports
                .iter()
                .map(|r| {
                    vec![
                        r.aspect.to_string(),
                        r.correct.to_string(),
                        r.total.to_string(),
                        format!("{:.2}", r.accuracy.percent()),
                    ]
                })
                .collect();
            emit(cli, &["Aspect", "Correct", "Total", "Accuracy (%)"], &rows);
            Ok(Verdict::Clean)
        }
        EvalCommand::Coverage { wordlist } => {
            let text = read_text(wordlist)?;
            let engine = load_engine(cli)?;
            let report = coverage(tokenize(&text).iter().map(String::as_str), |w| {
                !engine.analyze(w).is_empty()
            })
            .map_err(|e| Failure::Usage(format!("{}: {e}", wordlist.display())))?;
            print!("{}", render_report(&Report::Coverage(report), cli.format));
            Ok(Verdict::Clean)
        }
    }
}

fn lexicon(cli: &Cli, command: &LexiconCommand) -> Outcome {
    match command {
        LexiconCommand::Validate => {
            let (dict, rules) = load_resources(cli)?;
            let schema = TagSchema::sorani();
            let mut rows = Vec::new();
            for entry in dict.iter() {
                for d in validate_entry(entry, &schema) {
                    rows.push(vec![entry.written_form(), d.to_string()]);
                }
            }
            for (surface, flag) in rules.unresolved_flags(&dict) {
                rows.push(vec![
                    surface.to_string(),
                    format!("flag `{flag}` has no affix class"),
                ]);
            }
            emit(cli, &["entry", "problem"], &rows);
            eprintln!("{} entries, {} problems", dict.len(), rows.len());
            Ok(verdict(rows.is_empty()))
        }
        LexiconCommand::Merge {
            dics,
            words,
            script,
            flags,
            pos,
            output,
        } => {
            let encoding = match &cli.aff {
                Some(path) => load_aff(existing(path)?)?.encoding,
                None => sample_rules().encoding,
            };
            for path in dics.iter().chain(words) {
                existing(path)?;
            }
            let mut parts = Vec::new();
            for path in dics {
                parts.push(load_dic(path, &encoding)?);
            }
            let mut sources = Vec::new();
            for path in words {
                let mut source =
                    WordSource::new(WordSource::parse_words(&read_text(path)?), *script)
                        .with_flags(flags);
                if let Some(pos) = pos {
                    source = source.with_pos(pos);
                }
                sources.push(source);
            }
            parts.push(merge_sources(&sources));
            let merged = merge_dictionaries(&parts);
            let text = serialize_dic(&merged);
            match output {
                Some(path) => write_text(path, &text)?,
                None => print!("{text}"),
            }
            Ok(Verdict::Clean)
        }
        LexiconCommand::WikidataQuery {
            concept,
            limit,
            fetch,
            fixture,
            endpoint,
        } => {
            let query =
                build_sparql_query(concept, *limit).map_err(|e| Failure::Usage(e.to_string()))?;
            let labels = if *fetch {
                fetch_labels(&HttpTransport, endpoint, &query).map_err(|e| match e {
                    FetchError::EndpointUnreachable { .. } => Failure::Network(e.into()),
                    other => Failure::Resource(other.into()),
                })?
            } else if let Some(path) = fixture {
                let transport = FixtureTransport::from_file(existing(path)?)
                    .with_context(|| path.display().to_string())?;
                fetch_labels(&transport, endpoint, &query)
                    .map_err(|e| Failure::Resource(e.into()))?
            } else {
                print!("{query}");
                return Ok(Verdict::Clean);
            };
            let rows: Vec<Vec<String>> = labels.into_iter().map(|l| vec![l]).collect();
            emit(cli, &["label"], &rows);
            Ok(Verdict::Clean)
        }
    }
}
