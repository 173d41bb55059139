use std::path::PathBuf;

use ckb_spell::evaluation::{MorphAspect, ReportFormat};
use ckb_spell::lexbuild::{SourceScript, DEFAULT_ENDPOINT, DEFAULT_LIMIT, ENDPOINT_ENV};
use ckb_spell::script::Direction;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "ckb-spell",
    version,
    about = "Sorani Kurdish spell checker and morphological analyzer"
)]
pub struct Cli {
    /// Dictionary file; defaults to the bundled sample lexicon
    #[arg(long, global = true, env = "CKB_SPELL_DIC")]
    pub dic: Option<PathBuf>,

    /// Affix file; defaults to the bundled sample rules
    #[arg(long, global = true, env = "CKB_SPELL_AFF")]
    pub aff: Option<PathBuf>,

    /// Output layout: table, tsv or json
    #[arg(long, global = true, default_value = "table", value_parser = parse_format)]
    pub format: ReportFormat,

    #[command(subcommand)]
    pub command: Command,
}

fn parse_format(s: &str) -> Result<ReportFormat, String> {
    s.parse()
}

fn parse_direction(s: &str) -> Result<Direction, String> {
    s.parse()
}

fn parse_aspect(s: &str) -> Result<MorphAspect, String> {
    s.parse()
}

fn parse_script(s: &str) -> Result<SourceScript, String> {
    s.parse()
}

#[derive(Debug, Args, Clone, Copy)]
pub struct SuggestArgs {
    #[arg(long, default_value_t = 2)]
    pub max_distance: usize,
    #[arg(long, default_value_t = 10)]
    pub max_results: usize,
    /// Also propose splitting the word in two
    #[arg(long)]
    pub splits: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check words; exits 1 if any is misspelled
    Check {
        #[arg(required = true)]
        words: Vec<String>,
    },
    /// Ranked corrections for a word
    Suggest {
        word: String,
        #[command(flatten)]
        opts: SuggestArgs,
    },
    /// Morphological analyses of a word
    Analyze { word: String },
    /// Verb stems of a word
    Stem { word: String },
    /// Every form the rules derive from a lexicon entry
    Generate { lemma: String },
    /// Frequency-list baseline
    Baseline {
        #[command(subcommand)]
        command: BaselineCommand,
    },
    /// Evaluation harness
    Eval {
        #[command(subcommand)]
        command: EvalCommand,
    },
    /// Lexicon maintenance
    Lexicon {
        #[command(subcommand)]
        command: LexiconCommand,
    },
    /// Convert between Latin and Arabic script; reads stdin without TEXT
    Transliterate {
        #[arg(long, value_parser = parse_direction, default_value = "latin-to-arabic")]
        direction: Direction,
        text: Vec<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum BaselineCommand {
    /// Count corpus tokens into a frequency list
    Build {
        #[arg(required = true)]
        corpus: Vec<PathBuf>,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, default_value_t = ckb_spell::baseline::DEFAULT_MIN_FREQ)]
        min_freq: u64,
    },
    /// Check words against a frequency list
    Check {
        #[arg(long)]
        list: PathBuf,
        #[arg(required = true)]
        words: Vec<String>,
    },
    /// Nearest admitted words by edit distance
    Suggest {
        #[arg(long)]
        list: PathBuf,
        word: String,
        #[arg(short, default_value_t = 10)]
        k: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum System {
    Engine,
    Baseline,
}

#[derive(Debug, Subcommand)]
pub enum EvalCommand {
    /// Confusion counts, metrics and suggestion ranks on a spelling test set
    Spell {
        testset: PathBuf,
        #[arg(long, value_enum, default_value = "engine")]
        system: System,
        /// Frequency list for the baseline; built from the bundled toy corpus if absent
        #[arg(long)]
        list: Option<PathBuf>,
        /// Leave out the merged-word cases
        #[arg(long)]
        drop_spaced: bool,
        #[command(flatten)]
        opts: SuggestArgs,
    },
    /// Segmentation, part-of-speech or stem accuracy on a morphology gold set
    Morph {
        testset: PathBuf,
        /// Repeatable; all three when absent
        #[arg(long, value_parser = parse_aspect)]
        aspect: Vec<MorphAspect>,
    },
    /// Share of distinct words in a text that receive an analysis
    Coverage { wordlist: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum LexiconCommand {
    /// Report malformed entries and unresolved flags; exits 1 on any
    Validate,
    /// Merge dictionaries and word lists into one sorted dictionary
    Merge {
        dics: Vec<PathBuf>,
        /// Word list, one word per line
        #[arg(long)]
        words: Vec<PathBuf>,
        #[arg(long, value_parser = parse_script, default_value = "arabic")]
        script: SourceScript,
        #[arg(long, default_value = "")]
        flags: String,
        #[arg(long)]
        pos: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the label query for a concept, or run it
    WikidataQuery {
        concept: String,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
        /// Send the query to the endpoint
        #[arg(long, conflicts_with = "fixture")]
        fetch: bool,
        /// Replay a recorded response instead of fetching
        #[arg(long)]
        fixture: Option<PathBuf>,
        #[arg(long, env = ENDPOINT_ENV, default_value = DEFAULT_ENDPOINT)]
        endpoint: String,
    },
}
