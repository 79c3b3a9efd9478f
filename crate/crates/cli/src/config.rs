//! Argument parsing and the validated run configuration.

use std::fmt;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use stringcone::pathcrystal::DEFAULT_NODE_CAP;
use stringcone::{CartanDatum, TypeLabel, Weight, WeylWord};

use crate::error::CliError;

#[derive(Parser, Debug)]
#[command(name = "stringcone", version, about = "String cones of crystal bases and toric degeneration certificates")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Enumerate the crystal B(lambda) and dump its graph
    Crystal(Args),
    /// List the integral points of the string polytope of lambda
    Polytope(Args),
    /// Infer and certify the weighted string cone
    Cone(Args),
    /// Emit a toric degeneration certificate as JSON
    Degenerate(Args),
    /// Run the acceptance suite
    Verify(Args),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubcommandKind {
    Crystal,
    Polytope,
    Cone,
    Degenerate,
    Verify,
}

impl Command {
    pub fn split(self) -> (SubcommandKind, Args) {
        match self {
            Command::Crystal(a) => (SubcommandKind::Crystal, a),
            Command::Polytope(a) => (SubcommandKind::Polytope, a),
            Command::Cone(a) => (SubcommandKind::Cone, a),
            Command::Degenerate(a) => (SubcommandKind::Degenerate, a),
            Command::Verify(a) => (SubcommandKind::Verify, a),
        }
    }
}

fn parse_type(s: &str) -> Result<TypeLabel, String> {
    s.parse().map_err(|e: stringcone::Error| e.to_string())
}

fn parse_word(s: &str) -> Result<WeylWord, String> {
    s.parse().map_err(|e: stringcone::Error| e.to_string())
}

fn parse_weight(s: &str) -> Result<Weight, String> {
    s.parse().map_err(|e: stringcone::Error| e.to_string())
}

#[derive(clap::Args, Debug, Clone)]
pub struct Args {
    /// Root system type (A, B, C, D, G)
    #[arg(long = "type", value_parser = parse_type)]
    pub type_label: Option<TypeLabel>,
    #[arg(long)]
    pub rank: Option<usize>,
    /// Reduced word of the longest element, comma separated (default: a fixed longest word)
    #[arg(long, value_parser = parse_word)]
    pub word: Option<WeylWord>,
    /// Dominant weight in fundamental coordinates, comma separated
    #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
    pub lambda: Option<Weight>,
    /// Reduced word of a Weyl group element for the Demazure face
    #[arg(long, value_parser = parse_word)]
    pub demazure: Option<WeylWord>,
    #[arg(long = "level-bound", default_value_t = 2)]
    pub level_bound: i64,
    /// Node cap for crystal enumeration
    #[arg(long, default_value_t = DEFAULT_NODE_CAP)]
    pub cap: usize,
    /// Output path (stdout when absent)
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads (0: rayon default)
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
    /// Record stage timings in reports
    #[arg(long)]
    pub timings: bool,
}

/// Validated configuration. Its canonical text form is one `key=value` per line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub type_label: Option<TypeLabel>,
    pub rank: Option<usize>,
    pub w0_word: Option<WeylWord>,
    pub lambda: Option<Weight>,
    pub demazure_word: Option<WeylWord>,
    pub level_bound: i64,
    pub node_cap: usize,
    pub output: Option<PathBuf>,
    pub threads: usize,
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            type_label: None,
            rank: None,
            w0_word: None,
            lambda: None,
            demazure_word: None,
            level_bound: 2,
            node_cap: DEFAULT_NODE_CAP,
            output: None,
            threads: 0,
            timings: false,
        }
    }
}

impl RunConfig {
    pub fn from_args(kind: SubcommandKind, args: Args) -> Result<Self, CliError> {
        let config = RunConfig {
            type_label: args.type_label,
            rank: args.rank,
            w0_word: args.word,
            lambda: args.lambda,
            demazure_word: args.demazure,
            level_bound: args.level_bound,
            node_cap: args.cap,
            output: args.out,
            threads: args.threads,
            timings: args.timings,
        };
        config.validate(kind)?;
        Ok(config)
    }

    pub fn validate(&self, kind: SubcommandKind) -> Result<(), CliError> {
        if self.level_bound < 0 {
            return Err(CliError::Usage(format!("--level-bound must be nonnegative, got {}", self.level_bound)));
        }
        if kind == SubcommandKind::Verify {
            return Ok(());
        }
        let datum = self.datum()?;
        if let Some(w) = &self.w0_word {
            datum.require_longest(w).map_err(|e| CliError::Usage(e.to_string()))?;
        }
        if let Some(w) = &self.demazure_word {
            datum.require_reduced(w).map_err(|e| CliError::Usage(e.to_string()))?;
        }
        if let Some(l) = &self.lambda {
            datum.check_dominant(l).map_err(|e| CliError::Usage(e.to_string()))?;
        }
        if matches!(kind, SubcommandKind::Crystal | SubcommandKind::Polytope) && self.lambda.is_none() {
            return Err(CliError::Usage("--lambda is required".into()));
        }
        Ok(())
    }

    pub fn datum(&self) -> Result<CartanDatum, CliError> {
        let label = self.type_label.ok_or_else(|| CliError::Usage("--type is required".into()))?;
        let rank = self.rank.ok_or_else(|| CliError::Usage("--rank is required".into()))?;
        CartanDatum::new(label, rank).map_err(|e| CliError::Usage(e.to_string()))
    }

    /// The configured word, or the default longest word of the datum.
    pub fn word(&self, datum: &CartanDatum) -> WeylWord {
        self.w0_word.clone().unwrap_or_else(|| datum.longest_word())
    }

    pub fn canonical(&self) -> String {
        self.to_string()
    }

    pub fn parse_canonical(text: &str) -> Result<Self, CliError> {
        let bad = |line: &str| CliError::Usage(format!("malformed config line '{line}'"));
        let mut config = RunConfig::default();
        for line in text.lines().filter(|l| !l.is_empty()) {
            let (key, value) = line.split_once('=').ok_or_else(|| bad(line))?;
            let usage = |e: stringcone::Error| CliError::Usage(e.to_string());
            match key {
                "type" => config.type_label = Some(value.parse().map_err(usage)?),
                "rank" => config.rank = Some(value.parse().map_err(|_| bad(line))?),
                "word" => config.w0_word = Some(value.parse().map_err(usage)?),
                "lambda" => config.lambda = Some(value.parse().map_err(usage)?),
                "demazure" => config.demazure_word = Some(value.parse().map_err(usage)?),
                "level-bound" => config.level_bound = value.parse().map_err(|_| bad(line))?,
                "cap" => config.node_cap = value.parse().map_err(|_| bad(line))?,
                "out" => config.output = Some(PathBuf::from(value)),
                "threads" => config.threads = value.parse().map_err(|_| bad(line))?,
                "timings" => config.timings = value.parse().map_err(|_| bad(line))?,
                _ => return Err(bad(line)),
            }
        }
        Ok(config)
    }
}

impl fmt::Display for RunConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(t) = self.type_label {
            writeln!(f, "type={t}")?;
        }
        if let Some(r) = self.rank {
            writeln!(f, "rank={r}")?;
        }
        if let Some(w) = &self.w0_word {
            writeln!(f, "word={}", if w.is_empty() { "e".to_string() } else { w.to_string() })?;
        }
        if let Some(l) = &self.lambda {
            writeln!(f, "lambda={l}")?;
        }
        if let Some(w) = &self.demazure_word {
            writeln!(f, "demazure={}", if w.is_empty() { "e".to_string() } else { w.to_string() })?;
        }
        writeln!(f, "level-bound={}", self.level_bound)?;
        writeln!(f, "cap={}", self.node_cap)?;
        if let Some(p) = &self.output {
            writeln!(f, "out={}", p.display())?;
        }
        writeln!(f, "threads={}", self.threads)?;
        writeln!(f, "timings={}", self.timings)
    }
}
