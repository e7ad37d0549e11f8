//! Command dispatch for the `wfa` binary.
//!
//! Exit codes: 0 on success (including an "equal" verdict), 1 on usage,
//! parse, or validation errors, 2 when `equiv` finds a divergence or
//! `convert` hits the unsatisfied additive-power condition, so scripts can
//! branch on the outcome.

use crate::format::{parse_automaton, serialize_automaton, FormatError};
use clap::{Parser, Subcommand};
use std::path::{Path, PathBuf};
use wfa_core::automata::{Automaton, AutomatonKind};
use wfa_core::convert::{
    mealy_to_moore, mealy_to_sequential, moore_to_mealy, moore_to_sequential, sequential_to_mealy,
    sequential_to_moore, ConversionReport,
};
use wfa_core::equiv::check_equiv;
use wfa_core::semantics::{behavior, Semantics};
use wfa_core::{MealyWfa, MooreWfa, SequentialWfa, WordPair};

pub const EXIT_OK: u8 = 0;
pub const EXIT_ERROR: u8 = 1;
pub const EXIT_VERDICT: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "wfa",
    version,
    about = "Weighted finite automata with output: validate, evaluate, convert, compare"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a file and report every invariant violation
    Validate { file: PathBuf },

    /// Evaluate a behavior on one word pair and print the value
    Eval {
        file: PathBuf,
        /// One of: seq, 1n, n1, s, cd
        #[arg(long)]
        semantics: String,
        /// Comma-separated input symbols; the empty string is the empty word
        #[arg(long)]
        input: String,
        /// Comma-separated output symbols; the empty string is the empty word
        #[arg(long)]
        output: String,
    },

    /// Convert to another model, preserving the given semantics
    Convert {
        file: PathBuf,
        /// Target kind: sequential, mealy, or moore
        #[arg(long)]
        to: String,
        /// The semantics the conversion must preserve (1n, n1, or s)
        #[arg(long)]
        semantics: String,
        /// Search bound for the additive-power condition
        #[arg(long, default_value_t = 64)]
        p_max: u64,
        /// Write the converted automaton here (default: stdout)
        #[arg(short, long)]
        out: Option<PathBuf>,
    },

    /// Compare two behaviors on all word pairs up to a length bound
    Equiv {
        file1: PathBuf,
        tag1: String,
        file2: PathBuf,
        tag2: String,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
    },

    /// Run a bundled example (example1 or example2) and print its values
    Demo { name: String },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format { path: String, source: FormatError },
    #[error(transparent)]
    Core(#[from] wfa_core::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(wfa_core::Error::PowerConditionUnsatisfied { .. }) => EXIT_VERDICT,
            _ => EXIT_ERROR,
        }
    }
}

/// Run a parsed command line, printing results; returns the exit code.
pub fn run(cli: Cli) -> u8 {
    match execute(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}

fn load(path: &Path) -> Result<Automaton, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.display().to_string(),
        source,
    })?;
    parse_automaton(&text).map_err(|source| CliError::Format {
        path: path.display().to_string(),
        source,
    })
}

fn parse_tag(name: &str) -> Result<Semantics, CliError> {
    Semantics::from_name(name).ok_or_else(|| {
        CliError::Usage(format!(
            "unknown semantics {name:?} (expected seq, 1n, n1, s, or cd)"
        ))
    })
}

fn execute(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Validate { file } => validate(&file),
        Command::Eval {
            file,
            semantics,
            input,
            output,
        } => eval(&file, &semantics, &input, &output),
        Command::Convert {
            file,
            to,
            semantics,
            p_max,
            out,
        } => convert(&file, &to, &semantics, p_max, out.as_deref()),
        Command::Equiv {
            file1,
            tag1,
            file2,
            tag2,
            max_len,
        } => equiv(&file1, &tag1, &file2, &tag2, max_len),
        Command::Demo { name } => demo(&name),
    }
}

fn validate(file: &Path) -> Result<u8, CliError> {
    match load(file) {
        Ok(_) => {
            println!("ok");
            Ok(EXIT_OK)
        }
        Err(CliError::Format {
            source: FormatError::Invalid(violations),
            ..
        }) => {
            for v in violations {
                println!("invalid: {v}");
            }
            Ok(EXIT_ERROR)
        }
        Err(other) => Err(other),
    }
}

fn eval(file: &Path, tag: &str, input: &str, output: &str) -> Result<u8, CliError> {
    let automaton = load(file)?;
    let tag = parse_tag(tag)?;
    let pair = WordPair::parse(input, output)?;
    let value = behavior(&automaton, tag, &pair)?;
    println!("{value}");
    Ok(EXIT_OK)
}

/// The source model a conversion starts from; crisp-deterministic automata
/// convert through their matrix form.
enum Source {
    Sequential(SequentialWfa),
    Mealy(MealyWfa),
    Moore(MooreWfa),
}

fn convert(
    file: &Path,
    to: &str,
    tag: &str,
    p_max: u64,
    out: Option<&Path>,
) -> Result<u8, CliError> {
    let automaton = load(file)?;
    let target_kind = match to {
        "sequential" => AutomatonKind::Sequential,
        "mealy" => AutomatonKind::Mealy,
        "moore" => AutomatonKind::Moore,
        other => {
            return Err(CliError::Usage(format!(
                "unknown target kind {other:?} (expected sequential, mealy, or moore)"
            )))
        }
    };
    let tag = parse_tag(tag)?;

    let source_kind = automaton.kind();
    let source = match automaton {
        Automaton::Sequential(a) => Source::Sequential(a),
        Automaton::Mealy(a) => Source::Mealy(a),
        Automaton::Moore(a) => Source::Moore(a),
        Automaton::CdMealy(a) => Source::Mealy(a.to_general()),
        Automaton::CdMoore(a) => Source::Moore(a.to_general()),
    };

    let no_theorem = || {
        CliError::Usage(format!(
            "no conversion turns a {source_kind} automaton into a {target_kind} automaton \
             preserving the {tag} semantics"
        ))
    };
    let (converted, report): (Automaton, ConversionReport) = match (&source, target_kind, tag) {
        (Source::Mealy(a), AutomatonKind::Sequential, Semantics::S) => {
            let (b, r) = mealy_to_sequential(a)?;
            (b.into(), r)
        }
        (Source::Moore(a), AutomatonKind::Sequential, Semantics::OneN) => {
            let (b, r) = moore_to_sequential(a)?;
            (b.into(), r)
        }
        (Source::Sequential(a), AutomatonKind::Moore, Semantics::OneN) => {
            let (b, r) = sequential_to_moore(a)?;
            (b.into(), r)
        }
        (Source::Mealy(a), AutomatonKind::Moore, Semantics::OneN | Semantics::N1) => {
            let (b, r) = mealy_to_moore(a)?;
            (b.into(), r)
        }
        (Source::Moore(a), AutomatonKind::Mealy, Semantics::OneN) => {
            let (b, r) = moore_to_mealy(a)?;
            (b.into(), r)
        }
        (Source::Sequential(a), AutomatonKind::Mealy, Semantics::S) => {
            let (b, r) = sequential_to_mealy(a, p_max)?;
            (b.into(), r)
        }
        _ => return Err(no_theorem()),
    };

    let document = serialize_automaton(&converted);
    match out {
        Some(path) => {
            std::fs::write(path, document).map_err(|source| CliError::Write {
                path: path.display().to_string(),
                source,
            })?;
            println!("{report}");
            println!("wrote {}", path.display());
        }
        None => {
            eprintln!("{report}");
            print!("{document}");
        }
    }
    Ok(EXIT_OK)
}

fn equiv(
    file1: &Path,
    tag1: &str,
    file2: &Path,
    tag2: &str,
    max_len: usize,
) -> Result<u8, CliError> {
    let a1 = load(file1)?;
    let a2 = load(file2)?;
    let tag1 = parse_tag(tag1)?;
    let tag2 = parse_tag(tag2)?;
    let verdict = check_equiv(&a1, tag1, &a2, tag2, max_len)?;
    if verdict.equal {
        println!(
            "equal: all word pairs up to length {} match",
            verdict.max_len
        );
        Ok(EXIT_OK)
    } else {
        println!(
            "not equal: {} word pair(s) up to length {} diverge",
            verdict.failures, verdict.max_len
        );
        if let Some(d) = verdict.first_divergence {
            println!("{}: {} != {}", d.pair, d.left, d.right);
        }
        Ok(EXIT_VERDICT)
    }
}

const EXAMPLE1: &str = include_str!("../examples/example1.wfa.json");
const EXAMPLE2: &str = include_str!("../examples/example2.wfa.json");

fn demo(name: &str) -> Result<u8, CliError> {
    let (text, pairs): (&str, &[(&str, &str, &str)]) = match name {
        "example1" => (
            EXAMPLE1,
            &[
                ("1n", "0,0,0", "0,1,0"),
                ("s", "0,0,0", "0,1,0"),
                ("n1", "0,0,0", "0,1,0"),
            ],
        ),
        "example2" => (EXAMPLE2, &[("1n", "0,1", "0,0"), ("s", "0,1", "0,0")]),
        other => {
            return Err(CliError::Usage(format!(
                "unknown demo {other:?} (expected example1 or example2)"
            )))
        }
    };
    let automaton = parse_automaton(text).map_err(|source| CliError::Format {
        path: format!("built-in {name}"),
        source,
    })?;
    println!(
        "{name}: {} {} automaton, {} states",
        automaton.semiring(),
        automaton.kind(),
        automaton.states().len()
    );
    for (tag, input, output) in pairs {
        let tag = parse_tag(tag)?;
        let pair = WordPair::parse(input, output)?;
        let value = behavior(&automaton, tag, &pair)?;
        println!("{tag}({pair}) = {value}");
    }
    Ok(EXIT_OK)
}
