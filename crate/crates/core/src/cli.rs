//! Command-line front end behind the `sqfw` binary.
//!
//! Exit codes: 0 success or square-free, 1 a property violation was found,
//! 2 usage or parse error, 3 resource limit, 4 I/O failure.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::alphabet::{relabel_to_balanced, relabel_to_ternary, Balanced, Bit, Symbol, Ternary, Trit, Word};
use crate::balanced_ternary::encode;
use crate::dfao::{b_at, b_range_with, squarefree_dfao, to_dot};
use crate::error::Error;
use crate::limits::{half_width, Limits};
use crate::morphism::phi_window_with;
use crate::repetition::find_square;
use crate::verification::{verify_all, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "sqfw", version, about = "Generate and check a ternary full-infinite square-free word")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a window of the sequence.
    Generate(GenerateArgs),
    /// Print i, its balanced ternary digits (high to low) and b_i.
    At {
        #[arg(allow_negative_numbers = true)]
        i: i64,
    },
    /// Exit 0 if the input word is square-free, 1 with a witness otherwise.
    Check {
        /// Input file, or `-` for stdin.
        #[arg(default_value = "-")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = CheckAlphabet::Auto)]
        alphabet: CheckAlphabet,
    },
    /// Run the verification suite and write a JSON-lines report.
    Verify(VerifyArgs),
    /// Print the three-state automaton as GraphViz DOT.
    Dot,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, value_enum, default_value_t = Definition::Morphism)]
    pub definition: Definition,
    /// Depth: the window of indices -(3^n-1)/2 ..= (3^n-1)/2.
    #[arg(long)]
    pub n: Option<u32>,
    /// Inclusive index range `lo..hi` (automaton only), e.g. `-13..13`.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "n")]
    pub range: Option<String>,
    #[arg(long, value_enum, default_value_t = OutputAlphabet::Ternary123)]
    pub alphabet: OutputAlphabet,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 9)]
    pub n_max: u32,
    #[arg(long, default_value_t = VerifyConfig::default().seed)]
    pub seed: u64,
    #[arg(long, default_value = "sqfw-report.jsonl")]
    pub report: PathBuf,
    /// Corrupt one symbol of every iterate fed to the theorem checks.
    #[arg(long)]
    pub fault_inject: bool,
    /// Morphism seed symbol. Only 2 is expected to pass; 1 and 3 are exploratory.
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=3))]
    pub start_symbol: u8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Definition {
    Morphism,
    Dfao,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputAlphabet {
    Ternary123,
    Balanced,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Spaced,
    Jsonl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckAlphabet {
    /// Smallest known alphabet containing every input character.
    Auto,
    Ternary123,
    Balanced,
    Binary,
    Digits012,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn io(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_IO,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::DepthLimit { .. } | Error::RangeTooLarge { .. } => EXIT_RESOURCE,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Parses `lo..hi` with optional signs on either bound.
pub fn parse_range(text: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = text
        .split_once("..")
        .ok_or_else(|| format!("range {text:?} is not of the form lo..hi"))?;
    let parse = |s: &str| {
        s.trim()
            .parse::<i64>()
            .map_err(|_| format!("range bound {s:?} is not an integer"))
    };
    Ok((parse(lo)?, parse(hi)?))
}

fn render<S: Symbol>(lo: i64, word: &Word<S>, format: Format) -> String {
    match format {
        Format::Plain => format!("{word}\n"),
        Format::Spaced => format!("{}\n", word.to_spaced()),
        Format::Jsonl => word
            .iter()
            .enumerate()
            .map(|(k, s)| format!("{}\n", json!({ "index": lo + k as i64, "symbol": s.value() })))
            .collect(),
    }
}

fn generate(args: &GenerateArgs, limits: &Limits) -> Result<String, Failure> {
    match args.definition {
        Definition::Morphism => {
            if args.range.is_some() {
                return Err(Failure::usage("--range applies to --definition dfao; use --n"));
            }
            let n = args
                .n
                .ok_or_else(|| Failure::usage("--definition morphism requires --n"))?;
            let window = phi_window_with(n, limits)?;
            let lo = window.lo();
            Ok(match args.alphabet {
                OutputAlphabet::Ternary123 => render(lo, window.word(), args.format),
                OutputAlphabet::Balanced => render(lo, &relabel_to_balanced(window.word()), args.format),
            })
        }
        Definition::Dfao => {
            let (lo, hi) = match (&args.range, args.n) {
                (Some(r), _) => parse_range(r).map_err(Failure::usage)?,
                (None, Some(n)) => {
                    limits.check_depth(n)?;
                    (-half_width(n), half_width(n))
                }
                (None, None) => return Err(Failure::usage("--definition dfao requires --range or --n")),
            };
            let word = b_range_with(lo, hi, limits)?;
            Ok(match args.alphabet {
                OutputAlphabet::Ternary123 => render(lo, &relabel_to_ternary(&word), args.format),
                OutputAlphabet::Balanced => render(lo, &word, args.format),
            })
        }
    }
}

fn at(i: i64) -> String {
    format!("{} {} {}\n", i, encode(i), b_at(i).label())
}

fn first_square<S: Symbol>(text: &str) -> Result<Option<crate::repetition::SquareWitness>, Failure> {
    let word: Word<S> = Word::parse(text)?;
    Ok(find_square(&word))
}

fn detect_alphabet(text: &str) -> Option<CheckAlphabet> {
    let chars = || text.chars().filter(|c| !c.is_ascii_whitespace());
    if chars().all(|c| matches!(c, '0' | '1')) {
        Some(CheckAlphabet::Binary)
    } else if chars().all(|c| matches!(c, '0' | '1' | '2')) {
        Some(CheckAlphabet::Digits012)
    } else if chars().all(|c| matches!(c, '1' | '2' | '3')) {
        Some(CheckAlphabet::Ternary123)
    } else if chars().all(|c| matches!(c, '-' | '0' | '+')) {
        Some(CheckAlphabet::Balanced)
    } else {
        None
    }
}

fn check(text: &str, alphabet: CheckAlphabet) -> Result<(i32, String), Failure> {
    let alphabet = match alphabet {
        CheckAlphabet::Auto => detect_alphabet(text)
            .ok_or_else(|| Failure::usage("input is not a word over {0,1,2}, {1,2,3} or {-,0,+}"))?,
        a => a,
    };
    let square = match alphabet {
        CheckAlphabet::Ternary123 => first_square::<Ternary>(text)?,
        CheckAlphabet::Balanced => first_square::<Balanced>(text)?,
        CheckAlphabet::Binary => first_square::<Bit>(text)?,
        CheckAlphabet::Digits012 | CheckAlphabet::Auto => first_square::<Trit>(text)?,
    };
    Ok(match square {
        Some(sq) => (EXIT_VIOLATION, format!("{sq}\n")),
        None => (EXIT_OK, "square-free\n".to_string()),
    })
}

fn read_input(path: &PathBuf, stdin: &mut dyn Read) -> Result<String, Failure> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        stdin
            .read_to_string(&mut text)
            .map_err(|e| Failure::io(format!("reading stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path)
            .map_err(|e| Failure::io(format!("reading {}: {e}", path.display())))?;
    }
    Ok(text)
}

fn verify(args: &VerifyArgs, limits: &Limits) -> Result<(i32, String), Failure> {
    limits.check_depth(args.n_max)?;
    let config = VerifyConfig {
        seed: args.seed,
        fault_inject: args.fault_inject,
        start_symbol: Ternary::from_value(args.start_symbol as i8).expect("clap restricts to 1..=3"),
        limits: *limits,
        ..VerifyConfig::with_n_max(args.n_max)
    };
    let report = verify_all(config);
    report
        .save(&args.report)
        .map_err(|e| Failure::io(format!("writing {}: {e}", args.report.display())))?;
    let code = if report.all_passed() { EXIT_OK } else { EXIT_VIOLATION };
    Ok((code, format!("{report}\nreport written to {}\n", args.report.display())))
}

/// Runs the CLI on explicit arguments and streams; returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let limits = match Limits::from_env() {
        Ok(l) => l,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    let result = match &cli.command {
        Command::Generate(args) => generate(args, &limits).map(|out| (EXIT_OK, out)),
        Command::At { i } => Ok((EXIT_OK, at(*i))),
        Command::Check { input, alphabet } => {
            read_input(input, stdin).and_then(|text| check(&text, *alphabet))
        }
        Command::Verify(args) => verify(args, &limits),
        Command::Dot => Ok((EXIT_OK, to_dot(&squarefree_dfao()))),
    };
    match result {
        Ok((code, out)) => {
            if stdout.write_all(out.as_bytes()).is_err() {
                return EXIT_IO;
            }
            code
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    run(
        std::env::args_os(),
        &mut std::io::stdin().lock(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}
