// SPDX-License-Identifier: MIT OR Apache-2.0

//! Command-line front end.
//!
//! Exit codes: 0 on success (a `null` result included), 2 for invalid
//! input or usage, 3 when `--check` finds a disagreement with the
//! brute-force oracle.

pub mod bench;
pub mod input;
pub mod output;

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::hci::{compute_hci, HciAnswer, HciStream};
use crate::minplus::{blocked_convolution, naive_convolution, MinPlusVector};
use crate::oracle::{brute_convolution, brute_hci, brute_max_sums, brute_psei};
use crate::psei::{compute_psei, max_consecutive_sums};
use crate::scalar::{NumericMode, Scalar};
use crate::sequence::{PairSequence, Scored};

pub use input::{FromToken, RawRecord, Token};
pub use output::{render_convolution, render_hci, render_max_sums, render_psei, JsonScalar};

/// Inputs longer than this skip `--check` with a warning.
pub const CHECK_LIMIT: usize = 2000;

/// Relative tolerance for `--check` in floating mode.
const FLOAT_CHECK_TOL: f64 = 1e-9;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }

    fn mismatch(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_MISMATCH,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::input(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::input(format!("I/O error: {e}"))
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Csv,
    Jsonl,
}

#[derive(Debug, Parser)]
#[command(name = "conint", version, about = "Constrained optimal intervals in number-pair sequences")]
pub struct Cli {
    /// Input file, or `-` for standard input.
    #[arg(long, global = true, default_value = "-")]
    pub input: String,

    #[arg(long, global = true, value_enum, default_value_t = InputFormat::Csv)]
    pub format: InputFormat,

    /// Integer arithmetic with exact comparisons.
    #[arg(long, global = true, conflicts_with = "float")]
    pub exact: bool,

    /// Floating-point arithmetic.
    #[arg(long, global = true)]
    pub float: bool,

    /// Cross-verify against the brute-force oracle (inputs up to 2000 items).
    #[arg(long, global = true)]
    pub check: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Maximum confidence among intervals with hit-sum at least `--lh`.
    Hci {
        #[arg(long, allow_hyphen_values = true)]
        lh: String,
        /// Read pairs one at a time and print the current answer per line.
        #[arg(long)]
        stream: bool,
    },
    /// Maximum eccentricity among intervals of length at least `--ls`.
    Psei {
        #[arg(long)]
        ls: usize,
    },
    /// Min-plus convolution of two operand files (one value per line, `inf` for top).
    Convolve {
        #[arg(long)]
        x: PathBuf,
        #[arg(long)]
        y: PathBuf,
        /// Use the quadratic reference instead of the blocked product.
        #[arg(long)]
        naive: bool,
    },
    /// Largest sum of `j` consecutive hit values for every `j`.
    Maxsums,
    /// Time the fast paths on seeded random instances.
    Bench {
        /// Comma-separated sizes; empty for a header-only report.
        #[arg(long, default_value = "")]
        sizes: String,
    },
}

impl Cli {
    fn forced_mode(&self) -> Option<NumericMode> {
        match (self.exact, self.float) {
            (true, _) => Some(NumericMode::Exact),
            (_, true) => Some(NumericMode::Float),
            _ => None,
        }
    }
}

/// Scalars usable by the front end.
pub trait CliScalar: JsonScalar + FromToken {}

impl<T: JsonScalar + FromToken> CliScalar for T {}

/// Parses `argv` (program name first) and runs one command.
///
/// `stdin` is read when `--input` is `-`.
pub fn run_cli<I, S>(argv: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match dispatch(&cli, stdin, out, err) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}

fn open(path: &Path) -> CliResult<Box<dyn BufRead>> {
    let file = File::open(path)
        .map_err(|e| CliError::input(format!("cannot open {}: {e}", path.display())))?;
    Ok(Box::new(BufReader::new(file)))
}

fn with_input<R>(
    cli: &Cli,
    stdin: &mut dyn BufRead,
    f: impl FnOnce(&mut dyn BufRead) -> CliResult<R>,
) -> CliResult<R> {
    if cli.input == "-" {
        f(stdin)
    } else {
        f(&mut *open(Path::new(&cli.input))?)
    }
}

fn dispatch(cli: &Cli, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<()> {
    match &cli.command {
        Command::Hci { lh, stream: true } => {
            let lh = Token::parse(lh).ok_or_else(|| CliError::input(format!("--lh: cannot parse {lh:?}")))?;
            let float = cli.float || (!cli.exact && !lh.is_int());
            with_input(cli, stdin, |src| {
                if float {
                    stream_hci::<f64>(cli, src, lh, out, err)
                } else {
                    stream_hci::<i64>(cli, src, lh, out, err)
                }
            })
        }
        Command::Hci { lh, stream: false } => {
            let lh = Token::parse(lh).ok_or_else(|| CliError::input(format!("--lh: cannot parse {lh:?}")))?;
            let records = with_input(cli, stdin, |src| input::read_records(src, cli.format))?;
            let all_int = lh.is_int() && records.iter().all(RawRecord::all_int);
            match input::choose_mode(cli.forced_mode(), all_int)? {
                NumericMode::Exact => offline_hci::<i64>(cli, &records, lh, out, err),
                NumericMode::Float => offline_hci::<f64>(cli, &records, lh, out, err),
            }
        }
        Command::Psei { ls } => {
            let records = with_input(cli, stdin, |src| input::read_records(src, cli.format))?;
            let all_int = records.iter().all(RawRecord::all_int);
            match input::choose_mode(cli.forced_mode(), all_int)? {
                NumericMode::Exact => run_psei::<i64>(cli, &records, *ls, out, err),
                NumericMode::Float => run_psei::<f64>(cli, &records, *ls, out, err),
            }
        }
        Command::Maxsums => {
            let records = with_input(cli, stdin, |src| input::read_records(src, cli.format))?;
            let all_int = records.iter().all(RawRecord::all_int);
            match input::choose_mode(cli.forced_mode(), all_int)? {
                NumericMode::Exact => run_max_sums::<i64>(cli, &records, out, err),
                NumericMode::Float => run_max_sums::<f64>(cli, &records, out, err),
            }
        }
        Command::Convolve { x, y, naive } => {
            let xf = input::read_operand(&mut *open(x)?, "x")?;
            let yf = input::read_operand(&mut *open(y)?, "y")?;
            match input::choose_mode(cli.forced_mode(), xf.all_int() && yf.all_int())? {
                NumericMode::Exact => run_convolve::<i64>(cli, &xf, &yf, *naive, out, err),
                NumericMode::Float => run_convolve::<f64>(cli, &xf, &yf, *naive, out, err),
            }
        }
        Command::Bench { sizes } => {
            let sizes = parse_sizes(sizes)?;
            bench::run_bench(&sizes, out)?;
            Ok(())
        }
    }
}

fn parse_sizes(text: &str) -> CliResult<Vec<usize>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            let v = s
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite() && *v >= 1.0 && v.fract() == 0.0 && *v <= 1e9)
                .ok_or_else(|| CliError::input(format!("--sizes: invalid size {s:?}")))?;
            Ok(v as usize)
        })
        .collect()
}

fn should_check(cli: &Cli, n: usize, err: &mut dyn Write) -> bool {
    if !cli.check {
        return false;
    }
    if n > CHECK_LIMIT {
        let _ = writeln!(err, "warning: --check skipped for {n} items (limit {CHECK_LIMIT})");
        return false;
    }
    true
}

fn same_score(a: f64, b: f64) -> bool {
    a == b || (a - b).abs() <= FLOAT_CHECK_TOL * a.abs().max(b.abs()).max(1.0)
}

fn check_hci<T: Scalar>(got: &HciAnswer<T>, want: &HciAnswer<T>) -> CliResult<()> {
    let agree = match (&got.best, &want.best) {
        (None, None) => true,
        (Some(g), Some(w)) => match T::MODE {
            NumericMode::Exact => g.cmp_conf(w).is_eq(),
            NumericMode::Float => same_score(g.confidence(), w.confidence()),
        },
        _ => false,
    };
    if agree {
        Ok(())
    } else {
        Err(CliError::mismatch(format!(
            "oracle mismatch: fast {:?}, brute force {:?}",
            got.best, want.best
        )))
    }
}

fn offline_hci<T: CliScalar>(
    cli: &Cli,
    records: &[RawRecord],
    lh: Token,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult<()> {
    let seq: PairSequence<T> = input::build_sequence(records)?;
    let lower: T = input::convert(lh, 0).map_err(|_| CliError::input("--lh must be an integer in exact mode"))?;
    let answer = compute_hci(&seq, lower)?;
    writeln!(out, "{}", render_hci(&answer))?;
    if should_check(cli, seq.len(), err) {
        check_hci(&answer, &brute_hci(&seq, lower))?;
    }
    Ok(())
}

fn stream_hci<T: CliScalar>(
    cli: &Cli,
    src: &mut dyn BufRead,
    lh: Token,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult<()> {
    let lower: T = input::convert(lh, 0)
        .map_err(|_| CliError::input("--lh must be an integer in exact mode"))?;
    let mut stream = HciStream::new(lower)?;
    let mut pairs = Vec::new();
    for (idx, line) in src.lines().enumerate() {
        let line = line?;
        let Some(rec) = input::parse_record(&line, idx + 1, cli.format)? else { continue };
        let pair = input::pair_from_record::<T>(&rec)?;
        let answer = stream
            .push(pair)
            .map_err(|e| input::locate(with_position(e, 1), &[rec.line]))?;
        pairs.push(pair);
        writeln!(out, "{}", render_hci(&answer))?;
        out.flush()?;
    }
    if should_check(cli, pairs.len(), err) {
        let seq = PairSequence::new(pairs)?;
        check_hci(&stream.answer(), &brute_hci(&seq, lower))?;
    }
    Ok(())
}

fn with_position(e: Error, position: usize) -> Error {
    match e {
        Error::NonPositiveSupport { .. } => Error::NonPositiveSupport { position },
        Error::NonFinite { .. } => Error::NonFinite { position },
        Error::Magnitude { .. } => Error::Magnitude { position },
        other => other,
    }
}

fn run_psei<T: CliScalar>(
    cli: &Cli,
    records: &[RawRecord],
    min_len: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult<()> {
    let seq: PairSequence<T> = input::build_sequence(records)?;
    let answer = compute_psei(&seq, min_len)?;
    writeln!(out, "{}", render_psei(&answer))?;
    if should_check(cli, seq.len(), err) {
        let want = brute_psei(&seq, min_len).expect("length bound already validated");
        let agree = match T::MODE {
            NumericMode::Exact => answer.best.cmp_ecc(&want).is_eq(),
            NumericMode::Float => same_score(answer.eccentricity(), want.eccentricity()),
        };
        if !agree {
            return Err(mismatch_scored(&answer.best, &want));
        }
    }
    Ok(())
}

fn mismatch_scored<T: Scalar>(got: &Scored<T>, want: &Scored<T>) -> CliError {
    CliError::mismatch(format!("oracle mismatch: fast {got:?}, brute force {want:?}"))
}

fn run_max_sums<T: CliScalar>(
    cli: &Cli,
    records: &[RawRecord],
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult<()> {
    let seq: PairSequence<T> = input::build_sequence(records)?;
    if !seq.is_plain() {
        return Err(CliError::input("maxsums needs a plain sequence (all supports 1)"));
    }
    let hits: Vec<T> = seq.hits().collect();
    let profile = max_consecutive_sums(&hits)?;
    writeln!(out, "{}", render_max_sums(&profile))?;
    if should_check(cli, hits.len(), err) {
        let want = brute_max_sums(&hits);
        let agree = profile
            .as_slice()
            .iter()
            .zip(&want)
            .all(|(a, b)| same_score(a.to_f64(), b.to_f64()) && (T::MODE == NumericMode::Float || a == b));
        if !agree {
            return Err(CliError::mismatch("oracle mismatch in maximum consecutive sums"));
        }
    }
    Ok(())
}

fn run_convolve<T: CliScalar>(
    cli: &Cli,
    xf: &input::OperandFile,
    yf: &input::OperandFile,
    naive: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult<()> {
    let x: MinPlusVector<T> = xf.to_vector("x")?;
    let y: MinPlusVector<T> = yf.to_vector("y")?;
    let z = if naive {
        naive_convolution(&x, &y)?
    } else {
        blocked_convolution(&x, &y)?
    };
    writeln!(out, "{}", render_convolution(&z))?;
    if should_check(cli, x.len(), err) && brute_convolution(&x, &y) != z {
        return Err(CliError::mismatch("oracle mismatch in min-plus convolution"));
    }
    Ok(())
}
