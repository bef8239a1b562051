use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use monocurve::families::{gorenstein_construct, projection};
use monocurve::homog::HomogeneousMonoid;
use monocurve::input::{parse_list, parse_offsets, parse_sequence};
use monocurve::numsg::{NumericalSemigroup, Sequence};
use monocurve::poset::{hasse_affine, hasse_projective, to_dot};
use monocurve::report::{analyze, AnalyzeOptions};
use monocurve::resolve::Field;
use monocurve::sweep::{append_sweep, shift_sweep, write_csv};
use monocurve::Error;
use serde_json::json;

#[derive(Parser)]
#[command(name = "monocurve", version, about = "Invariants of projective monomial curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Coefficient field for Betti numbers: a prime, or 0 for the rationals.
    #[arg(long, global = true, default_value_t = 32003)]
    field_char: u64,
    /// Divide the input by its gcd instead of rejecting it.
    #[arg(long, global = true)]
    normalize: bool,
    /// Largest total degree for projective Betti numbers (default d + 2).
    #[arg(long, global = true)]
    betti_bound: Option<u64>,
    /// Largest total degree searched for the projective Apery set.
    #[arg(long, global = true, default_value_t = 100_000)]
    apery_bound: u64,
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Leave out Betti numbers (posets and Groebner data only).
    #[arg(long, global = true)]
    skip_betti: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Ap1,
    Aps,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for the curve of a sequence such as 4,5,6,7,8.
    Analyze { sequence: String },
    /// Hasse diagram of an Apery poset in DOT.
    Hasse {
        sequence: String,
        #[arg(long, value_enum, default_value = "ap1")]
        which: Which,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare Betti numbers along j + c_1 < ... < j + c_n.
    ShiftSweep {
        offsets: String,
        #[arg(long, default_value_t = 1)]
        j_min: u64,
        #[arg(long)]
        j_max: u64,
    },
    /// Cohen-Macaulayness of a_1 < ... < a_n < j.
    AppendSweep {
        sequence: String,
        #[arg(long)]
        j_min: u64,
        #[arg(long)]
        j_max: u64,
    },
    /// Gorenstein curve built from a symmetric semigroup given by generators.
    Gorenstein { generators: String },
    /// Report for the sequence with its r-th term (1-based) removed.
    Project { sequence: String, r: usize },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_)
        | Error::InvalidSequence(_)
        | Error::Gcd(_)
        | Error::NotMember(_)
        | Error::NotGradedPoint(..) => 2,
        Error::Inconsistent(_) => 3,
        Error::Hypothesis(_)
        | Error::Degenerate(_)
        | Error::NotSymmetric
        | Error::TwoInSemigroup
        | Error::BoundExhausted(_) => 4,
    }
}

enum Failure {
    Lib(Error),
    Usage(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn format_or(given: Option<Format>, default: Format, allowed: &[Format]) -> Result<Format, Failure> {
    let f = given.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(Failure::Usage("this command does not support the requested --format".into()))
    }
}

fn options(c: &Common) -> Result<AnalyzeOptions, Failure> {
    Ok(AnalyzeOptions {
        field: Field::from_characteristic(c.field_char)?,
        normalize: c.normalize,
        betti_bound: c.betti_bound,
        apery_bound: c.apery_bound,
        skip_betti: c.skip_betti,
    })
}

fn input_sequence(text: &str, normalize: bool) -> Result<Sequence, Failure> {
    let seq = parse_sequence(text)?;
    Ok(if normalize { seq.normalized().0 } else { seq })
}

fn emit(text: &str) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    out.write_all(text.as_bytes())?;
    if !text.ends_with('\n') {
        out.write_all(b"\n")?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    let c = &cli.common;
    match cli.command {
        Command::Analyze { sequence } => {
            format_or(c.format, Format::Json, &[Format::Json])?;
            let report = analyze(&parse_sequence(&sequence)?, &options(c)?)?;
            emit(&report.to_json())
        }
        Command::Hasse { sequence, which, out } => {
            format_or(c.format, Format::Dot, &[Format::Dot])?;
            let seq = input_sequence(&sequence, c.normalize)?;
            let s1 = NumericalSemigroup::new(&seq)?;
            let dot = match which {
                Which::Ap1 => to_dot(&hasse_affine(&s1, &s1.apery_d()), "ap1"),
                Which::Aps => {
                    let monoid = HomogeneousMonoid::new(&seq);
                    let aps = monoid.apery_projective(c.apery_bound)?;
                    to_dot(&hasse_projective(&monoid, &aps), "aps")
                }
            };
            match out {
                Some(path) => Ok(fs::write(path, dot)?),
                None => emit(&dot),
            }
        }
        Command::ShiftSweep { offsets, j_min, j_max } => {
            let format = format_or(c.format, Format::Csv, &[Format::Csv, Format::Json])?;
            let field = Field::from_characteristic(c.field_char)?;
            let rows = shift_sweep(&parse_offsets(&offsets)?, j_min, j_max, field)?;
            write_rows(&rows, format)
        }
        Command::AppendSweep { sequence, j_min, j_max } => {
            let format = format_or(c.format, Format::Csv, &[Format::Csv, Format::Json])?;
            let rows = append_sweep(&input_sequence(&sequence, c.normalize)?, j_min, j_max)?;
            write_rows(&rows, format)
        }
        Command::Gorenstein { generators } => {
            format_or(c.format, Format::Json, &[Format::Json])?;
            let t = NumericalSemigroup::from_generators(&parse_list(&generators)?)?;
            let built = gorenstein_construct(&t)?;
            let report = analyze(&built.sequence, &options(c)?)?;
            let value = json!({
                "semigroup": t.msg(),
                "frobenius": t.frobenius(),
                "sequence": built.sequence.terms(),
                "witness": built.witness,
                "report": serde_json::to_value(&report).expect("report serializes"),
            });
            emit(&serde_json::to_string_pretty(&value).expect("value serializes"))
        }
        Command::Project { sequence, r } => {
            format_or(c.format, Format::Json, &[Format::Json])?;
            let projected = projection(&parse_sequence(&sequence)?, r, false)?;
            let report = analyze(&projected, &options(c)?)?;
            emit(&report.to_json())
        }
    }
}

fn write_rows<R: serde::Serialize>(rows: &[R], format: Format) -> Result<(), Failure> {
    if format == Format::Json {
        return emit(&serde_json::to_string_pretty(rows).expect("rows serialize"));
    }
    write_csv(rows, io::stdout().lock())?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
