//! The `minplus` command-line front end.
//!
//! [`run`] takes its streams as parameters so it can be driven in-process.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use minplus_core::io::{print_matrix, to_json_value};
use minplus_core::{
    bideterminant, permanent, solve, Error, Format, Matrix, MatrixDocument, TropicalScalar,
};
use serde_json::json;

pub mod exit;

use exit::ExitCode;

const EXIT_CODE_HELP: &str = "\
Matrix files: one row per line, entries separated by whitespace, `E` for ε.
JSON input ({\"rows\":m,\"cols\":n,\"entries\":[[...]]}) is also accepted.
Use `-` to read one operand from standard input.

Exit codes:
  0   success
  1   internal error
  2   usage error (unknown subcommand, bad flags, `-` given twice)
  3   input file could not be read
  4   bad token or malformed JSON in a matrix
  5   ragged rows
  6   empty matrix
  7   dimension mismatch
  8   matrix is not square
  9   arithmetic overflow
  10  matrix too large for bideterminant/permanent (n > 10)";

#[derive(Debug, Parser)]
#[command(
    name = "minplus",
    version,
    about = "Matrix calculator over the min-plus semiring (min, +) with ε = +∞",
    after_help = EXIT_CODE_HELP
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, default_value = "text", value_parser = parse_format)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// A ⊕ B, the entrywise minimum.
    Add(Pair),
    /// A ⊗ B, the min-plus product.
    Mul(Pair),
    /// α ⊗ A, adding α to every entry.
    Smul {
        /// Scalar α: an integer or `E`.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_scalar)]
        alpha: TropicalScalar,
        matrix: PathBuf,
    },
    /// A^(k) for a square matrix A.
    Pow {
        matrix: PathBuf,
        /// Exponent; optional with --stabilize.
        #[arg(long = "k", required_unless_present = "stabilize")]
        k: Option<usize>,
        /// Report the least k with A^(k+1) = A^(k).
        #[arg(long)]
        stabilize: bool,
        /// Search bound for --stabilize.
        #[arg(long = "max-k", default_value_t = 64, requires = "stabilize",
              value_parser = clap::value_parser!(u64).range(1..))]
        max_k: u64,
    },
    /// Bideterminant (Δ1, Δ2) of a square matrix.
    Bidet { matrix: PathBuf },
    /// Permanent Δ1 ⊕ Δ2 of a square matrix.
    Perm { matrix: PathBuf },
    /// X(k) for the system X(j+1) = A ⊗ X(j).
    Solve {
        matrix: PathBuf,
        /// Initial column X(0).
        x0: PathBuf,
        #[arg(long = "k")]
        k: usize,
        /// Print every X(0..k) and the stabilization index.
        #[arg(long)]
        trace: bool,
    },
}

impl Command {
    /// The matrix operands in the order they are read.
    pub fn operands(&self) -> Vec<&Path> {
        match self {
            Self::Add(pair) | Self::Mul(pair) => vec![&pair.left, &pair.right],
            Self::Smul { matrix, .. }
            | Self::Pow { matrix, .. }
            | Self::Bidet { matrix }
            | Self::Perm { matrix } => vec![matrix],
            Self::Solve { matrix, x0, .. } => vec![matrix, x0],
        }
    }
}

#[derive(Debug, Args)]
pub struct Pair {
    pub left: PathBuf,
    pub right: PathBuf,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}

fn parse_scalar(s: &str) -> Result<TropicalScalar, String> {
    s.parse()
        .map_err(|e: minplus_core::ParseScalarError| e.to_string())
}

/// A failure with the exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: ExitCode,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: ExitCode::Usage,
            message: message.into(),
        }
    }

    fn core(source: &Path, err: Error) -> Self {
        Self {
            code: ExitCode::from(&err),
            message: format!("{}: {err}", source.display()),
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Self {
            code: ExitCode::from(&err),
            message: err.to_string(),
        }
    }
}

struct Inputs<'a> {
    stdin: &'a mut dyn Read,
}

impl Inputs<'_> {
    fn load(&mut self, path: &Path) -> Result<Matrix, Failure> {
        let (text, name) = if path.as_os_str() == "-" {
            let mut buf = String::new();
            self.stdin.read_to_string(&mut buf).map_err(|e| Failure {
                code: ExitCode::Io,
                message: format!("<stdin>: {e}"),
            })?;
            (buf, "<stdin>".to_owned())
        } else {
            let text = fs::read_to_string(path).map_err(|e| Failure {
                code: ExitCode::Io,
                message: format!("{}: {e}", path.display()),
            })?;
            (text, path.display().to_string())
        };
        MatrixDocument::parse(&text, Some(name))
            .map(|doc| doc.matrix)
            .map_err(|e| Failure::core(path, e))
    }
}

fn stabilization_line(at: Option<usize>, max_k: u64) -> String {
    match at {
        Some(k) => format!("stabilized at k={k}"),
        None => format!("none within {max_k}"),
    }
}

/// Executes a parsed invocation and returns everything it prints.
pub fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<String, Failure> {
    let from_stdin = cli
        .command
        .operands()
        .iter()
        .filter(|p| p.as_os_str() == "-")
        .count();
    if from_stdin > 1 {
        return Err(Failure::usage(
            "`-` (stdin) may be used for only one operand",
        ));
    }
    let mut inputs = Inputs { stdin };
    let format = cli.format;
    let matrix_out = |m: &Matrix| print_matrix(m, format);

    let out = match &cli.command {
        Command::Add(pair) => {
            let (a, b) = (inputs.load(&pair.left)?, inputs.load(&pair.right)?);
            matrix_out(&a.add(&b)?)
        }
        Command::Mul(pair) => {
            let (a, b) = (inputs.load(&pair.left)?, inputs.load(&pair.right)?);
            matrix_out(&a.mul(&b)?)
        }
        Command::Smul { alpha, matrix } => {
            let a = inputs.load(matrix)?;
            matrix_out(&a.scalar_mul(*alpha)?)
        }
        Command::Pow {
            matrix,
            k,
            stabilize,
            max_k,
        } => {
            let a = inputs.load(matrix)?;
            if *stabilize {
                let bound = usize::try_from(*max_k).unwrap_or(usize::MAX);
                let (stable, at) = a.stabilized_power(bound)?;
                let shown = match k {
                    Some(k) => a.power(*k)?,
                    None => stable,
                };
                match format {
                    Format::Text => format!("{shown}\n{}", stabilization_line(at, *max_k)),
                    Format::Json => json!({
                        "matrix": to_json_value(&shown),
                        "stabilized_at": at,
                        "max_k": max_k,
                    })
                    .to_string(),
                }
            } else {
                let k = k.expect("clap requires --k without --stabilize");
                matrix_out(&a.power(k)?)
            }
        }
        Command::Bidet { matrix } => {
            let b = bideterminant(&inputs.load(matrix)?)?;
            match format {
                Format::Text => format!("delta1: {}\ndelta2: {}", b.delta1, b.delta2),
                Format::Json => json!({ "delta1": b.delta1, "delta2": b.delta2 }).to_string(),
            }
        }
        Command::Perm { matrix } => {
            let p = permanent(&inputs.load(matrix)?)?;
            match format {
                Format::Text => p.to_string(),
                Format::Json => json!({ "permanent": p }).to_string(),
            }
        }
        Command::Solve {
            matrix,
            x0,
            k,
            trace,
        } => {
            let (a, x0) = (inputs.load(matrix)?, inputs.load(x0)?);
            let t = solve(&a, &x0, *k)?;
            match (format, trace) {
                (_, false) => matrix_out(t.last()),
                (Format::Text, true) => {
                    let mut blocks: Vec<String> = t
                        .states()
                        .iter()
                        .enumerate()
                        .map(|(j, x)| format!("X({j}):\n{x}"))
                        .collect();
                    if let Some(s) = t.stabilized_at() {
                        blocks.push(format!("stabilized at k={s}"));
                    }
                    blocks.join("\n")
                }
                (Format::Json, true) => json!({
                    "states": t.states().iter().map(to_json_value).collect::<Vec<_>>(),
                    "stabilized_at": t.stabilized_at(),
                })
                .to_string(),
            }
        }
    };
    Ok(out)
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit status. Results go to `stdout`, diagnostics to `stderr`.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{err}");
                    ExitCode::Success.code()
                }
                _ => {
                    let _ = write!(stderr, "{err}");
                    ExitCode::Usage.code()
                }
            };
        }
    };
    match execute(&cli, stdin) {
        Ok(out) => match writeln!(stdout, "{out}") {
            Ok(()) => ExitCode::Success.code(),
            Err(e) => {
                let _ = writeln!(stderr, "error: writing output: {e}");
                ExitCode::Io.code()
            }
        },
        Err(failure) => {
            let _ = writeln!(stderr, "error: {}", failure.message);
            failure.code.code()
        }
    }
}
