//! `chern`: command-line front end for the Chern-number library.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use chern_core::{Error, ErrorKind};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Parser)]
#[command(name = "chern", version, about = "Exact Chern numbers of projectivized bundles")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Family model JSON: {"w", "t", "genus", "polarization"}.
    #[arg(long, global = true, value_name = "PATH")]
    model_file: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a ring presentation (file or catalog name).
    Validate {
        #[arg(long, value_name = "PATH", conflicts_with = "ring")]
        input: Option<PathBuf>,
        /// Catalog expression, e.g. "pp1 x curve(2)".
        #[arg(long, required_unless_present = "input")]
        ring: Option<String>,
    },
    /// Segre classes of a bundle.
    Segre {
        #[arg(long, value_name = "PATH", required_unless_present = "symbolic")]
        input: Option<PathBuf>,
        /// Use free Chern data e1.. and b1.. instead of a bundle file.
        #[arg(long, requires = "k")]
        symbolic: bool,
        #[arg(long)]
        k: Option<u32>,
        /// Base dimension for --symbolic.
        #[arg(long)]
        n: Option<u32>,
    },
    /// The class f(a) of a weighted tuple.
    F {
        #[arg(long, value_name = "a,b,..")]
        tuple: String,
        #[arg(long, value_name = "PATH", required_unless_present = "symbolic")]
        input: Option<PathBuf>,
        #[arg(long, requires = "k", conflicts_with = "input")]
        symbolic: bool,
        #[arg(long)]
        k: Option<u32>,
    },
    /// Chern numbers of P(E).
    Pbundle {
        #[arg(long, value_name = "PATH")]
        input: PathBuf,
        #[arg(long, value_name = "a,b,..")]
        partition: Option<String>,
    },
    /// Compare the Segre-class formula with the presented ring of P(E).
    OracleCheck {
        #[arg(long, value_name = "PATH")]
        input: PathBuf,
    },
    /// Sign table of the weight-(k+1) coefficients.
    Positivity {
        #[arg(long)]
        k: u32,
    },
    /// Chern numbers of the family X_q as affine functions of q.
    Family {
        #[arg(long)]
        n: u32,
        #[arg(long, value_name = "a,b,..")]
        partition: Option<String>,
        /// Also evaluate at this q.
        #[arg(long)]
        q: Option<i64>,
        #[arg(long)]
        genus: Option<u32>,
    },
    /// Coordinates in the alpha-monomial basis (X_q, or a vector file).
    Decompose {
        #[arg(long, required_unless_present = "input")]
        n: Option<u32>,
        #[arg(long, default_value_t = 3)]
        q: i64,
        #[arg(long)]
        genus: Option<u32>,
        /// Chern-vector JSON {"dimension", "entries"}.
        #[arg(long, value_name = "PATH")]
        input: Option<PathBuf>,
    },
    /// Rank of the ideal slice I^n against its closed formula.
    Ideals {
        #[arg(long)]
        n: u32,
    },
    /// Spans of chi_p and Pontryagin numbers.
    Spans {
        #[arg(long)]
        n: u32,
    },
    /// Full reproduction report for 4 <= n <= N.
    Report {
        #[arg(long, value_name = "N")]
        n: u32,
    },
}

pub struct Context {
    pub model_file: Option<PathBuf>,
}

fn kind_name(kind: ErrorKind) -> (&'static str, u8) {
    match kind {
        ErrorKind::Parse => ("parse", 2),
        ErrorKind::Invariant => ("invariant", 3),
        ErrorKind::Precondition => ("precondition", 4),
    }
}

fn fail(kind: &str, message: &str, code: u8) -> ExitCode {
    let body = serde_json::json!({ "error": { "kind": kind, "message": message } });
    eprintln!("{body}");
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            // --help / --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            return fail("parse", msg.lines().next().unwrap_or("invalid arguments"), 2);
        }
    };
    let ctx = Context { model_file: cli.model_file };
    match commands::run(&cli.command, &ctx) {
        Ok(out) => {
            match cli.format {
                Format::Json => println!("{}", out.json),
                Format::Table => print!("{}", out.table),
            }
            if out.failed {
                let (_, code) = kind_name(ErrorKind::Invariant);
                return ExitCode::from(code);
            }
            ExitCode::SUCCESS
        }
        Err(e) => report_error(&e),
    }
}

fn report_error(e: &Error) -> ExitCode {
    let (kind, code) = kind_name(e.kind());
    fail(kind, &e.to_string(), code)
}
