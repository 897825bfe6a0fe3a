//! `coorbit`: root systems, orbit charts, orbit dimensions and basic-subset
//! scans from the command line.

mod commands;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coorbit_core::oracle::DEFAULT_SEED;
use coorbit_core::rational::{self, Rational};
use coorbit_core::{PositiveRoot, RootSystemKind};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "coorbit", version, about = "Exact coadjoint orbits of A_{n-1}^+, B_n^+ and D_n^+")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    global: Global,
}

#[derive(Args, Debug)]
struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the positive roots in canonical order.
    Roots {
        #[arg(long, value_parser = parse_kind)]
        kind: RootSystemKind,
        #[arg(long)]
        n: usize,
    },
    /// Defining equations of the elementary orbit through c e_alpha^*.
    Chart {
        #[arg(long, value_parser = parse_kind)]
        kind: RootSystemKind,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_root)]
        alpha: PositiveRoot,
        #[arg(long, value_parser = parse_rational, default_value = "1", allow_hyphen_values = true)]
        c: Rational,
    },
    /// Orbit dimension of a functional read from a JSON file ("-" for stdin).
    Dim { file: PathBuf },
    /// Basic subset and map of a type A functional read from a JSON file.
    Decompose { file: PathBuf },
    /// Achievable orbit dimensions in type A.
    Dims {
        #[arg(long)]
        n: usize,
    },
    /// Weyl algebra index m for each achievable dimension 2m.
    Weyl {
        #[arg(long)]
        n: usize,
    },
    /// Every basic subset with s(D) and its derived set, one JSON record per line.
    Scan {
        #[arg(long)]
        n: usize,
    },
    /// Run a verification suite; exits with status 2 if it fails.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Suite name, "sign-conventions" or "all".
    #[arg(long)]
    suite: String,
    #[arg(long, value_parser = parse_kind)]
    kind: Option<RootSystemKind>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long, value_parser = parse_root)]
    alpha: Option<PositiveRoot>,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    c: Option<Rational>,
    /// Trials per case, overriding the suite default.
    #[arg(long)]
    trials: Option<usize>,
}

fn parse_kind(s: &str) -> Result<RootSystemKind, String> {
    s.parse().map_err(|e: coorbit_core::Error| e.to_string())
}

fn parse_root(s: &str) -> Result<PositiveRoot, String> {
    s.parse().map_err(|e: coorbit_core::Error| e.to_string())
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    rational::parse(s).map_err(|e| e.to_string())
}

pub struct Outcome {
    pub text: String,
    pub verified: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, verified: true }
    }
}

fn run(cli: Cli) -> coorbit_core::Result<Outcome> {
    let g = &cli.global;
    match cli.command {
        Command::Roots { kind, n } => commands::roots(kind, n, g.format).map(Outcome::ok),
        Command::Chart { kind, n, alpha, c } => commands::chart(kind, n, alpha, c, g.format).map(Outcome::ok),
        Command::Dim { file } => commands::dim(&file, g.format).map(Outcome::ok),
        Command::Decompose { file } => commands::decompose(&file, g.format).map(Outcome::ok),
        Command::Dims { n } => commands::dims(n, g.format).map(Outcome::ok),
        Command::Weyl { n } => commands::weyl(n, g.format).map(Outcome::ok),
        Command::Scan { n } => commands::scan(n).map(Outcome::ok),
        Command::Verify(args) => commands::verify(&args, g.seed, g.format),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let out = cli.global.out.clone();
    let outcome = match run(cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let mut text = outcome.text;
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{text}"),
    }
    if outcome.verified {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}
