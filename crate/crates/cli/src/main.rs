//! `gpdb`: distance tables, diameters, and distance-balance checks for
//! generalized Petersen graphs.

use std::fs;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gpdb_core::pathform::search_anchors;
use gpdb_core::{
    conjecture_scan, diameter, distance_table, is_diam_distance_balanced,
    is_highly_distance_balanced, is_l_distance_balanced, report, Error, GpParams, Strategy,
};

#[derive(Parser)]
#[command(name = "gpdb", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to FILE instead of standard output.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct Instance {
    #[arg(long, allow_negative_numbers = true)]
    n: i64,
    #[arg(long, allow_negative_numbers = true)]
    k: i64,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form d12/d34 rows for a window of inner vertices v_j.
    Table {
        #[command(flatten)]
        gp: Instance,
        #[arg(long, allow_negative_numbers = true)]
        from: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        to: Option<i64>,
        #[command(flatten)]
        output: Output,
    },
    /// Diameter, with the rule that produced it.
    Diam {
        #[command(flatten)]
        gp: Instance,
        #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
        strategy: StrategyArg,
        #[command(flatten)]
        output: Output,
    },
    /// ell-distance-balance verdicts (ell defaults to the diameter).
    Balance {
        #[command(flatten)]
        gp: Instance,
        #[arg(long, conflicts_with = "all")]
        ell: Option<usize>,
        /// Check every ell from 1 to the diameter.
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Instances where some v_j sits at the diameter from u_0.
    Scan {
        /// Inclusive range of k, written a..b.
        #[arg(long = "k", value_name = "A..B")]
        k_range: String,
        #[arg(long, default_value_t = 40)]
        n_max: usize,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long)]
        workers: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Auto,
    TheoremOnly,
    OracleOnly,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Auto => Strategy::Auto,
            StrategyArg::TheoremOnly => Strategy::TheoremOnly,
            StrategyArg::OracleOnly => Strategy::OracleOnly,
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidParams { .. } | Error::OutOfRange { .. } | Error::SameVertex => 2,
            Error::NotGuaranteed { .. } => 3,
            Error::EllOutOfRange { .. } => 4,
            Error::InternalCaseGap { .. } => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn parse_k_range(s: &str) -> Result<RangeInclusive<usize>, Failure> {
    let bad = || invalid(format!("invalid k range '{s}', expected A..B"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (s, s),
    };
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a < 2 {
        return Err(invalid(format!("k range must start at 2 or more, got {a}")));
    }
    if a > b {
        return Err(invalid(format!("empty k range {a}..{b}")));
    }
    Ok(a..=b)
}

fn render(command: &Command) -> Result<String, Failure> {
    match command {
        Command::Table {
            gp,
            from,
            to,
            output,
        } => {
            let p = GpParams::new(gp.n, gp.k)?;
            let anchors = search_anchors(&p);
            let half = (p.n() / 2) as i64;
            let centre = anchors.peak_d12 as i64;
            let lo = from.unwrap_or((centre - 3).max(0));
            let hi = to.unwrap_or((centre + 3).min(half));
            let rows = distance_table(&p, lo, hi)?;
            Ok(match output.format {
                Format::Text => report::table_text(&p, &rows, &anchors),
                Format::Csv => report::table_csv(&rows),
                Format::Json => report::table_json(&rows),
            })
        }
        Command::Diam {
            gp,
            strategy,
            output,
        } => {
            let p = GpParams::new(gp.n, gp.k)?;
            let r = diameter(&p, (*strategy).into())?;
            Ok(match output.format {
                Format::Text => report::diameter_text(&p, &r),
                Format::Csv => report::diameter_csv(&p, &r),
                Format::Json => report::diameter_json(&p, &r),
            })
        }
        Command::Balance {
            gp,
            ell,
            all,
            output,
        } => {
            let p = GpParams::new(gp.n, gp.k)?;
            let verdicts = match (ell, all) {
                (_, true) => is_highly_distance_balanced(&p)?,
                (Some(ell), false) => vec![is_l_distance_balanced(&p, *ell, true)?],
                (None, false) => vec![is_diam_distance_balanced(&p)?],
            };
            Ok(match output.format {
                Format::Text => report::verdicts_text(&p, &verdicts),
                Format::Csv => report::verdicts_csv(&p, &verdicts),
                Format::Json => report::verdicts_json(&p, &verdicts),
            })
        }
        Command::Scan {
            k_range,
            n_max,
            workers,
            output,
        } => {
            let ks = parse_k_range(k_range)?;
            if *workers == Some(0) {
                return Err(invalid("--workers must be at least 1"));
            }
            let records = conjecture_scan(ks, *n_max, *workers)?;
            Ok(match output.format {
                Format::Text => report::records_text(&records),
                Format::Csv => report::records_csv(&records),
                Format::Json => report::records_json(&records),
            })
        }
    }
}

fn output_of(command: &Command) -> &Output {
    match command {
        Command::Table { output, .. }
        | Command::Diam { output, .. }
        | Command::Balance { output, .. }
        | Command::Scan { output, .. } => output,
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match render(&cli.command) {
        Ok(text) => match emit(&text, output_of(&cli.command).out.as_ref()) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("gpdb: write failed: {e}");
                ExitCode::from(1)
            }
        },
        Err(f) => {
            eprintln!("gpdb: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
