//! `gseq`: tables, identity checks, constants and Monte Carlo runs for
//! graphical bridges, plane trees and graphical degree sequences.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on a
//! usage or range error.

mod output;
mod tables;
mod verify;

use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand};

use gseq_core::constants::{terms_for_digits, Constants, DEFAULT_TERMS};
use gseq_core::walks_mc::estimate_rho;

use crate::output::Format;
use crate::tables::Sequence;
use crate::verify::Suite;

/// Default worker count for Monte Carlo runs. Fixed rather than
/// machine-dependent so that output only depends on the flags.
const DEFAULT_WORKERS: usize = 8;

#[derive(Debug, Parser)]
#[command(name = "gseq", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print an integer sequence as CSV (`n,value`).
    Tables {
        #[arg(long, value_enum)]
        which: Sequence,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Evaluate xi, C, rho and Gamma(3/4) with error bounds (JSON).
    Constants {
        /// Significant digits in the output, at most 12.
        #[arg(long, default_value_t = 10)]
        digits: usize,
    },
    /// Monte Carlo estimate of rho from the lazy-walk stopping time (JSON).
    RhoMc {
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        #[arg(long, default_value_t = 1_000_000)]
        horizon: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, env = "GSEQ_WORKERS", default_value_t = DEFAULT_WORKERS)]
        workers: usize,
    },
    /// `n^{3/4} G_n / 4^n` as CSV (`n,G_n,ratio`).
    Ratio {
        #[arg(long, default_value_t = 12)]
        n_max: usize,
    },
    /// `B*_n / (n B_n)` against its limit `exp(-2 xi)`.
    Convergence {
        #[arg(long, default_value_t = 40)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// List graphical bridges of length `2n` (U = +1, D = -1) with their
    /// number of irreducible parts, or draw uniform samples with `--samples`.
    Bridges {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

fn run(cli: Cli, out: &mut impl Write) -> Result<bool> {
    match cli.command {
        Command::Tables {
            which,
            n_max,
            format,
        } => {
            let rows = tables::table(which, n_max)?;
            output::write_table(out, which, &rows, format)?;
            Ok(true)
        }
        Command::Verify {
            suite,
            n_max,
            format,
        } => {
            let start = Instant::now();
            let report = verify::run(suite, n_max)?;
            output::write_report(out, &report, format)?;
            eprintln!("wall time: {:.2} s", start.elapsed().as_secs_f64());
            Ok(report.passed())
        }
        Command::Constants { digits } => {
            if digits == 0 || digits > 12 {
                bail!("--digits must be between 1 and 12, got {digits}");
            }
            let terms = terms_for_digits(digits).max(DEFAULT_TERMS);
            let constants = Constants::evaluate(terms);
            output::write_constants(out, &constants, digits)?;
            Ok(true)
        }
        Command::RhoMc {
            samples,
            horizon,
            seed,
            workers,
        } => {
            if samples == 0 || horizon == 0 || workers == 0 {
                bail!("--samples, --horizon and --workers must be positive");
            }
            let estimate = estimate_rho(samples, horizon, seed, workers);
            serde_json::to_writer_pretty(&mut *out, &estimate)?;
            writeln!(out)?;
            Ok(true)
        }
        Command::Ratio { n_max } => {
            let rows = gseq_core::graphseq::ratio_table(n_max)?;
            writeln!(out, "n,G_n,ratio")?;
            for r in rows {
                writeln!(out, "{},{},{:.6}", r.n, r.count, r.ratio)?;
            }
            Ok(true)
        }
        Command::Convergence { n_max, format } => {
            tables::write_convergence(out, n_max, format)?;
            Ok(true)
        }
        Command::Bridges { n, samples, seed } => {
            tables::write_bridges(out, n, samples, seed)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(true), Ok(())) => ExitCode::SUCCESS,
        (Ok(false), Ok(())) => ExitCode::from(1),
        (Err(e), _) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        (_, Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
