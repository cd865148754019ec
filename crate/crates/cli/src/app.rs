//! The command-line surface, kept in the library so it can be tested
//! without spawning a process.

use clap::{Parser, Subcommand};
use lusztig_core::Family;

use crate::query::{self, ParityArg, ValueFn};
use crate::{render_table, verify, CliResult, Format, NRange, Suite, TableId};

/// Exact sizes of the largest Lusztig series of finite classical groups.
///
/// Exit status: 0 on success, 1 when verification finds a failed claim,
/// 2 on a usage error.
#[derive(Parser)]
#[command(name = "lusztig", version)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Regenerate table 1, 2, 3 or 4.
    Table {
        which: TableId,
        #[arg(long, default_value = "tsv")]
        format: Format,
        /// Inclusive range of n, written a..b.
        #[arg(long)]
        range: Option<NRange>,
    },
    /// Print one exact value: p, p2, beta, beta_prime, alpha, alpha_plus,
    /// alpha_minus, f, f_plus, f_minus, tau, theta, theta_plus, theta_minus.
    Value { function: ValueFn, n: usize },
    /// Largest series size for a group, with q thresholds.
    Max {
        #[arg(value_parser = query::parse_family)]
        family: Family,
        /// even, odd, or any (GL and U only).
        parity: ParityArg,
        n: usize,
        /// List every maximizing centralizer shape.
        #[arg(long)]
        witnesses: bool,
        /// q mod 4 (1 or 3) for odd q; settles the orthogonal side condition.
        #[arg(long)]
        q_mod4: Option<u8>,
    },
    /// Check every transcribed claim against a fresh computation.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value = "tsv")]
        format: Format,
    },
    /// Sufficient conditions on q for the maximum to be attained.
    Threshold {
        #[arg(value_parser = query::parse_family)]
        family: Family,
        parity: ParityArg,
        n: usize,
        #[arg(long)]
        q_mod4: Option<u8>,
    },
}

fn execute(command: Command) -> CliResult<(String, u8)> {
    Ok(match command {
        Command::Table { which, format, range } => (render_table(which, format, range)?, 0),
        Command::Value { function, n } => {
            let v = query::value(function, n)?;
            (format!("{v}\n"), 0)
        }
        Command::Max { family, parity, n, witnesses, q_mod4 } => {
            let spec = query::group_spec(family, parity, n, q_mod4)?;
            (query::render_max(&spec, witnesses)?, 0)
        }
        Command::Verify { suite, format } => {
            let report = verify(suite);
            let text = match format {
                Format::Tsv => report.to_tsv(),
                Format::Json => report.to_json() + "\n",
            };
            (text, report.exit_code() as u8)
        }
        Command::Threshold { family, parity, n, q_mod4 } => {
            let spec = query::group_spec(family, parity, n, q_mod4)?;
            (query::render_threshold(&spec)?, 0)
        }
    })
}

/// What a finished invocation prints and how it exits.
#[derive(Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

/// Parses `args` (program name first) and runs the command. Exit codes:
/// 0 success, 1 failed verification, 2 usage error.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = u8::try_from(e.exit_code()).unwrap_or(2);
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    let note = match &cli.command {
        Command::Value { function, n } => query::value_note(*function, *n),
        _ => None,
    };
    match execute(cli.command) {
        Ok((stdout, code)) => Outcome { stdout, stderr: note.map(|n| n + "\n").unwrap_or_default(), code },
        Err(e) => Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: 2 },
    }
}
