//! `permchain` command-line front end.
//!
//! Exit codes: 0 when every emitted row agrees, 1 on a disagreement or
//! counterexample, 2 on usage, parse, bound or I/O errors.

pub mod commands;
pub mod report;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use permchain::{parse_chain, Counter, FormulaTag, MAX_ENUMERATION_N};

use crate::report::{render, Format, Row};

pub const EXIT_AGREE: i32 = 0;
pub const EXIT_DISAGREE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "permchain", version)]
#[command(about = "Count chain-avoiding permutations and check them against closed forms")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Output format
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,

    /// Write the report here instead of standard output
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Worker threads for enumeration (default: available cores)
    #[arg(long)]
    pub jobs: Option<usize>,

    /// Allow n above the enumeration bound
    #[arg(long)]
    pub force: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count C_n(chain) for n = 1..=n-max with the position-of-1 split
    Count {
        /// Chain text, e.g. 231,1432:231
        #[arg(long)]
        chain: String,
        #[arg(long, default_value_t = 9)]
        n_max: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Compare enumeration with the closed forms on both chain sides
    Verify {
        /// Comma list of tags (T31..T44) or `all`
        #[arg(long, default_value = "all")]
        tags: String,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Check the unimodal form of strongly 312-avoiding permutations ending in 1
    Structure {
        #[arg(long, default_value_t = 9)]
        n_max: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Check that each row's 231-side and 312-side counts coincide
    Symmetry {
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
}

/// Result of one invocation before anything is written.
#[derive(Debug, Clone)]
pub struct Execution {
    pub report: String,
    pub notes: Vec<String>,
    pub status: i32,
}

#[derive(Debug)]
pub struct UsageError(pub String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

pub fn parse_tags(text: &str) -> Result<Vec<FormulaTag>, UsageError> {
    if text.trim().eq_ignore_ascii_case("all") {
        return Ok(FormulaTag::ALL.to_vec());
    }
    let tags = text
        .split(',')
        .map(str::parse::<FormulaTag>)
        .collect::<Result<Vec<_>, _>>()?;
    if tags.is_empty() {
        return Err(UsageError("no tags given".into()));
    }
    Ok(tags)
}

fn counter(common: &CommonArgs) -> Result<Counter, UsageError> {
    let jobs = match common.jobs {
        Some(0) => return Err(UsageError("--jobs must be at least 1".into())),
        Some(j) => j,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    Ok(Counter::with_jobs(jobs)?.force(common.force))
}

fn check_bound(n_max: usize, common: &CommonArgs) -> Result<(), UsageError> {
    if n_max > MAX_ENUMERATION_N && !common.force {
        return Err(UsageError(format!(
            "--n-max {n_max} exceeds the enumeration bound {MAX_ENUMERATION_N}; pass --force to run anyway"
        )));
    }
    Ok(())
}

fn finish<R: Row>(rows: &[R], notes: Vec<String>, format: Format) -> Result<Execution, UsageError> {
    let status = if rows.iter().all(Row::agrees) {
        EXIT_AGREE
    } else {
        EXIT_DISAGREE
    };
    Ok(Execution {
        report: render(rows, format)?,
        notes,
        status,
    })
}

/// Runs a parsed command and returns its report without writing it.
pub fn execute(command: &Command) -> Result<Execution, UsageError> {
    match command {
        Command::Count {
            chain,
            n_max,
            common,
        } => {
            let chain = parse_chain(chain)?;
            check_bound(*n_max, common)?;
            let r = commands::cmd_count(&counter(common)?, &chain, *n_max)?;
            finish(&r.rows, r.notes, common.format)
        }
        Command::Verify {
            tags,
            n_max,
            common,
        } => {
            let tags = parse_tags(tags)?;
            check_bound(*n_max, common)?;
            let r = commands::cmd_verify(&counter(common)?, &tags, *n_max)?;
            finish(&r.rows, r.notes, common.format)
        }
        Command::Structure { n_max, common } => {
            check_bound(*n_max, common)?;
            let r = commands::cmd_structure(*n_max)?;
            finish(&r.rows, r.notes, common.format)
        }
        Command::Symmetry { n_max, common } => {
            check_bound(*n_max, common)?;
            let r = commands::cmd_symmetry(&counter(common)?, *n_max)?;
            finish(&r.rows, r.notes, common.format)
        }
    }
}

fn common(command: &Command) -> &CommonArgs {
    match command {
        Command::Count { common, .. }
        | Command::Verify { common, .. }
        | Command::Structure { common, .. }
        | Command::Symmetry { common, .. } => common,
    }
}

/// Executes, writes the report and notes, and returns the exit code.
pub fn run(cli: &Cli) -> i32 {
    let exec = match execute(&cli.command) {
        Ok(e) => e,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            return EXIT_USAGE;
        }
    };
    for note in &exec.notes {
        eprintln!("{note}");
    }
    let written = match &common(&cli.command).out {
        Some(path) => std::fs::write(path, &exec.report),
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            out.write_all(exec.report.as_bytes())
                .and_then(|_| out.flush())
        }
    };
    if let Err(e) = written {
        eprintln!("error: cannot write report: {e}");
        return EXIT_USAGE;
    }
    exec.status
}
