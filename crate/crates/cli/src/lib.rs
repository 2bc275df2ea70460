//! Command implementations behind the `idealgraph` binary.
//!
//! Each command returns its stdout text and exit code so that tests can run
//! them without spawning a process.

pub mod verify;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use idealgraph::perfectness::round_down_to_odd;
use idealgraph::{
    construct_paper_hole, export, factorize, find_odd_hole_capped, invariant_report, is_perfect_with,
    parse_n, Error, ExportFormat, IdealGraph, PerfectnessOptions, Verdict, WitnessSource, DEFAULT_CAP,
};

use crate::verify::{parse_n_list, to_csv, to_table, verify_all, VerifyOptions};

#[derive(Debug, Parser)]
#[command(name = "idealgraph")]
#[command(about = "Intersection graphs of ideals of Z_n: perfectness, holes, clique and chromatic numbers")]
#[command(version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Dot,
    Dimacs,
    Json,
}

impl From<GraphFormat> for ExportFormat {
    fn from(f: GraphFormat) -> Self {
        match f {
            GraphFormat::Dot => ExportFormat::Dot,
            GraphFormat::Dimacs => ExportFormat::Dimacs,
            GraphFormat::Json => ExportFormat::Json,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the prime factorization of n
    Factor { n: String },
    /// Export G(Z_n) or its complement
    Graph {
        n: String,
        #[arg(long, value_enum, default_value = "dimacs")]
        format: GraphFormat,
        #[arg(long)]
        complement: bool,
        /// Write to a file instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide perfectness; exit 0 perfect, 1 not perfect, 2 infeasible or error
    Perfect {
        n: String,
        /// Also search even lengths for induced cycles longer than 4
        #[arg(long)]
        all_lengths: bool,
        /// Find the witness by exhaustive search even when n has 5 or more primes
        #[arg(long)]
        search: bool,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Print an odd hole certificate
    Hole {
        n: String,
        /// Exhaustive search on G and its complement instead of the explicit construction
        #[arg(long)]
        search: bool,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Exact clique and chromatic numbers with witnesses
    Invariants {
        n: String,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Check the perfectness characterization and omega = chi over many n
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Check every n in 1..=MAX
    #[arg(long, conflicts_with = "n_list", required_unless_present = "n_list")]
    pub max: Option<String>,
    /// File of integers separated by whitespace or commas
    #[arg(long)]
    pub n_list: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: TableFormat,
    #[arg(long)]
    pub all_lengths: bool,
    /// Print rows to stderr as they finish
    #[arg(long)]
    pub progress: bool,
}

/// Text for stdout plus the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: i32,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, code: 0, stderr: String::new() }
    }
}

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io(std::io::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

pub fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Factor { n } => cmd_factor(&n),
        Command::Graph { n, format, complement, output } => {
            let out = cmd_graph(&n, format.into(), complement)?;
            match output {
                Some(path) => {
                    std::fs::write(path, out.stdout)?;
                    Ok(Output::ok(String::new()))
                }
                None => Ok(out),
            }
        }
        Command::Perfect { n, all_lengths, search, cap } => cmd_perfect(&n, all_lengths, search, cap),
        Command::Hole { n, search, cap } => cmd_hole(&n, search, cap),
        Command::Invariants { n, cap } => cmd_invariants(&n, cap),
        Command::Verify(args) => cmd_verify(&args),
    }
}

pub fn cmd_factor(n: &str) -> Result<Output, CliError> {
    let f = factorize(parse_n(n)?)?;
    Ok(Output::ok(format!("{f}\n")))
}

pub fn cmd_graph(n: &str, format: ExportFormat, complement: bool) -> Result<Output, CliError> {
    let g = IdealGraph::build(&factorize(parse_n(n)?)?);
    let g = if complement { g.complement() } else { g };
    Ok(Output::ok(export(&g, format)))
}

/// JSON perfectness report. With five or more primes the explicit 5-hole is
/// the witness unless `search` asks for exhaustive search.
pub fn cmd_perfect(n: &str, all_lengths: bool, search: bool, cap: usize) -> Result<Output, CliError> {
    let f = factorize(parse_n(n)?)?;
    let opts = PerfectnessOptions {
        cap,
        all_lengths,
        witness: if search { WitnessSource::Search } else { WitnessSource::ConstructionFirst },
    };
    let report = is_perfect_with(&f, &opts)?;
    let code = if report.verdict == Verdict::NotPerfect { 1 } else { 0 };
    Ok(Output { stdout: report.to_json() + "\n", code, stderr: String::new() })
}

pub fn cmd_hole(n: &str, search: bool, cap: usize) -> Result<Output, CliError> {
    let f = factorize(parse_n(n)?)?;
    let cert = if search {
        let g = IdealGraph::build(&f);
        let v = g.vertex_count();
        let max_length = round_down_to_odd(v);
        if max_length < 5 {
            None
        } else {
            match find_odd_hole_capped(&g, max_length, cap)? {
                Some(c) => Some(c),
                None => find_odd_hole_capped(&g.complement(), max_length, cap)?,
            }
        }
    } else {
        Some(construct_paper_hole(&f)?)
    };
    Ok(match cert {
        Some(c) => Output::ok(c.to_json() + "\n"),
        None => Output {
            stdout: "null\n".into(),
            code: 1,
            stderr: format!("no odd hole or odd antihole in G(Z_{})\n", f.n()),
        },
    })
}

pub fn cmd_invariants(n: &str, cap: usize) -> Result<Output, CliError> {
    let report = invariant_report(&factorize(parse_n(n)?)?, cap)?;
    let code = if report.is_weakly_perfect() { 0 } else { 1 };
    Ok(Output { stdout: report.to_json() + "\n", code, stderr: String::new() })
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<Output, CliError> {
    let ns: Vec<u64> = match (&args.max, &args.n_list) {
        (Some(max), _) => (1..=parse_n(max)?).collect(),
        (None, Some(path)) => parse_n_list(&std::fs::read_to_string(path)?)?,
        (None, None) => Vec::new(),
    };
    let opts = VerifyOptions { cap: args.cap, jobs: args.jobs, all_lengths: args.all_lengths };
    let progress = args.progress;
    let summary = verify_all(&ns, &opts, |row| {
        if progress {
            eprintln!("{},{},{}", row.n, row.verdict, row.elapsed_ms);
        }
    })?;
    let stdout = match args.format {
        TableFormat::Csv => to_csv(&summary.rows),
        TableFormat::Table => to_table(&summary.rows),
    };
    let stderr = format!(
        "checked {} values of n: {} violations, {} infeasible\n",
        summary.rows.len(),
        summary.violations,
        summary.infeasible
    );
    Ok(Output { stdout, code: summary.exit_code(), stderr })
}
