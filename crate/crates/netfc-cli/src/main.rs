//! `netfc`: batch CLI for functional-complexity analysis of undirected
//! graphs. Every subcommand is deterministic given its flags; exit codes
//! are 0 success, 1 usage, 2 input parse or I/O failure, 3 domain
//! constraint.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "netfc",
    version,
    about = "Functional-complexity analysis of network-function topologies"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full complexity report (C_F, diameter, subgraph census, curves) for one graph.
    Complexity(ComplexityArgs),
    /// Per-scale information curves as CSV for one graph.
    Curve(CurveArgs),
    /// Sweep the graphs of one order and write their metric records as CSV.
    Sweep(SweepArgs),
    /// Correlation summary of a sweep CSV, grouped by node count.
    Correlate(CorrelateArgs),
    /// Complexity of named topology families over a node-count range, as CSV.
    Topologies(TopologiesArgs),
    /// Metric records of seeded random connected graphs, as CSV.
    Sample(SampleArgs),
}

#[derive(Args)]
struct SourceArgs {
    /// Edge-list file ("N M" header, one "u v" line per edge).
    #[arg(long, value_name = "PATH")]
    graph: Option<PathBuf>,
    /// Named topology instead of a file.
    #[arg(long, value_name = "NAME")]
    topology: Option<TopologyName>,
    /// Node count for sized topologies.
    #[arg(long, value_name = "N")]
    nodes: Option<usize>,
}

#[derive(Args)]
struct ComplexityArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Output layout.
    #[arg(long, value_enum, default_value = "text")]
    format: ReportFormat,
}

#[derive(Args)]
struct CurveArgs {
    #[command(flatten)]
    source: SourceArgs,
}

#[derive(Args)]
struct SweepArgs {
    /// Graph order to sweep.
    #[arg(long, value_name = "N")]
    nodes: usize,
    /// How to visit graph space.
    #[arg(long, value_enum)]
    mode: ModeName,
    /// Number of draws (sampled mode only).
    #[arg(long, value_name = "C")]
    count: Option<usize>,
    /// Edge probability (sampled mode only).
    #[arg(long = "edge-prob", value_name = "P")]
    edge_prob: Option<f64>,
    /// Generator seed (sampled mode only).
    #[arg(long, value_name = "S")]
    seed: Option<u64>,
    /// Destination CSV file.
    #[arg(long, value_name = "PATH")]
    out: PathBuf,
}

#[derive(Args)]
struct CorrelateArgs {
    /// Sweep CSV to summarize.
    #[arg(long = "in", value_name = "PATH")]
    input: PathBuf,
}

#[derive(Args)]
struct TopologiesArgs {
    /// Comma-separated families: bus, ring, star, mesh, empty.
    #[arg(long, value_delimiter = ',', value_name = "LIST", required = true)]
    families: Vec<FamilyName>,
    /// Smallest node count.
    #[arg(long, value_name = "A")]
    min: usize,
    /// Largest node count.
    #[arg(long, value_name = "B")]
    max: usize,
}

#[derive(Args)]
struct SampleArgs {
    /// Graph order to sample.
    #[arg(long, value_name = "N")]
    nodes: usize,
    /// Number of draws.
    #[arg(long, value_name = "C")]
    count: usize,
    /// Edge probability.
    #[arg(long = "edge-prob", value_name = "P")]
    edge_prob: f64,
    /// Generator seed.
    #[arg(long, value_name = "S")]
    seed: u64,
    /// Destination CSV file.
    #[arg(long, value_name = "PATH")]
    out: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum TopologyName {
    Bus,
    Ring,
    Star,
    Mesh,
    Empty,
    Moore,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    Bus,
    Ring,
    Star,
    Mesh,
    Empty,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeName {
    Labeled,
    Canonical,
    Sampled,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Csv,
}

/// CLI failure with its exit code: usage 1, parse/I-O 2, domain 3.
enum CliError {
    Usage(String),
    Domain(String),
    Core(netfc_core::Error),
}

impl CliError {
    fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    fn exit_code(&self) -> u8 {
        use netfc_core::Error as E;
        match self {
            CliError::Usage(_) => 1,
            CliError::Domain(_) => 3,
            CliError::Core(err) => match err {
                E::Io(_) | E::MalformedHeader(_) | E::MalformedEdge { .. } | E::CsvParse { .. } => 2,
                _ => 3,
            },
        }
    }
}

impl From<netfc_core::Error> for CliError {
    fn from(err: netfc_core::Error) -> Self {
        CliError::Core(err)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Domain(msg) => f.write_str(msg),
            CliError::Core(err) => write!(f, "{err}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
