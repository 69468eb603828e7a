//! Command-line interface for `ricci-core`.
//!
//! [`run`] takes the argument vector and output sinks and returns the exit
//! code, so the binary and the tests share one entry point.

pub mod commands;
pub mod error;
pub mod scan;
pub mod source;
pub mod expr;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use error::CliError;

#[derive(Debug, Parser)]
#[command(name = "ricci", version, about = "Exact discrete Ricci curvature of graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Curvature of a single edge.
    Edge(EdgeArgs),
    /// Per-edge curvature and classification of a whole graph.
    Graph(GraphArgs),
    /// Classify every graph in a graph6 file, one per line.
    Scan(ScanArgs),
    /// Count connected regular graphs and classify them.
    Census(CensusArgs),
    /// Print a generated graph.
    Family(FamilyArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct SourceArgs {
    /// Family expression, e.g. `petersen`, `cocktail:4` or
    /// `"product cycle:5 cycle:5"`.
    #[arg(long)]
    pub family: Option<String>,
    /// Edge-list file: a header `n m` followed by `m` lines `u v`.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// A graph6 record.
    #[arg(long)]
    pub graph6: Option<String>,
}

#[derive(Debug, Args)]
pub struct EdgeArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// First endpoint (label when reading an edge-list file). Defaults to the
    /// designated edge of fixtures.
    pub x: Option<String>,
    /// Second endpoint.
    pub y: Option<String>,
    /// Idleness values to tabulate, e.g. `--alpha 1/2 --alpha 0`.
    #[arg(long = "alpha", value_name = "ALPHA")]
    pub alphas: Vec<String>,
    /// Emit JSON instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// graph6 file, or `-` for stdin.
    pub input: PathBuf,
    /// Worker threads; 0 picks one per core.
    #[arg(long, env = "RICCI_JOBS", default_value_t = 0)]
    pub jobs: usize,
    #[arg(long, value_enum, default_value_t = Emit::Csv)]
    pub emit: Emit,
    /// Attach per-edge curvature to each record.
    #[arg(long)]
    pub detail: bool,
    /// Exit nonzero if any line fails to parse or classify.
    #[arg(long)]
    pub strict: bool,
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    /// Number of vertices.
    pub n: usize,
    /// Degree.
    pub d: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Graph6,
    Edgelist,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// Expression tokens, e.g. `bi:6` or `product cycle:5 cycle:5`.
    #[arg(required = true, num_args = 1..)]
    pub expr: Vec<String>,
    #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
    pub format: GraphFormat,
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{text}");
            return code;
        }
    };
    let result = match &cli.command {
        Command::Edge(a) => commands::cmd_edge(a, out),
        Command::Graph(a) => commands::cmd_graph(a, out),
        Command::Scan(a) => scan::cmd_scan(a, out, err),
        Command::Census(a) => commands::cmd_census(a, out),
        Command::Family(a) => commands::cmd_family(a, out),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
