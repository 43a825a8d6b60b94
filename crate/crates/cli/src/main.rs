//! `gremban` command-line tool.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 usage or invalid input, 3 parse
//! error, 4 numerical failure.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use commands::CliError;

#[derive(Debug, Parser)]
#[command(name = "gremban", version, about = "Signed network analysis through the Gremban expansion")]
pub struct Cli {
    /// Seed for randomized commands.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Use degree-normalized Laplacians.
    #[arg(long, global = true)]
    pub normalized: bool,
    /// Tolerance for classifying eigenvectors as symmetric or antisymmetric lifts.
    #[arg(long, global = true, default_value_t = 1e-8)]
    pub tol: f64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Operator {
    /// Signed adjacency A.
    #[value(name = "A")]
    A,
    /// Unsigned adjacency.
    #[value(name = "Abar")]
    ABar,
    /// Signed Laplacian L.
    #[value(name = "L")]
    L,
    /// Unsigned Laplacian.
    #[value(name = "Lbar")]
    LBar,
    /// Expanded adjacency.
    #[value(name = "gremban-A")]
    GrembanA,
    /// Expanded Laplacian.
    #[value(name = "gremban-L")]
    GrembanL,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the Gremban expansion of a signed edge list and report balance and connectivity.
    Expand {
        input: PathBuf,
        /// Output path; the expansion goes to stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Detect communities and factions; prints JSON.
    Detect {
        input: PathBuf,
        /// Number of clusters over the expansion; 2 runs two-way detection.
        #[arg(short, long)]
        k: Option<usize>,
    },
    /// Run an SSBM sweep from a key=value config and write CSV.
    Sweep {
        config: PathBuf,
        /// Output CSV; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Run replicas on one thread.
        #[arg(long)]
        sequential: bool,
    },
    /// Print the spectrum of an operator, with lift tags for expanded operators.
    Spectrum {
        input: PathBuf,
        #[arg(long, value_enum)]
        which: Operator,
    },
    /// Diffuse on the expansion and write trajectory, projection and profile CSVs.
    Diffuse {
        input: PathBuf,
        /// `delta:<node>`, `uniform` or `file:<path>`.
        #[arg(long)]
        x0: String,
        #[arg(long)]
        t_max: f64,
        /// Number of equally spaced sample times in `[0, t_max]`.
        #[arg(long, default_value_t = 101)]
        samples: usize,
        /// Trajectory CSV; `<stem>.projected.csv` and `<stem>.profile.csv` are written beside it.
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Count positive and negative walks of length k between two nodes.
    Walks {
        input: PathBuf,
        #[arg(short, long)]
        k: usize,
        v: usize,
        w: usize,
    },
    /// Sample a signed stochastic block model graph.
    Generate {
        /// key=value config; command-line flags override it.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        groups: Option<usize>,
        #[arg(long)]
        rho_plus_in: Option<f64>,
        #[arg(long)]
        rho_plus_out: Option<f64>,
        #[arg(long)]
        rho_minus_in: Option<f64>,
        #[arg(long)]
        rho_minus_out: Option<f64>,
        /// Split nodes into groups of equal size.
        #[arg(long)]
        balanced_groups: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}
