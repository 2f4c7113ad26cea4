use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;

/// Exact directed pattern counting and structural classification.
#[derive(Debug, Parser)]
#[command(name = "dpc", version, about)]
struct Cli {
    /// Raise a size limit, e.g. `--limit sub_pattern=8`. Repeatable.
    #[arg(long = "limit", global = true, value_name = "KEY=VALUE")]
    limits: Vec<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountKind {
    Hom,
    Sub,
    Indsub,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BasisKind {
    Sub,
    Indsub,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GadgetKind {
    Sink,
    Contract,
    Loop,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Structural invariants and tractability criteria of a pattern.
    Analyze {
        pattern: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Count homomorphisms, subgraphs or induced subgraphs.
    Count {
        kind: CountKind,
        pattern: PathBuf,
        host: PathBuf,
        /// Use the brute-force reference instead of the engine.
        #[arg(long, conflicts_with = "verify")]
        brute: bool,
        /// Run both and fail with exit code 4 if they disagree.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Print the homomorphism basis of a pattern.
    Basis { kind: BasisKind, pattern: PathBuf },
    /// Fractional hypertree width of a hypergraph.
    Fhtw { hypergraph: PathBuf },
    /// Recover hom counts from a brute-force subgraph oracle by interpolation.
    Interpolate { pattern: PathBuf, host: PathBuf },
    /// Lift a host coloured by a minor of the pattern back to the pattern.
    Gadget {
        kind: GadgetKind,
        /// The larger pattern H.
        pattern: PathBuf,
        /// Host coloured by the minor of H.
        host: PathBuf,
        /// sink: the vertices of the sink class; contract: u v; loop: u.
        args: Vec<usize>,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
    /// Generate a random host with bounded outdegree.
    GenHost {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        maxout: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        acyclic: bool,
        #[arg(long)]
        loops: bool,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(commands::EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match commands::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
