mod run;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "magiclat",
    version,
    about = "Magic labelings of graphs and digraphs"
)]
pub struct Cli {
    /// Write JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for the parallel stages.
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,
    /// Hilbert basis algorithm.
    #[arg(long, global = true, value_enum, default_value_t = Algorithm::Completion)]
    pub algorithm: Algorithm,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    Completion,
    /// One constraint at a time; use for hosts with many edges.
    Intersection,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    #[command(flatten)]
    Host(HostCommand),
    /// Run a host command on the complete digraph with loops on k vertices.
    Birkhoff {
        #[arg(long = "n", value_name = "K")]
        n: usize,
        #[command(subcommand)]
        command: HostCommand,
    },
    /// Split a labeling into factors with disjoint supports.
    Factorize {
        file: PathBuf,
        /// Labeled edge list of the same host, or labels in edge order.
        label_file: PathBuf,
        /// One part per line, written as edge names (`u-v` or `u->v`).
        #[arg(long, value_name = "FILE", conflicts_with = "sums")]
        parts: Option<PathBuf>,
        /// Prescribed factor magic sums for the search.
        #[arg(long, value_delimiter = ',', value_name = "S,..")]
        sums: Option<Vec<u64>>,
    },
    /// Build the Cayley digraph of a group table and check its labeling.
    Cayley { table: PathBuf },
    /// Convert between hosts, labelings and matrices.
    #[command(subcommand)]
    Convert(Convert),
}

#[derive(Args, Debug, Clone)]
pub struct Input {
    /// Edge-list file; omitted under `birkhoff`.
    pub file: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum HostCommand {
    /// Print the minimal Hilbert basis.
    Hilbert {
        #[command(flatten)]
        input: Input,
    },
    /// Count magic labelings of a given magic sum.
    Count {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        sum: u64,
    },
    /// Print the Ehrhart quasi-polynomial as JSON.
    Ehrhart {
        #[command(flatten)]
        input: Input,
    },
    /// List faces of the polytope.
    Faces {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        dim: Option<i64>,
        /// Compare digraph faces through their bipartite images.
        #[arg(long)]
        bipartite_image: bool,
    },
    /// Vertex-edge graph of the polytope.
    EdgeGraph {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        dot: bool,
    },
    /// Hasse diagram of the face poset.
    Poset {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        dot: bool,
    },
    /// Isomorphism classes of the d-faces.
    Classes {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        dim: i64,
        /// Compare digraph faces through their bipartite images.
        #[arg(long)]
        bipartite_image: bool,
    },
    /// Perfect matchings, or n-matchings with `--max n`.
    Matchings {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_name = "N")]
        max: Option<u64>,
    },
    /// Positivity and degree diagnostics.
    Check {
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Subcommand, Debug)]
pub enum Convert {
    /// Digraph to its bipartite image.
    Bipartite { file: PathBuf },
    /// Bipartite image back to the digraph.
    Digraph { file: PathBuf },
    /// Labeling of a complete digraph with loops, K_{n,n} or a complete
    /// graph with loops to a matrix.
    ToMatrix { file: PathBuf },
    /// Matrix to a labeled edge list.
    FromMatrix {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Target::Digraph)]
        target: Target,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Digraph,
    Bipartite,
    /// Complete graph with loops; the matrix must be symmetric.
    General,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run::run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
