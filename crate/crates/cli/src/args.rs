use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// Settings shared by every subcommand. Each one can also come from a
/// `MINRHO_*` environment variable.
#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    /// Enclosure width for printed radii (rational or decimal, e.g. 1/1000000).
    #[arg(long, global = true, env = "MINRHO_TOL", default_value = "1/1000000")]
    pub tol: String,
    /// Largest tree order accepted by enumeration and tree searches.
    #[arg(long, global = true, env = "MINRHO_MAX_TREE_N", default_value_t = 18)]
    pub max_tree_n: usize,
    /// Largest order for labelled general-graph enumeration.
    #[arg(long, global = true, env = "MINRHO_MAX_GRAPH_N", default_value_t = 8)]
    pub max_graph_n: usize,
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long, global = true, env = "MINRHO_WORKERS")]
    pub workers: Option<usize>,
    #[arg(
        long,
        global = true,
        env = "MINRHO_FORMAT",
        value_enum,
        default_value = "table"
    )]
    pub format: Format,
}

#[derive(Parser, Debug)]
#[command(
    name = "minrho",
    version,
    about = "Exact spectral radius and domination toolkit for small trees and graphs"
)]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a named graph and print it as graph6.
    ///
    /// Families: path N, complete N, cycle N, star LEAVES, corona --of FAMILY:ARGS,
    /// T SPINE I J, starlike --a .. --b .. --c .., Wn N, S10, H K (1..=25), Tk K (1..=3).
    Build {
        family: String,
        params: Vec<String>,
        /// Base graph for `corona`, e.g. `path:4` or a graph6 string.
        #[arg(long)]
        of: Option<String>,
        /// Leg parameters for `starlike` (comma separated).
        #[arg(long, value_delimiter = ',')]
        a: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        b: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        c: Vec<usize>,
        /// Print graph6 (the default).
        #[arg(long)]
        graph6: bool,
        /// Also print the adjacency list.
        #[arg(long)]
        pretty: bool,
    },
    /// Certified spectral radius of a connected graph.
    Rho {
        /// graph6, or `-` for stdin.
        graph: String,
        /// Compare exactly against a second graph and print Less, Equal or Greater.
        #[arg(long, value_name = "GRAPH6")]
        exact_compare: Option<String>,
        /// Print the rational enclosure bounds as well.
        #[arg(long)]
        bounds: bool,
    },
    /// Domination number, optionally with a certificate.
    Gamma {
        /// graph6, or `-` for stdin.
        graph: String,
        #[arg(long)]
        certificate: bool,
        /// Force every support vertex into the set (trees only).
        #[arg(long)]
        with_supports: bool,
    },
    /// Stream non-isomorphic trees on N vertices through structural filters.
    Enumerate(EnumerateArgs),
    /// Run claim verifiers and emit one report per claim and order.
    Verify {
        /// Claim id, or `all`.
        claim: String,
        /// Orders to test, `a..b` inclusive or a single number.
        #[arg(long)]
        n_range: Option<String>,
        /// Also write a JUnit XML report here.
        #[arg(long)]
        junit: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    /// Number of vertices.
    pub n: usize,
    #[arg(long)]
    pub gamma: Option<usize>,
    #[arg(long)]
    pub max_deg: Option<usize>,
    #[arg(long)]
    pub max_deg_eq: Option<usize>,
    #[arg(long)]
    pub leaf_mult: Option<usize>,
    #[arg(long)]
    pub diameter_eq: Option<usize>,
    #[arg(long)]
    pub diameter_le: Option<usize>,
    #[arg(long)]
    pub caterpillar: bool,
    /// Print only the number of matching trees.
    #[arg(long, conflicts_with = "list")]
    pub count: bool,
    /// Print matching trees as graph6 lines (the default).
    #[arg(long)]
    pub list: bool,
    /// Continue after the position stored in this checkpoint file.
    #[arg(long)]
    pub resume: Option<PathBuf>,
    /// Write the stream position here periodically and at the end.
    #[arg(long, env = "MINRHO_CHECKPOINT")]
    pub checkpoint: Option<PathBuf>,
}
