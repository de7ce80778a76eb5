use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gibonacci::exactnum::{parse_rational, Rational};
use gibonacci::game::Node;

#[derive(Debug, Parser)]
#[command(name = "gib", version, about = "Exact Gibonacci polynomials, games and posets")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = "GIB_FORMAT", default_value = "text")]
    pub format: Format,

    /// Significant digits for decimal renderings.
    #[arg(long, global = true, default_value_t = 30, value_parser = clap::value_parser!(u32).range(1..=10000))]
    pub digits: u32,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Dot => "dot",
        }
    }
}

#[derive(Debug, Subcommand)]
#[allow(clippy::large_enum_variant)]
pub enum Command {
    /// Rows of the Gibonacci array.
    Array {
        #[command(flatten)]
        params: ParamArgs,
        /// Last row index.
        #[arg(long, default_value_t = 9)]
        rows: usize,
    },
    /// The sign-alternating polynomial G_k.
    Poly {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        k: i64,
    },
    /// Certified real roots of G_k.
    Roots {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        k: i64,
    },
    /// G_k(x) through the eigenvalue formula, next to the recurrence value.
    Binet {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        k: usize,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        x: Rational,
        /// Bits of precision when the result is not exact.
        #[arg(long, default_value_t = 128)]
        precision: u32,
    },
    /// The two-node seeded game.
    #[command(subcommand)]
    Game(GameCommand),
    /// Symmetric alpha-Gibonaccian posets.
    #[command(subcommand)]
    Poset(PosetCommand),
    /// The symmetric Gibonacci triangle.
    #[command(subcommand)]
    Triangle(TriangleCommand),
    /// Invariant suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct ParamArgs {
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub alpha: Rational,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub beta: Rational,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub p: Rational,
    /// Edge weight q; exclusive with --root.
    #[arg(long, value_parser = rational, allow_hyphen_values = true, required_unless_present = "root", conflicts_with = "root")]
    pub q: Option<Rational>,
    /// Choose q so that pq is the largest root r_K.
    #[arg(long, value_name = "K")]
    pub root: Option<i64>,
}

#[derive(Debug, Args)]
pub struct StartArgs {
    #[arg(long, value_parser = rational, allow_hyphen_values = true, required_unless_present = "symbolic")]
    pub a: Option<Rational>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true, required_unless_present = "symbolic")]
    pub b: Option<Rational>,
    /// Treat a and b as generic positive numbers.
    #[arg(long, conflicts_with_all = ["a", "b"])]
    pub symbolic: bool,
}

#[derive(Debug, Subcommand)]
pub enum GameCommand {
    /// Play a game under a strategy and print the trace.
    Play {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        start: StartArgs,
        #[arg(long, value_parser = node, default_value = "g1")]
        first: Node,
        #[arg(long, value_enum, default_value = "alternate")]
        strategy: StrategyArg,
        /// Nodes fired after the first move, e.g. g2,g1,g2; implies a scripted strategy.
        #[arg(long, value_delimiter = ',', value_parser = node)]
        script: Option<Vec<Node>>,
        #[arg(long, default_value_t = 1000)]
        budget: usize,
    },
    /// Regime and strong convergence of the game graph.
    Classify {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Exact move count from (a, b) and the switching threshold.
    Predict {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        b: Rational,
        #[arg(long, value_parser = node, default_value = "g1")]
        first: Node,
    },
    /// Fire nodes by hand.
    Repl {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        start: StartArgs,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum StrategyArg {
    GreedyG1,
    GreedyG2,
    Alternate,
}

#[derive(Debug, Args)]
pub struct PosetArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub alpha: u32,
}

#[derive(Debug, Subcommand)]
pub enum PosetCommand {
    /// Elements, Hasse edges and ranks.
    Enum(PosetArgs),
    /// Rank generating function.
    Rgf(PosetArgs),
    /// Validate one string, or report the structure of the whole poset.
    Check {
        #[command(flatten)]
        poset: PosetArgs,
        /// Comma-separated coordinates, e.g. 1,5,12.
        #[arg(long, value_delimiter = ',')]
        string: Option<Vec<u32>>,
    },
}

#[derive(Debug, Subcommand)]
pub enum TriangleCommand {
    /// Row k with its r-indices.
    Row {
        #[arg(long)]
        alpha: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// arrays, polys, roots, game, posets, all or thm54.
    pub suite: String,
    #[arg(long)]
    pub root_k: Option<i64>,
    #[arg(long)]
    pub closed_k: Option<i64>,
    #[arg(long)]
    pub bits: Option<u32>,
    #[arg(long)]
    pub game_j: Option<i64>,
    #[arg(long)]
    pub game_root_k: Option<i64>,
    #[arg(long)]
    pub poset_n: Option<u32>,
    #[arg(long)]
    pub poset_k: Option<usize>,
    #[arg(long)]
    pub four_m: Option<i64>,
    /// thm54 only.
    #[arg(long, default_value_t = 1)]
    pub alpha: u32,
    /// thm54 only.
    #[arg(long, default_value_t = 3)]
    pub n: u32,
    /// thm54 only.
    #[arg(long, default_value_t = 8)]
    pub k_max: usize,
    /// Compare the outcome of every check with a saved JSON report.
    #[arg(long, value_name = "FILE")]
    pub golden: Option<PathBuf>,
    /// Write the JSON report to a file.
    #[arg(long, value_name = "FILE")]
    pub save: Option<PathBuf>,
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

pub fn node(s: &str) -> Result<Node, String> {
    match s.trim().to_ascii_lowercase().as_str() {
        "g1" | "1" | "gamma1" => Ok(Node::G1),
        "g2" | "2" | "gamma2" => Ok(Node::G2),
        other => Err(format!("unknown node {other:?}; expected g1 or g2")),
    }
}
