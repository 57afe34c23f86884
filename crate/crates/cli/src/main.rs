mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use report::Inputs;

/// Generalised colouring numbers, tree-decomposition orders, neighbourhood
/// covers and the experiments around them.
///
/// Graphs are edge-list files (`n m` header, then `u v` with u < v, 0-based)
/// or built-in names written `named:petersen`, `named:cycle(7)`, ...
/// Subdivisions put exactly `s` new vertices on every edge.
#[derive(Parser)]
#[command(name = "gencol", version, propagate_version = true)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
pub struct Global {
    /// Seed for every random choice (ChaCha8).
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Search-node budget for exact solvers and brute-force searches.
    #[arg(long, global = true, default_value_t = 20_000_000)]
    pub budget: u64,
    /// Vertex cap for exact solvers.
    #[arg(long, global = true, default_value_t = 11)]
    pub cap: usize,
    /// Write a JSON report here.
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Write a CSV table here.
    #[arg(long, global = true, value_name = "PATH")]
    pub csv: Option<PathBuf>,
    /// Suppress the human-readable summary.
    #[arg(long, short, global = true)]
    pub quiet: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Measure {
    Wcol,
    Col,
    Adm,
}

impl Measure {
    pub fn name(self) -> &'static str {
        match self {
            Measure::Wcol => "wcol",
            Measure::Col => "col",
            Measure::Adm => "adm",
        }
    }
}

/// Where an order comes from. Without any option the degeneracy order is used.
#[derive(Args, Clone, Default)]
pub struct OrderSource {
    /// Solve exactly (small graphs only).
    #[arg(long, conflicts_with_all = ["order", "heuristic"])]
    pub exact: bool,
    /// Read the order from a file (`rank(0) rank(1) ...`, ranks 1..=n).
    #[arg(long, value_name = "FILE", conflicts_with = "heuristic")]
    pub order: Option<PathBuf>,
    /// Named heuristic: identity, degeneracy or greedy-adm.
    #[arg(long, value_name = "NAME")]
    pub heuristic: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate or solve wcol_r, col_r or adm_r.
    Compute {
        measure: Measure,
        graph: String,
        #[arg(short, long)]
        r: usize,
        #[command(flatten)]
        source: OrderSource,
        /// Write the order behind the value here.
        #[arg(long, value_name = "FILE")]
        witness: Option<PathBuf>,
    },
    /// Produce an order file.
    Order {
        graph: String,
        #[arg(short, long, default_value_t = 1)]
        r: usize,
        /// Measure to optimise with --exact.
        #[arg(long, default_value = "wcol")]
        measure: Measure,
        #[command(flatten)]
        source: OrderSource,
        /// Root-first order of this tree decomposition instead.
        #[arg(long, value_name = "FILE", conflicts_with_all = ["exact", "order", "heuristic"])]
        td: Option<PathBuf>,
        #[arg(short, long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Generate graphs.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Tree-decomposition files.
    #[command(subcommand)]
    Td(TdCommand),
    /// Neighbourhood covers.
    #[command(subcommand)]
    Cover(CoverCommand),
    /// Reductions.
    #[command(subcommand)]
    Reduce(ReduceCommand),
    /// Brute-force topological grad of a small graph.
    Tgrad {
        graph: String,
        #[arg(short, long)]
        r: usize,
    },
    /// Experiments over sampled orders and random graphs.
    #[command(subcommand)]
    Exp(ExpCommand),
}

#[derive(Subcommand)]
pub enum GenCommand {
    /// The extremal graph G(k, r) and its tree decomposition.
    Gkr {
        #[arg(short)]
        k: usize,
        #[arg(short)]
        r: usize,
        /// Vertex cap for the construction.
        #[arg(long, default_value_t = 100_000)]
        max_vertices: u128,
        #[arg(short, long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Write the decomposition (PACE format) here.
        #[arg(long, value_name = "FILE")]
        td: Option<PathBuf>,
        /// Smooth the decomposition before writing it.
        #[arg(long)]
        smooth: bool,
    },
    /// A built-in graph, e.g. `petersen` or `cycle(7)`.
    Named {
        name: String,
        #[arg(short, long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Put `s` new vertices on every edge.
    Subdivide {
        graph: String,
        #[arg(short)]
        s: usize,
        #[arg(short, long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    Complement {
        graph: String,
        #[arg(short, long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
pub enum TdCommand {
    Validate { graph: String, td: PathBuf },
    Smooth {
        graph: String,
        td: PathBuf,
        #[arg(short, long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Root-first order; with -r also checks the binomial bound up to r.
    Order {
        graph: String,
        td: PathBuf,
        #[arg(short, long)]
        r: Option<usize>,
        #[arg(short, long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
pub enum CoverCommand {
    /// Clusters from weak 2r-reachability under an order.
    Build {
        graph: String,
        #[arg(short, long)]
        r: usize,
        #[command(flatten)]
        source: OrderSource,
        #[arg(short, long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    Check {
        graph: String,
        cover: PathBuf,
        #[arg(short, long)]
        r: usize,
    },
    /// Restrict a cover of the s-subdivision of H to H and check it.
    Project {
        subdivided: String,
        base: String,
        cover: PathBuf,
        #[arg(short)]
        s: usize,
        /// Radius the projected cover is checked against in H.
        #[arg(short, long)]
        r: usize,
        #[arg(short, long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
pub enum ReduceCommand {
    /// Balanced biclique to wcol_3 on the complement.
    Bcbs {
        /// A bipartite graph; sides come from its two-colouring.
        graph: String,
        #[arg(short)]
        k: usize,
        /// Edge list of the reduced instance; a `.json` sidecar goes next to it.
        #[arg(short, long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Solve both sides exactly and check the equivalence.
        #[arg(long)]
        verify: bool,
    },
}

#[derive(Subcommand)]
pub enum ExpCommand {
    /// W_r against the regular high-girth lower bound, per order.
    GirthLb {
        graph: String,
        #[arg(short, long)]
        r: usize,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// U_2r >= U_r^2/(2n) - U_r/2, per order.
    Cauchy {
        graph: String,
        #[arg(short, long)]
        r: usize,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// adm_r <= 6r * tgrad_{r-1}^3 on random graphs.
    AdmBound {
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 5)]
        n_min: usize,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(short, default_value_t = 0.5)]
        p: f64,
        #[arg(long, value_delimiter = ',', default_value = "1,2")]
        radii: Vec<usize>,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    let g = cli.global.clone();
    let start = Instant::now();
    let mut inputs = Inputs::default();
    let mut report = commands::run(cli.command, &g, &mut inputs)?;
    report.finish(&inputs, start.elapsed().as_millis());
    if let Some(path) = &g.json {
        report.write_json(path)?;
    }
    if let Some(path) = &g.csv {
        report.write_csv(path)?;
    }
    if let Some(why) = report.failure {
        bail!(why);
    }
    Ok(())
}
