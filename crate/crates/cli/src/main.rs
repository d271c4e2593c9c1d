//! `ldk`: decide lattice inequalities over `Z_m`, build and inspect their
//! plane graphs, and solve transport problem files.
//!
//! Every run prints one JSON report on stdout and a short human-readable
//! summary on stderr. Exit codes: 0 success (including verdicts that say an
//! inequality fails), 1 I/O error, 2 parse error, 3 invalid graph or
//! problem, 4 internal consistency failure, 5 limit exceeded.

mod commands;
mod report;

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

use report::{CommandEcho, Report};

#[derive(Parser, Debug)]
#[command(name = "ldk", version, about = "Decide lattice inequalities in submodule lattices of Z_m-modules")]
pub struct Cli {
    /// Maximum number of maximal paths enumerated in a control graph.
    #[arg(long, global = true, env = "LDK_PATH_LIMIT", default_value_t = ldk_core::planegraph::DEFAULT_PATH_LIMIT)]
    pub path_limit: usize,

    /// Maximum number of vectors tried by brute-force enumeration.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pub enum_cap: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Absorb missing variables and balance an inequality.
    Normalize {
        /// Inequality `p <= q`, or `p = q` for both directions.
        identity: String,
    },
    /// Build the plane graph of a repetition-free term or load a graph file.
    Graph {
        #[command(flatten)]
        source: GraphSource,
        /// Use the dual graph.
        #[arg(long)]
        dual: bool,
        /// Write a Graphviz description to this path.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Include facet ids in DOT edge labels.
        #[arg(long)]
        facet_labels: bool,
    },
    /// Decide an inequality over Z_m for each listed modulus.
    Check {
        identity: String,
        /// Comma-separated moduli; 0 stands for the integers.
        #[arg(long = "mod", value_delimiter = ',', default_value = "0")]
        moduli: Vec<u64>,
        /// Also decide the dual inequality and the dual problem.
        #[arg(long)]
        self_dual: bool,
        /// Cross-check against the subspace lattice of F_m^d for prime moduli.
        #[arg(long, value_name = "D")]
        oracle: Option<u32>,
        /// Maximum number of variables for the oracle.
        #[arg(long, default_value_t = ldk_core::decision::DEFAULT_VAR_CAP)]
        var_cap: usize,
        /// Source value of the transport problem.
        #[arg(short = 'b', default_value = "1", allow_hyphen_values = true)]
        b: BigInt,
        /// Solve the facet-reduced system instead of one block per path.
        #[arg(long)]
        facet_reduced: bool,
    },
    /// Solve a transport problem file.
    Solve {
        #[arg(long)]
        problem: PathBuf,
        /// Also list every solution by brute force (bounded by --enum-cap).
        #[arg(long)]
        enumerate: bool,
        #[arg(long)]
        facet_reduced: bool,
    },
    /// List the maximal directed paths of a graph.
    Paths {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        dual: bool,
    },
}

#[derive(Args, Debug)]
pub struct GraphSource {
    /// Repetition-free term such as `x1 /\ (x2 \/ x3)`.
    #[arg(required_unless_present = "file", conflicts_with = "file")]
    pub term: Option<String>,
    /// Graph file in JSON.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

fn main() {
    let cli = Cli::parse();
    let mut inputs = BTreeMap::new();
    let name = cli.command.name();
    let result = commands::run(&cli, &mut inputs);
    let (outputs, status, error, human) = match result {
        Ok(done) => (done.outputs, done.status, None, done.human),
        Err(failure) => {
            let human = vec![format!("error: {}", failure.info.message)];
            (serde_json::Value::Null, failure.status, Some(failure.info), human)
        }
    };
    let report = Report {
        command: CommandEcho {
            args: std::env::args().skip(1).collect(),
            name: name.to_owned(),
        },
        inputs,
        outputs,
        status,
        error,
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("reports serialize")
    );
    for line in human {
        eprintln!("{line}");
    }
    std::process::exit(status.exit_code());
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Normalize { .. } => "normalize",
            Command::Graph { .. } => "graph",
            Command::Check { .. } => "check",
            Command::Solve { .. } => "solve",
            Command::Paths { .. } => "paths",
        }
    }
}
