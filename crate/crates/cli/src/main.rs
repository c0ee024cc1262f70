use std::io::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use oneext::genset::GenSetInstance;
use oneext::Limits;
use oneext_cli::{
    cmd_chi, cmd_decompose, cmd_gen, cmd_genset, cmd_pv, cmd_test, cmd_verify, load_graph, parse_sizes,
    read_input, ChiOptions, CliError, CliResult, Family, Method, Outcome,
};

/// 1-extendability, 1-extendable partitions and CSMA access shares of graphs.
///
/// Graphs are read as 0-based edge lists (`p n m`, then `e u v` lines) or as
/// JSON; `-` reads stdin. Exit status: 0 positive answer, 1 negative answer,
/// 2 input error, 3 resource budget exceeded.
#[derive(Parser)]
#[command(name = "oneext", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether every vertex lies in some maximum independent set.
    Test {
        input: String,
        #[arg(long, value_enum, default_value = "auto")]
        method: Method,
    },
    /// Compute the 1-extendable chromatic number.
    Chi {
        input: String,
        /// Only search for partitions with at most this many classes.
        #[arg(long)]
        max_k: Option<usize>,
        /// Write the certificate as `vertex color` lines.
        #[arg(long, value_name = "PATH")]
        emit_partition: Option<String>,
        /// Write a Graphviz file with vertices colored by class.
        #[arg(long, value_name = "PATH")]
        dot: Option<String>,
    },
    /// Check a partition certificate.
    Verify { input: String, partition: String },
    /// Per-vertex access proportions and their large-θ limits.
    Pv {
        input: String,
        /// Positive rational: integer, a/b, or decimal.
        #[arg(long, default_value = "50", allow_hyphen_values = true)]
        theta: String,
        /// Print decimals instead of exact fractions.
        #[arg(long)]
        float: bool,
    },
    /// Generate a graph document.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
        /// Emit JSON instead of the edge-list format.
        #[arg(long, global = true)]
        json: bool,
    },
    /// Print the modular decomposition tree and the modular width
    /// (a single vertex has width 1).
    Decompose { input: String },
    /// Solve a Generating Set instance.
    Genset {
        /// Instance file with `targets: ...` and `k: ...` lines.
        file: Option<String>,
        #[arg(long, conflicts_with = "file", requires = "k")]
        targets: Option<String>,
        #[arg(long, conflicts_with = "file")]
        k: Option<usize>,
    },
}

#[derive(Subcommand)]
enum GenFamily {
    /// Parts of sizes 1, 2, ..., 2^k.
    MultipartiteExtremal { k: u32 },
    /// G_1 = K1, G_{k+1} = K1 joined to two copies of G_k.
    IntervalExtremal { k: u32 },
    /// Complete multipartite graph, sizes like `2,3,4,7,9`.
    Multipartite { sizes: String },
    /// The input joined to an independent set of k·n+1 vertices.
    Hardness { k: usize, input: String },
    /// Erdős–Rényi graph G(n, p).
    Random {
        n: usize,
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn run(cli: Cli) -> CliResult<Outcome> {
    let limits = Limits::default();
    match cli.command {
        Command::Test { input, method } => cmd_test(&load_graph(&input)?, method, &limits),
        Command::Chi { input, max_k, emit_partition, dot } => {
            let opts = ChiOptions { max_k, emit_partition: emit_partition.as_deref(), dot: dot.as_deref() };
            cmd_chi(&load_graph(&input)?, &opts, &limits)
        }
        Command::Verify { input, partition } => cmd_verify(&load_graph(&input)?, &read_input(&partition)?),
        Command::Pv { input, theta, float } => cmd_pv(&load_graph(&input)?, &theta, float, &limits),
        Command::Decompose { input } => cmd_decompose(&load_graph(&input)?),
        Command::Gen { family, json } => {
            let base;
            let family = match family {
                GenFamily::MultipartiteExtremal { k } => Family::MultipartiteExtremal(k),
                GenFamily::IntervalExtremal { k } => Family::IntervalExtremal(k),
                GenFamily::Multipartite { sizes } => Family::Multipartite(parse_sizes(&sizes)?),
                GenFamily::Hardness { k, input } => {
                    base = load_graph(&input)?;
                    Family::Hardness { base: &base, k }
                }
                GenFamily::Random { n, p, seed } => Family::Random { n, p, seed },
            };
            let doc = cmd_gen(&family)?;
            Ok(Outcome { code: 0, stdout: if json { doc.to_json() } else { doc.to_edge_list() } })
        }
        Command::Genset { file, targets, k } => {
            let inst = match (file, targets, k) {
                (Some(path), _, _) => read_input(&path)?.parse::<GenSetInstance>()?,
                (None, Some(t), Some(k)) => {
                    let targets = parse_sizes(&t)?.into_iter().map(|s| s as u64).collect();
                    GenSetInstance::new(targets, k)?
                }
                _ => return Err(CliError::Invalid("give an instance file or --targets and --k".into())),
            };
            cmd_genset(&inst, &limits)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            let _ = std::io::stdout().write_all(out.stdout.as_bytes());
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
