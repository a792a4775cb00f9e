use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use reciprocity_cli::commands::{self, MatrixName, MethodArg, RunConfig};
use reciprocity_cli::spec::{parse_edge_set, parse_rational, AllowedSpec, GroupSpec};
use reciprocity_cli::{CliError, Format, Output};
use reciprocity_core::Limits;

/// Exact colorings, subgraph posets and reciprocity checks.
#[derive(Debug, Parser)]
#[command(name = "reciprocity", version)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    /// Work cap per coordinate (colorings or kernel elements enumerated).
    #[arg(long, global = true)]
    budget: Option<u128>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Vertices {
    /// Number of vertices.
    #[arg(long, default_value_t = 4)]
    v: usize,
}

#[derive(Debug, Args)]
struct Coloring {
    #[command(flatten)]
    vertices: Vertices,
    /// Group such as Z5, Z2^3 or Z3xZ9.
    #[arg(long)]
    group: GroupSpec,
    /// interval:k, hamming:k, nonzero or set:{...}.
    #[arg(long)]
    allowed: AllowedSpec,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the isthmus-free edge sets on v vertices.
    Poset(Vertices),
    /// Print zeta, mobius, J, Jinv or M over the poset.
    Matrix {
        #[arg(value_enum)]
        which: MatrixName,
        #[command(flatten)]
        vertices: Vertices,
        /// Evaluate at this rational instead of printing polynomials in r.
        #[arg(long)]
        r: Option<String>,
        /// Reverse the index order, complete graph first.
        #[arg(long)]
        paper_order: bool,
        /// Summarize by isomorphism class.
        #[arg(long)]
        blocks: bool,
        /// Compare against the documented display errors (v = 4).
        #[arg(long)]
        errata: bool,
    },
    /// Probability that every edge difference lies in the allowed set.
    Gamma {
        #[command(flatten)]
        coloring: Coloring,
        /// Add per-coordinate wall time in microseconds.
        #[arg(long)]
        timing: bool,
    },
    /// Check the reciprocity identity coordinatewise.
    Verify(Coloring),
    /// Chromatic polynomials through the transfer matrix.
    Chromatic {
        #[command(flatten)]
        vertices: Vertices,
        /// A single graph, e.g. v=4;edges=01,02,12 or v=4;mask=0b001011.
        #[arg(long)]
        edges: Option<String>,
    },
    /// Reproduce worked example 1, 2 or 3.
    Examples { which: u32 },
}

fn config(v: usize, budget: Option<u128>) -> RunConfig {
    RunConfig {
        budget,
        ..RunConfig::new(v)
    }
}

fn coloring_config(c: Coloring, budget: Option<u128>) -> RunConfig {
    RunConfig {
        group: Some(c.group),
        allowed: Some(c.allowed),
        method: c.method,
        ..config(c.vertices.v, budget)
    }
}

fn run(cli: Cli) -> Result<Output, CliError> {
    let budget = cli.budget;
    match cli.command {
        Command::Poset(Vertices { v }) => commands::cmd_poset(&config(v, budget)),
        Command::Matrix {
            which,
            vertices,
            r,
            paper_order,
            blocks,
            errata,
        } => {
            let r = r.as_deref().map(parse_rational).transpose()?;
            let cfg = RunConfig {
                paper_order,
                ..config(vertices.v, budget)
            };
            commands::cmd_matrix(&cfg, which, r.as_ref(), blocks, errata)
        }
        Command::Gamma { coloring, timing } => commands::cmd_gamma(&RunConfig {
            timing,
            ..coloring_config(coloring, budget)
        }),
        Command::Verify(coloring) => commands::cmd_verify(&coloring_config(coloring, budget)),
        Command::Chromatic { vertices, edges } => {
            let edges = edges.as_deref().map(parse_edge_set).transpose()?;
            commands::cmd_chromatic(&config(vertices.v, budget), edges.as_ref())
        }
        Command::Examples { which } => {
            let limits = budget.map_or_else(Limits::default, |b| Limits::default().with_budget(b));
            commands::cmd_examples(which, &limits)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(out) => {
            print!("{}", out.render(format));
            ExitCode::from(out.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
