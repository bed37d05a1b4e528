use std::io::{IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use bettisize::report::{
    parse_edges, run_atlas, run_compute, run_conjecture, run_construct, run_verify, VerifyTarget,
};
use bettisize::{Field, Graph, ReportDocument};
use clap::{Args, Parser, Subcommand};

/// Projective dimension and regularity of binomial edge ideals.
#[derive(Parser)]
#[command(name = "bettisize", version)]
struct Cli {
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true, env = "BETTISIZE_JOBS")]
    jobs: Option<usize>,

    /// Coefficient field: q, f2 or fp:<p>.
    #[arg(long, global = true, default_value = "q")]
    field: Field,

    /// Write the JSON report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// pd, reg and depth of one graph.
    Compute {
        #[command(flatten)]
        graph: GraphArgs,
        /// Include the Betti table of S/in(J_G).
        #[arg(long)]
        betti: bool,
    },
    /// Build and verify a graph with prescribed pd and reg.
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pd: u32,
        #[arg(long)]
        reg: u32,
        /// Require a connected witness.
        #[arg(long)]
        connected: bool,
    },
    /// Empirical pdreg(n) over all graphs on n non-isolated vertices.
    Atlas {
        #[arg(long)]
        n: usize,
        /// One graph per isomorphism class.
        #[arg(long)]
        dedup: bool,
        #[arg(long)]
        slow_ok: bool,
    },
    /// Run theorem checks over all graphs on n vertices up to isomorphism.
    Verify {
        #[arg(long)]
        n: usize,
        /// main_theorem, shadow, bounds, characterizations, composition, ohtani, clique
        /// or monotonicity; repeatable. Runs everything when absent.
        #[arg(long = "suite")]
        suites: Vec<VerifyTarget>,
        #[arg(long)]
        slow_ok: bool,
    },
    /// Check pd <= n for every graph with reg = n - 1.
    Conjecture {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        slow_ok: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphArgs {
    #[arg(long)]
    graph6: Option<String>,
    /// Edge list such as 1-2,2-3.
    #[arg(long)]
    edges: Option<String>,
    /// Vertex count for --edges (defaults to the largest label).
    #[arg(long, requires = "edges")]
    n: Option<usize>,
}

impl GraphArgs {
    fn graph(&self) -> bettisize::Result<Graph> {
        match (&self.graph6, &self.edges) {
            (Some(text), _) => Graph::from_graph6(text.trim()),
            (None, Some(edges)) => parse_edges(edges, self.n),
            (None, None) => unreachable!("clap enforces one graph input"),
        }
    }
}

fn run(cli: &Cli) -> ReportDocument {
    let field = cli.field;
    match &cli.command {
        Command::Compute { graph, betti } => match graph.graph() {
            Ok(g) => run_compute(&g, field, *betti),
            Err(e) => {
                let inputs = serde_json::json!({ "graph6": graph.graph6, "edges": graph.edges });
                ReportDocument::input_error("compute", inputs, field, &e)
            }
        },
        Command::Construct {
            n,
            pd,
            reg,
            connected,
        } => run_construct(*n, *pd, *reg, *connected, field),
        Command::Atlas { n, dedup, slow_ok } => run_atlas(*n, field, *dedup, *slow_ok),
        Command::Verify { n, suites, slow_ok } => {
            let targets = if suites.is_empty() {
                VerifyTarget::all(*n)
            } else {
                suites.clone()
            };
            run_verify(*n, &targets, field, *slow_ok)
        }
        Command::Conjecture { n, slow_ok } => run_conjecture(*n, field, *slow_ok),
    }
}

fn main() -> anyhow::Result<ExitCode> {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .context("configuring the worker pool")?;
    }
    let doc = run(&cli);
    let json = serde_json::to_string_pretty(&doc)?;
    if let Some(path) = &cli.out {
        std::fs::write(path, json.clone() + "\n")
            .with_context(|| format!("writing {}", path.display()))?;
    }
    match emit(&cli, &doc, &json) {
        // a closed reader (e.g. `| head`) is not an error
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
        other => other.context("writing the report")?,
    }
    Ok(ExitCode::from(doc.exit_code() as u8))
}

fn emit(cli: &Cli, doc: &ReportDocument, json: &str) -> std::io::Result<()> {
    let mut stdout = std::io::stdout().lock();
    if stdout.is_terminal() {
        write!(stdout, "{}", doc.render_text())
    } else if cli.out.is_none() {
        writeln!(stdout, "{json}")
    } else {
        Ok(())
    }
}
