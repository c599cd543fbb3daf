use std::path::PathBuf;
use std::process;

use clap::{Args, Parser, Subcommand};

use frachelm::cli::{self, WorkflowArgs};

#[derive(Parser)]
#[command(
    name = "frachelm",
    version,
    about = "Spectral solver and verification toolkit for a fractional Helmholtz equation \
             with an involution-perturbed transverse term"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Workflow {
    /// Run configuration file (TOML)
    #[arg(long)]
    config: PathBuf,
    /// Output directory for CSV/JSON artifacts
    #[arg(long, default_value = ".")]
    out: PathBuf,
    /// Worker thread count, overriding the config (0 = library default)
    #[arg(long)]
    threads: Option<usize>,
    /// Treat boundary compatibility findings as errors
    #[arg(long)]
    strict_compat: bool,
    /// Test hook: corrupt the assembled solution before verification
    #[arg(long, hide = true)]
    corrupt: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Assemble the series solution; write field.csv and report.json
    Solve(Workflow),
    /// Solve, then measure PDE residuals, boundary errors, and the
    /// refinement ladder; write verify.json and ladder.csv
    Verify(Workflow),
    /// Run the refinement ladder only; write ladder.csv
    Converge(Workflow),
    /// Tabulate E_{alpha,beta}(z); CSV columns z, value
    Mlf {
        alpha: f64,
        beta: f64,
        /// Comma-separated arguments, e.g. "0,1,2.5"
        zs: String,
        /// Write mlf.csv into this directory instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate the eigenstructure of one problem kind; CSV columns
    /// index, family, k, wavenumber, lambda
    Basis {
        /// dirichlet | neumann | periodic | antiperiodic
        kind: String,
        eps: f64,
        n: u32,
        /// Write basis.csv into this directory instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate the two-point kernels; CSV columns t, c, s
    Kernel {
        alpha: f64,
        mu: f64,
        /// Comma-separated t values in [0, 1], e.g. "0,0.5,1"
        ts: String,
        /// Write kernel.csv into this directory instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn workflow_args(w: &Workflow) -> WorkflowArgs<'_> {
    WorkflowArgs {
        config: &w.config,
        out: &w.out,
        threads: w.threads,
        strict_compat: w.strict_compat,
        corrupt: w.corrupt,
    }
}

fn main() {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Solve(w) => cli::cmd_solve(&workflow_args(w)),
        Command::Verify(w) => cli::cmd_verify(&workflow_args(w)),
        Command::Converge(w) => cli::cmd_converge(&workflow_args(w)),
        Command::Mlf {
            alpha,
            beta,
            zs,
            out,
        } => cli::cmd_mlf(*alpha, *beta, zs, out.as_deref()),
        Command::Basis { kind, eps, n, out } => cli::cmd_basis(kind, *eps, *n, out.as_deref()),
        Command::Kernel {
            alpha,
            mu,
            ts,
            out,
        } => cli::cmd_kernel(*alpha, *mu, ts, out.as_deref()),
    };
    if let Err(e) = result {
        eprintln!("error: {}", e.message);
        process::exit(e.code);
    }
}
