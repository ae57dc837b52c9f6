//! `stacktop`: build string-topology algebras, run axiom checks and write
//! exact JSON artifacts.
//!
//! Exit status: 0 when every requested check passes, 1 when a check fails
//! (the report is still written), 2 on malformed input.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "stacktop", version, about = "Exact string-topology algebras and their axiom checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct GroupArgs {
    /// Built-in group: Z1..Z12, Z2xZ2, S3, S4, D4, Q8, A4.
    #[arg(long)]
    pub group: Option<String>,
    /// JSON table document `{"elements": [...], "rows": [[...], ...]}`.
    #[arg(long)]
    pub table: Option<PathBuf>,
    /// Generator in cycle notation, e.g. "(1 2)(3 4)"; repeatable.
    #[arg(long)]
    pub perms: Vec<String>,
}

#[derive(Args, Debug, Clone, Default)]
pub struct AlgebraArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// Algebra document previously written by this tool.
    #[arg(long)]
    pub algebra: Option<PathBuf>,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Output {
    /// Directory for artifacts; created if missing.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dijkgraaf–Witten algebra of a finite group.
    Dw {
        #[command(flatten)]
        group: GroupArgs,
        /// Comma-separated checks, `all` or `none`.
        #[arg(long, default_value = "none")]
        check: String,
        #[command(flatten)]
        out: Output,
    },
    /// String algebra of the reflection sphere orbifold.
    Sphere {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "none")]
        check: String,
        #[command(flatten)]
        out: Output,
    },
    /// Dual string product of a compact Lie group.
    Lie {
        #[arg(long)]
        lie_name: Option<String>,
        /// Comma-separated exponents, e.g. "1,2".
        #[arg(long)]
        exponents: Option<String>,
        /// Total x-degree bound.
        #[arg(long, default_value_t = 10)]
        truncate: u32,
        #[arg(long, default_value = "none")]
        check: String,
        #[command(flatten)]
        out: Output,
    },
    /// Sector table of the cyclic group generated by one diagonal element.
    Grading {
        /// Eigenvalue exponents of the generator, e.g. "1/3,2/3".
        #[arg(long)]
        exponents: String,
        #[arg(long, default_value = "none")]
        check: String,
        #[command(flatten)]
        out: Output,
    },
    /// Evaluate a connected surface operation.
    Tqft {
        #[command(flatten)]
        source: AlgebraArgs,
        #[arg(long, default_value_t = 0)]
        genus: usize,
        /// Input basis label; repeat once per incoming boundary.
        #[arg(long)]
        inputs: Vec<String>,
        #[arg(long, default_value_t = 1)]
        outputs: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Twist a product by a weight function and check the cocycle identity.
    Twist {
        #[command(flatten)]
        source: AlgebraArgs,
        /// Weight document `{"default": "1", "values": [[l, r, "p/q"], ...]}`.
        #[arg(long)]
        cocycle: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Run checks on an algebra document or a built-in algebra.
    Check {
        #[command(flatten)]
        source: AlgebraArgs,
        #[arg(long, default_value = "all")]
        check: String,
        #[command(flatten)]
        out: Output,
    },
    /// The map from the sphere string algebra to the truncated loop algebra.
    Phi {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        truncate: usize,
        #[command(flatten)]
        out: Output,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
