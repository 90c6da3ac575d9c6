//! `gasket`: tables, renders and checks for golden gaskets.
//!
//! Exit status is 0 on success, 2 when a run succeeds with a negative
//! verdict (a violation, no witness, a failed gap check) and 1 on errors.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "gasket", version, about = "Golden gaskets: exact hole analysis, dimensions and separation constants")]
pub struct Cli {
    /// Worker threads for parallel searches (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Print the resolved exact values and resource caps, then exit.
    #[arg(long, global = true)]
    pub dry_run: bool,
    /// Output file (default: standard output).
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct LambdaArgs {
    /// Contraction ratio, e.g. `omega:2`, `rational:59/100`, `real:0.59`, `lambda-star`.
    #[arg(long)]
    pub lambda: String,
    /// Simplex dimension.
    #[arg(long, default_value_t = 2)]
    pub dim: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dimensions of the planar golden gaskets for m = 2..9.
    Table1 {
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Dimensions of golden d-gaskets for d = 2..6 and m = 2..6.
    Table2 {
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// SVG picture of the level-n set.
    Render {
        #[command(flatten)]
        lambda: LambdaArgs,
        #[arg(long)]
        depth: usize,
        /// Image width in pixels.
        #[arg(long, default_value_t = 800)]
        width: u32,
        /// Shade the radial holes.
        #[arg(long)]
        radial_holes: bool,
        /// Shade the overlaps of the first-level images.
        #[arg(long)]
        overlaps: bool,
    },
    /// Classify the candidate holes of level n.
    Holes {
        #[command(flatten)]
        lambda: LambdaArgs,
        #[arg(long)]
        depth: usize,
    },
    /// Check that no candidate hole up to level n meets the next level.
    Selfsim {
        #[command(flatten)]
        lambda: LambdaArgs,
        #[arg(long)]
        depth: usize,
    },
    /// Bracket the area of the level-n set on a triangular grid.
    Area {
        #[command(flatten)]
        lambda: LambdaArgs,
        #[arg(long)]
        depth: usize,
        /// Grid resolution (cells per side).
        #[arg(long, default_value_t = 1024)]
        resolution: i64,
    },
    /// Box-counting slope of the level-n set.
    Boxdim {
        #[command(flatten)]
        lambda: LambdaArgs,
        #[arg(long)]
        depth: usize,
        /// Smallest grid exponent k (cell size lambda^k); default depth - 5.
        #[arg(long)]
        from: Option<usize>,
        /// Largest grid exponent k; default depth.
        #[arg(long)]
        to: Option<usize>,
    },
    /// Minimum of |sum s_k theta^k| over {0, +-1} vectors of bounded degree.
    Ell {
        /// Base, e.g. `golden`, `pisot:1`, `omega-inv:3`, `1.8`.
        #[arg(long)]
        theta: String,
        #[arg(long)]
        degree: usize,
    },
    /// Search for a converse witness at a non-multinacci ratio.
    Witness {
        #[arg(long)]
        lambda: String,
        /// Largest n tried.
        #[arg(long, default_value_t = 30)]
        max_n: usize,
    },
    /// Count words with no factor i j^m.
    Uniq {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Hole-counting sequences.
    Seq {
        #[arg(long, value_enum)]
        kind: SeqArg,
        /// Multinacci index for h and p.
        #[arg(long)]
        m: Option<usize>,
        /// Largest index.
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Greedy expansion of x in base 1/lambda.
    Expand {
        #[arg(long)]
        lambda: String,
        /// Value in [0, 1] (default 1).
        #[arg(long, default_value = "1")]
        x: String,
        #[arg(long)]
        n: usize,
        /// Replace a finite expansion by its periodic counterpart.
        #[arg(long)]
        periodic: bool,
    },
    /// Check that distinct 0/1 sums differ by at least lambda^(n+1).
    Gap {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        n: usize,
    },
    /// List the value families accepted by --lambda and --theta.
    Values,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeqArg {
    U,
    H,
    P,
    Trapezium,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match commands::run(&cli) {
        Ok(outcome) => ExitCode::from(outcome as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
