//! `skolem-xray`: Skolem sets, diagonal X-rays and doubly stochastic
//! matrices from the command line.
//!
//! Exit codes: 0 found/ok, 1 proven none, 2 usage or input error,
//! 3 budget exhausted, 4 counterexample found.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::{emit, Exit, Format};

#[derive(Parser)]
#[command(name = "skolem-xray", version, about)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
pub struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write the output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Read the main input from a file (JSON or comma-separated).
    #[arg(long = "in", global = true, value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// Node budget per search; 0 means unlimited.
    #[arg(long, env = "SKOLEM_XRAY_BUDGET", default_value_t = 0, global = true)]
    pub budget: u64,
    /// Largest order accepted by sweeps.
    #[arg(long, env = "SKOLEM_XRAY_MAX_N", default_value_t = 8, global = true,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub max_n: u64,
    /// Worker threads for sweeps.
    #[arg(long, default_value_t = 1, global = true,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: u64,
    /// Suppress progress messages on standard error.
    #[arg(long, short, global = true)]
    pub quiet: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Diagonal or antidiagonal X-ray of a permutation.
    Xray {
        /// One-line notation, e.g. 3,2,4,1.
        #[arg(long)]
        perm: Option<String>,
        #[arg(long, value_enum, default_value_t = Direction::Diag)]
        direction: Direction,
    },
    /// Solve, count or decode Skolem-type pairings.
    Skolem {
        #[arg(value_enum)]
        action: SkolemAction,
        /// Differences for solve/count, symbols for sequence.
        #[arg(value_name = "VALUES")]
        values: Option<String>,
    },
    /// Apply the pairing/permutation correspondences.
    Bijection {
        #[arg(value_enum)]
        kind: BijectionKind,
        /// Pairing such as 1-7,2-6,3-8,4-5.
        #[arg(long, group = "src")]
        pairing: Option<String>,
        /// Skolem-type sequence such as 6,4,5,1,1,4,6,5.
        #[arg(long, group = "src")]
        sequence: Option<String>,
        /// Permutation in one-line notation.
        #[arg(long, group = "src")]
        perm: Option<String>,
    },
    /// Find a permutation (or doubly stochastic matrix) with a given diagonal X-ray.
    Recognize {
        /// X-ray entries; rationals p/q are allowed with --ds.
        xray: Option<String>,
        /// Solve the exact LP over doubly stochastic matrices instead.
        #[arg(long)]
        ds: bool,
    },
    /// Run a conjecture sweep over a range of orders, or recheck saved reports.
    Verify {
        /// Conjecture number, 1 to 6.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=6))]
        conjecture: Option<u8>,
        /// Order or inclusive range, e.g. 4 or 1..6.
        #[arg(long = "n", value_name = "RANGE")]
        orders: Option<String>,
        /// Sweep multisets instead of sets (conjecture 2).
        #[arg(long)]
        multisets: bool,
        /// Also write one JSON report per order into this directory.
        #[arg(long, value_name = "DIR")]
        report_dir: Option<PathBuf>,
    },
    /// Count (or list) tournament score vectors.
    ScoreVectors {
        /// Order or inclusive range.
        #[arg(long = "n", value_name = "RANGE")]
        orders: Option<String>,
        /// Print the vectors themselves.
        #[arg(long)]
        list: bool,
        /// Cross-check against enumeration of all tournaments.
        #[arg(long)]
        brute_force: bool,
    },
    /// Birkhoff decomposition of a doubly stochastic matrix (JSON).
    Birkhoff {
        /// Matrix as {"n":..,"entries":[[..],..]}.
        matrix: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Diag,
    Antidiag,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SkolemAction {
    Solve,
    Count,
    Sequence,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BijectionKind {
    /// Extremal pairings and permutations of order n.
    Extremal,
    /// Pairings and fixed-point-free involutions of order 2n.
    Involution,
}

fn run(cli: Cli) -> Result<Exit, commands::Failure> {
    let g = &cli.global;
    let rendered = match cli.command {
        Command::Xray { perm, direction } => commands::xray(g, perm, direction)?,
        Command::Skolem { action, values } => commands::skolem(g, action, values)?,
        Command::Bijection {
            kind,
            pairing,
            sequence,
            perm,
        } => commands::bijection(g, kind, pairing, sequence, perm)?,
        Command::Recognize { xray, ds } => commands::recognize(g, xray, ds)?,
        Command::Verify {
            conjecture,
            orders,
            multisets,
            report_dir,
        } => commands::verify(g, conjecture, orders, multisets, report_dir)?,
        Command::ScoreVectors {
            orders,
            list,
            brute_force,
        } => commands::score_vectors(g, orders, list, brute_force)?,
        Command::Birkhoff { matrix } => commands::birkhoff(g, matrix)?,
    };
    emit(rendered.body(g.format), g.out.as_deref())
        .map_err(|e| commands::Failure::usage(format!("cannot write output: {e}")))?;
    Ok(rendered.exit)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(exit) => exit,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.exit
        }
    };
    ExitCode::from(code as u8)
}

#[cfg(test)]
mod tests {
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        super::Cli::command().debug_assert();
    }
}
