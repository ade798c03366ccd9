//! `kdecomp`: decide, certify and extend k-decomposable simplicial complexes.
//!
//! Exit codes: 0 yes, 1 no, 2 inconclusive (budget exhausted), 3 usage or
//! runtime error.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "kdecomp", version, about = "k-decomposability of pure simplicial complexes")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Search-node budget per decision; unbounded when omitted.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Seed for randomized sampling.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Print only the verdict line.
    #[arg(long, short, global = true)]
    pub quiet: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide k-decomposability and print a witness tree.
    Check {
        file: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Test a face for being a shedding face by the gluing and direct criteria.
    Shed {
        file: PathBuf,
        /// Labels of the face, separated by spaces or commas.
        #[arg(long, required = true, num_args = 1.., value_delimiter = ',')]
        face: Vec<String>,
    },
    /// Write a facet-by-facet extension trace.
    Extend {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Target::Simplex)]
        target: Target,
        /// Names for the cone vertices; fresh labels are used when omitted.
        #[arg(long, num_args = 1.., value_delimiter = ',')]
        cone_labels: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify every prefix of a trace file.
    Verify { file: PathBuf },
    /// Scan small skeleta of simplices up to isomorphism.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value_t = Mode::Extendability)]
        mode: Mode,
        /// Additional seeded random extension walks.
        #[arg(long, default_value_t = 0)]
        samples: usize,
        #[arg(long, default_value_t = 200_000)]
        max_classes: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Simplex,
    Cocl,
    Full,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Extendability,
    Thresholds,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { commands::EXIT_ERROR } else { 0 });
        }
    };
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
