//! `geodetic`: solve, check, generate and benchmark minimum geodetic set
//! instances.
//!
//! Documents go to standard output, diagnostics to standard error. Exit
//! codes: `0` success, `1` other failures (including cross-method
//! disagreement in `bench`), `2` unreadable or malformed input, `3` a
//! method precondition is not met, `4` the work budget ran out (the best
//! set found is still printed).

mod bench;
mod check;
mod failure;
mod generate;
mod solve;

use std::process::ExitCode;
use std::time::Duration;

use anyhow::Result;
use clap::{Args, Parser, Subcommand};
use geodetic::SolveBudget;

use failure::Failure;

#[derive(Parser, Debug)]
#[command(name = "geodetic", version, about = "Minimum geodetic set solvers and instance generators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute a minimum geodetic set.
    Solve(solve::SolveArgs),
    /// Check whether a given set is geodetic.
    Check(check::CheckArgs),
    /// Generate reduction instances or random corpora.
    Generate(generate::GenerateArgs),
    /// Run several methods over a corpus directory and compare sizes.
    Bench(bench::BenchArgs),
}

/// Work limits shared by the solving subcommands.
#[derive(Args, Debug, Clone, Copy)]
struct BudgetArgs {
    /// Wall-clock limit per solver run, in milliseconds.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    budget_ms: Option<u64>,
    /// Limit on candidate sets (or DP transitions) per solver run.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    max_candidates: Option<u64>,
}

impl BudgetArgs {
    fn budget(&self) -> SolveBudget {
        let mut b = SolveBudget::default();
        if let Some(ms) = self.budget_ms {
            b.time_limit = Duration::from_millis(ms);
        }
        if let Some(c) = self.max_candidates {
            b.max_candidates = c;
        }
        b
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Solve(a) => solve::run(&a),
        Command::Check(a) => check::run(&a),
        Command::Generate(a) => generate::run(&a),
        Command::Bench(a) => bench::run(&a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(e.downcast_ref::<Failure>().map_or(1, Failure::code))
        }
    }
}
