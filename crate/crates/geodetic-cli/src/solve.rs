//! `solve`: method dispatch shared with `bench`.

use std::path::PathBuf;
use std::time::Instant;

use anyhow::Result;
use clap::{Args, ValueEnum};
use geodetic::chordal::{dp_min_geodetic_chordal_with, dp_min_geodetic_interval_with, ChordalError, DpConfig};
use geodetic::exact::{min_geodetic_blocks, min_geodetic_bruteforce, SolveError};
use geodetic::grid::{solid_grid_lower_bound, solve_solid_grid};
use geodetic::io::{to_json, Instance, ResultDocument};
use geodetic::{Method, SolveBudget, SolveResult, VertexSet};

use crate::failure::{self, read_instance, Failure};
use crate::BudgetArgs;

/// Solver selection; `auto` tries the solid-grid algorithm (when an
/// embedding is present), then the chordal DP, then the block solver.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Brute,
    Blocks,
    SolidGrid,
    Chordal,
    Interval,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    /// Instance file (graph, optionally with `v` or `i` lines).
    input: PathBuf,
    /// Solver to run.
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,
    /// Largest clique size accepted by the dynamic programs.
    #[arg(long)]
    omega_cap: Option<usize>,
    #[command(flatten)]
    budget: BudgetArgs,
}

/// What running one method on one instance produced.
#[derive(Debug)]
pub enum Outcome {
    Solved { result: SolveResult, lower_bound: Option<usize> },
    /// The budget ran out; the result holds the best set known.
    Exhausted(SolveResult),
    /// The method does not apply to this instance.
    Inapplicable(String),
}

fn exhausted(n: usize, method: Method, start: Instant) -> Outcome {
    Outcome::Exhausted(SolveResult {
        set: VertexSet::full(n),
        size: n,
        optimal: false,
        method,
        elapsed: start.elapsed(),
    })
}

fn from_exact(r: Result<SolveResult, SolveError>) -> Outcome {
    match r {
        Ok(result) if result.optimal => Outcome::Solved { result, lower_bound: None },
        Ok(result) => Outcome::Exhausted(result),
        Err(e) => Outcome::Inapplicable(e.to_string()),
    }
}

fn from_dp(r: Result<SolveResult, ChordalError>, n: usize, method: Method, start: Instant) -> Outcome {
    match r {
        Ok(result) => Outcome::Solved { result, lower_bound: None },
        Err(ChordalError::BudgetExhausted) => exhausted(n, method, start),
        Err(e) => Outcome::Inapplicable(e.to_string()),
    }
}

/// Runs `method` on `inst`.
pub fn solve_with(inst: &Instance, method: MethodArg, budget: SolveBudget, omega_cap: Option<usize>) -> Outcome {
    let g = &inst.graph;
    let start = Instant::now();
    match method {
        MethodArg::Auto => {
            for m in [MethodArg::SolidGrid, MethodArg::Chordal] {
                if m == MethodArg::SolidGrid && inst.embedding.is_none() {
                    continue;
                }
                match solve_with(inst, m, budget, omega_cap) {
                    Outcome::Inapplicable(_) => continue,
                    done => return done,
                }
            }
            solve_with(inst, MethodArg::Blocks, budget, omega_cap)
        }
        MethodArg::Brute => from_exact(min_geodetic_bruteforce(g, budget)),
        MethodArg::Blocks => from_exact(min_geodetic_blocks(g, budget)),
        MethodArg::SolidGrid => {
            let Some(emb) = &inst.embedding else {
                return Outcome::Inapplicable("the solid-grid method needs `v` coordinate lines".into());
            };
            match (solve_solid_grid(g, emb), solid_grid_lower_bound(g, emb)) {
                (Ok(result), Ok(lb)) => Outcome::Solved {
                    result,
                    lower_bound: Some(lb),
                },
                (Err(e), _) | (_, Err(e)) => Outcome::Inapplicable(e.to_string()),
            }
        }
        MethodArg::Chordal => {
            let mut config = DpConfig::chordal();
            if let Some(cap) = omega_cap {
                config.omega_cap = cap;
            }
            from_dp(dp_min_geodetic_chordal_with(g, budget, &config), g.n(), Method::Chordal, start)
        }
        MethodArg::Interval => {
            let Some(rep) = &inst.intervals else {
                return Outcome::Inapplicable("the interval method needs `i` interval lines".into());
            };
            let mut config = DpConfig::interval();
            if let Some(cap) = omega_cap {
                config.omega_cap = cap;
            }
            from_dp(dp_min_geodetic_interval_with(rep, budget, &config), g.n(), Method::Interval, start)
        }
    }
}

pub fn run(args: &SolveArgs) -> Result<u8> {
    let inst = read_instance(&args.input)?;
    match solve_with(&inst, args.method, args.budget.budget(), args.omega_cap) {
        Outcome::Inapplicable(why) => Err(Failure::precondition(why)),
        Outcome::Solved { result, lower_bound } => {
            let doc = ResultDocument {
                lower_bound,
                ..ResultDocument::from_result(&result)
            };
            print!("{}", to_json(&doc));
            Ok(0)
        }
        Outcome::Exhausted(result) => {
            print!("{}", to_json(&ResultDocument::from_result(&result)));
            eprintln!("error: work budget exhausted; the printed set is the best found, not a minimum");
            Ok(failure::BUDGET)
        }
    }
}
