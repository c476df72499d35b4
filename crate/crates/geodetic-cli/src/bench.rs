//! `bench`: every method on every corpus instance, with a cross-method size
//! agreement check.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Duration;

use anyhow::Result;
use clap::{Args, ValueEnum};
use geodetic::io::Instance;
use rayon::prelude::*;

use crate::failure::{read_instance, Failure};
use crate::solve::{solve_with, MethodArg, Outcome};
use crate::BudgetArgs;

#[derive(Args, Debug)]
pub struct BenchArgs {
    /// Directory of instance files (`*.json` sidecars are skipped).
    corpus: PathBuf,
    /// Comma-separated methods to run on every instance.
    #[arg(long, value_enum, value_delimiter = ',', default_value = "brute")]
    methods: Vec<MethodArg>,
    /// Runs per instance and method; the fastest is reported.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    repetitions: u32,
    /// Largest clique size accepted by the dynamic programs.
    #[arg(long)]
    omega_cap: Option<usize>,
    #[command(flatten)]
    budget: BudgetArgs,
}

struct Row {
    method: MethodArg,
    status: &'static str,
    size: Option<usize>,
    optimal: bool,
    best: Duration,
    note: String,
}

fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let entries = std::fs::read_dir(dir).map_err(|e| Failure::parse(format!("{}: {e}", dir.display())))?;
    let mut files = Vec::new();
    for entry in entries {
        let path = entry.map_err(|e| Failure::parse(e.to_string()))?.path();
        if path.is_file() && path.extension().is_none_or(|x| x != "json") {
            files.push(path);
        }
    }
    files.sort();
    Ok(files)
}

fn run_one(inst: &Instance, args: &BenchArgs, method: MethodArg) -> Row {
    let mut best = Duration::MAX;
    let mut last = None;
    for _ in 0..args.repetitions {
        let outcome = solve_with(inst, method, args.budget.budget(), args.omega_cap);
        if let Outcome::Solved { result, .. } | Outcome::Exhausted(result) = &outcome {
            best = best.min(result.elapsed);
        }
        last = Some(outcome);
    }
    match last.expect("at least one repetition") {
        Outcome::Solved { result, .. } => Row {
            method,
            status: "ok",
            size: Some(result.size),
            optimal: result.optimal,
            best,
            note: String::new(),
        },
        Outcome::Exhausted(result) => Row {
            method,
            status: "budget",
            size: Some(result.size),
            optimal: false,
            best,
            note: String::new(),
        },
        Outcome::Inapplicable(why) => Row {
            method,
            status: "n/a",
            size: None,
            optimal: false,
            best: Duration::ZERO,
            note: why,
        },
    }
}

pub fn run(args: &BenchArgs) -> Result<u8> {
    let files = corpus_files(&args.corpus)?;
    let instances: Vec<(String, Instance)> = files
        .iter()
        .map(|p| {
            let name = p.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            read_instance(p).map(|inst| (name, inst))
        })
        .collect::<Result<_>>()?;
    let results: Vec<Vec<Row>> = instances
        .par_iter()
        .map(|(_, inst)| args.methods.iter().map(|&m| run_one(inst, args, m)).collect())
        .collect();

    let mut table = String::from("instance\tmethod\tstatus\tsize\toptimal\tms\tnote\n");
    let mut disagreements = Vec::new();
    for ((name, _), rows) in instances.iter().zip(&results) {
        for r in rows {
            let method = r.method.to_possible_value().map(|v| v.get_name().to_owned()).unwrap_or_default();
            let size = r.size.map_or("-".to_string(), |s| s.to_string());
            writeln!(
                table,
                "{name}\t{method}\t{}\t{size}\t{}\t{:.3}\t{}",
                r.status,
                r.optimal,
                r.best.as_secs_f64() * 1e3,
                r.note
            )
            .expect("writing to a String");
        }
        let mut exact = rows.iter().filter(|r| r.optimal).filter_map(|r| r.size);
        if let Some(first) = exact.next() {
            if exact.any(|s| s != first) {
                disagreements.push(name.clone());
            }
        }
    }
    print!("{table}");
    if disagreements.is_empty() {
        Ok(0)
    } else {
        eprintln!("error: methods disagree on {}", disagreements.join(", "));
        Ok(1)
    }
}
