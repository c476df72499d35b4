//! `generate`: reduction instances and seeded random corpora.

use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use clap::{Args, Subcommand, ValueEnum};
use geodetic::generate::{random_chordal, random_interval, random_solid_grid};
use geodetic::io::{emit_embedded_graph, emit_graph, emit_intervals, parse_dimacs, to_json, LabelSidecar, SatSidecar};
use geodetic::reductions::sat::sat_to_intervals;
use geodetic::reductions::vc::{vc_to_partial_grid, RotationSystem};

use crate::failure::{read_instance, Failure};

#[derive(Args, Debug)]
pub struct GenerateArgs {
    #[command(subcommand)]
    kind: Kind,
    /// Write the instance here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Where to write the metadata sidecar (defaults to `<out>.json` when
    /// `--out` is given; omitted otherwise).
    #[arg(long, global = true)]
    sidecar: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    K4,
    Prism,
    Cube,
}

#[derive(Subcommand, Debug)]
enum Kind {
    /// 3-SAT (DIMACS, three literals per clause) to an interval model.
    Sat2interval {
        /// DIMACS CNF file.
        #[arg(long)]
        input: PathBuf,
    },
    /// Cubic planar graph to the partial-grid precursor graph.
    Vc2grid {
        /// Built-in planar cubic graph.
        #[arg(long, value_enum, conflicts_with = "input")]
        preset: Option<Preset>,
        /// Graph file with `v` lines giving a planar straight-line drawing.
        #[arg(long, required_unless_present = "preset")]
        input: Option<PathBuf>,
    },
    /// Random connected chordal graph with a given clique number.
    RandomChordal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        omega: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Random connected interval model with integer endpoints.
    RandomInterval {
        #[arg(long)]
        n: usize,
        /// Endpoints are drawn from `[0, range]` (default `2n`).
        #[arg(long)]
        range: Option<i64>,
        #[arg(long)]
        seed: u64,
    },
    /// Random solid polyomino with its grid embedding.
    RandomSolidGrid {
        #[arg(long, default_value_t = 22)]
        max_vertices: usize,
        #[arg(long)]
        seed: u64,
    },
}

fn write(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

pub fn run(args: &GenerateArgs) -> Result<u8> {
    let bad = |e: &dyn std::fmt::Display| Failure::parse(e.to_string());
    let (instance, sidecar): (String, Option<String>) = match &args.kind {
        Kind::Sat2interval { input } => {
            let text = std::fs::read_to_string(input).map_err(|e| Failure::parse(format!("{}: {e}", input.display())))?;
            let formula = parse_dimacs(&text).map_err(|e| Failure::parse(format!("{}: {e}", input.display())))?;
            let inst = sat_to_intervals(&formula).map_err(|e| bad(&e))?;
            let header = format!(
                "c 3-SAT reduction: {} variables, {} clauses, witness bound {}\n",
                inst.n(),
                inst.m(),
                inst.expected_bound()
            );
            let body = emit_intervals(&inst.closed_intervals());
            (header + &body, Some(to_json(&SatSidecar::from_instance(&inst))))
        }
        Kind::Vc2grid { preset, input } => {
            let rs = match (preset, input) {
                (Some(Preset::K4), _) => RotationSystem::k4(),
                (Some(Preset::Prism), _) => RotationSystem::prism(),
                (Some(Preset::Cube), _) => RotationSystem::cube(),
                (None, Some(path)) => {
                    let inst = read_instance(path)?;
                    let emb = inst
                        .embedding
                        .ok_or_else(|| Failure::parse(format!("{}: `v` coordinate lines are required", path.display())))?;
                    let coords: Vec<(f64, f64)> = emb.coords.iter().map(|&(x, y)| (x as f64, y as f64)).collect();
                    RotationSystem::from_coordinates(inst.graph, &coords).map_err(|e| bad(&e))?
                }
                (None, None) => unreachable!("clap requires --preset or --input"),
            };
            let pre = vc_to_partial_grid(&rs);
            (emit_graph(&pre.graph), Some(to_json(&LabelSidecar::from_precursor(&pre))))
        }
        Kind::RandomChordal { n, omega, seed } => {
            let g = random_chordal(*n, *omega, *seed).map_err(|e| bad(&e))?;
            (emit_graph(&g), None)
        }
        Kind::RandomInterval { n, range, seed } => {
            let rep = random_interval(*n, range.unwrap_or(2 * *n as i64), *seed).map_err(|e| bad(&e))?;
            (emit_intervals(&rep), None)
        }
        Kind::RandomSolidGrid { max_vertices, seed } => {
            let (g, emb) = random_solid_grid(*max_vertices, *seed).map_err(|e| bad(&e))?;
            (emit_embedded_graph(&g, &emb), None)
        }
    };
    write(args.out.as_deref(), &instance)?;
    let sidecar_path = args.sidecar.clone().or_else(|| {
        args.out.as_ref().map(|p| {
            let mut s = p.clone().into_os_string();
            s.push(".json");
            PathBuf::from(s)
        })
    });
    match (sidecar, sidecar_path) {
        (Some(text), Some(path)) => write(Some(&path), &text)?,
        (Some(_), None) => eprintln!("note: metadata sidecar not written (pass --out or --sidecar)"),
        (None, _) => {}
    }
    Ok(0)
}
