//! `check`: verdicts about a given vertex set.

use std::path::PathBuf;

use anyhow::Result;
use clap::Args;
use geodetic::exact::{certify, CertifyReport};
use geodetic::io::to_json;
use geodetic::metric::{is_edge_geodetic, is_geodetic};
use geodetic::{VertexId, VertexSet};
use serde::Serialize;

use crate::failure::{read_instance, Failure};
use crate::BudgetArgs;

#[derive(Args, Debug)]
pub struct CheckArgs {
    /// Instance file.
    input: PathBuf,
    /// Comma-separated vertex ids.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    set: Vec<VertexId>,
    /// Also check that every edge lies on a shortest path between members.
    #[arg(long)]
    edge_geodetic: bool,
    /// Also search for a smaller geodetic set.
    #[arg(long)]
    certify: bool,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Serialize)]
struct CheckDocument {
    vertices: Vec<VertexId>,
    geodetic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    edge_geodetic: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certify: Option<CertifyReport>,
}

pub fn run(args: &CheckArgs) -> Result<u8> {
    let inst = read_instance(&args.input)?;
    let g = &inst.graph;
    if let Some(&bad) = args.set.iter().find(|&&v| v >= g.n()) {
        return Err(Failure::parse(format!("vertex id {bad} out of range for {} vertices", g.n())));
    }
    let s = VertexSet::from_ids(g.n(), args.set.iter().copied());
    let geodetic = is_geodetic(g, &s).map_err(|e| Failure::precondition(e.to_string()))?;
    let edge_geodetic = args
        .edge_geodetic
        .then(|| is_edge_geodetic(g, &s))
        .transpose()
        .map_err(|e| Failure::precondition(e.to_string()))?;
    let certify = args.certify.then(|| certify(g, &s, true, args.budget.budget()));
    let doc = CheckDocument {
        vertices: s.to_vec(),
        geodetic,
        edge_geodetic,
        certify,
    };
    print!("{}", to_json(&doc));
    Ok(0)
}
