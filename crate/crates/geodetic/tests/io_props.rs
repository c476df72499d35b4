//! Round trips of the text and JSON formats.

mod common;

use common::connected_graph;
use geodetic::generate::{random_interval, random_solid_grid};
use geodetic::io::{
    emit_dimacs, emit_embedded_graph, emit_graph, emit_intervals, from_json, parse_dimacs, parse_graph, parse_instance,
    to_json, ResultDocument, SatSidecar,
};
use geodetic::reductions::sat::{sat_to_intervals, CnfFormula};
use geodetic::reductions::intervals::intersection_graph;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graphs_round_trip(g in connected_graph(1, 15)) {
        prop_assert_eq!(parse_graph(&emit_graph(&g)).unwrap(), g);
    }

    #[test]
    fn embedded_grids_round_trip(seed in any::<u64>()) {
        let (g, emb) = random_solid_grid(20, seed).unwrap();
        let inst = parse_instance(&emit_embedded_graph(&g, &emb)).unwrap();
        prop_assert_eq!(inst.graph, g);
        prop_assert_eq!(inst.embedding, Some(emb));
    }

    #[test]
    fn interval_models_round_trip(n in 1usize..=12, seed in any::<u64>()) {
        let rep = random_interval(n, 20, seed).unwrap();
        let inst = parse_instance(&emit_intervals(&rep)).unwrap();
        prop_assert_eq!(inst.graph, intersection_graph(&rep));
        prop_assert_eq!(inst.intervals, Some(rep));
    }

    #[test]
    fn formulas_round_trip(n in 1usize..=5, raw in proptest::collection::vec((1i32..=5, any::<bool>()), 3..=15)) {
        let lits: Vec<i32> = raw.iter().map(|&(v, neg)| {
            let v = (v - 1) % n as i32 + 1;
            if neg { -v } else { v }
        }).collect();
        let clauses: Vec<[i32; 3]> = lits.chunks_exact(3).map(|c| [c[0], c[1], c[2]]).collect();
        let f = CnfFormula::new(n, clauses).unwrap();
        prop_assert_eq!(parse_dimacs(&emit_dimacs(&f)).unwrap(), f);
    }

    #[test]
    fn result_documents_round_trip(size in 0usize..50, optimal in any::<bool>(), lb in proptest::option::of(0usize..50)) {
        let doc = ResultDocument {
            method: "brute".into(),
            size,
            vertices: (0..size).collect(),
            optimal,
            lower_bound: lb,
            elapsed_ms: 1.25,
            instance_stats: None,
        };
        prop_assert_eq!(from_json::<ResultDocument>(&to_json(&doc)).unwrap(), doc);
    }
}

#[test]
fn sat_sidecar_round_trips() {
    let f = CnfFormula::new(2, vec![[1, -2, 2]]).unwrap();
    let side = SatSidecar::from_instance(&sat_to_intervals(&f).unwrap());
    assert_eq!(from_json::<SatSidecar>(&to_json(&side)).unwrap(), side);
}
