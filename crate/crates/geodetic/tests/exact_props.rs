//! Exact solvers against a plain subset-enumeration oracle.

mod common;

use common::{connected_graph, floyd, geodetic_number_oracle, is_geodetic_oracle};
use geodetic::exact::{certify, min_geodetic_blocks, min_geodetic_bruteforce};
use geodetic::graph::simplicial_vertices;
use geodetic::SolveBudget;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn brute_force_matches_oracle(g in connected_graph(1, 10)) {
        let r = min_geodetic_bruteforce(&g, SolveBudget::unlimited()).unwrap();
        prop_assert!(r.optimal);
        prop_assert_eq!(r.size, geodetic_number_oracle(&g));
        prop_assert!(is_geodetic_oracle(&floyd(&g), &r.set.to_vec()));
    }

    #[test]
    fn blocks_match_brute_force(g in connected_graph(1, 11)) {
        let b = min_geodetic_blocks(&g, SolveBudget::unlimited()).unwrap();
        let f = min_geodetic_bruteforce(&g, SolveBudget::unlimited()).unwrap();
        prop_assert_eq!(b.size, f.size);
        prop_assert!(is_geodetic_oracle(&floyd(&g), &b.set.to_vec()));
    }

    #[test]
    fn optimal_sets_contain_every_simplicial_vertex(g in connected_graph(2, 10)) {
        let r = min_geodetic_bruteforce(&g, SolveBudget::unlimited()).unwrap();
        prop_assert!(simplicial_vertices(&g).is_subset(&r.set));
    }

    #[test]
    fn certify_confirms_optimal_sets(g in connected_graph(2, 9)) {
        let r = min_geodetic_bruteforce(&g, SolveBudget::unlimited()).unwrap();
        let report = certify(&g, &r.set, true, SolveBudget::unlimited());
        prop_assert!(report.geodetic);
        prop_assert_eq!(report.optimal, Some(true));
        let all = geodetic::VertexSet::full(g.n());
        let report = certify(&g, &all, true, SolveBudget::unlimited());
        prop_assert!(report.geodetic);
        prop_assert_eq!(report.optimal, Some(r.size == g.n()));
    }
}
