//! Acceptance run: one `PASS`/`FAIL` line per criterion, with the measured
//! quantities. Exits with status 1 when any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::{all_connected_graphs, floyd, geodetic_number_oracle, interval_by_enumeration, random_connected};
use geodetic::chordal::interval::ordered_maximal_cliques;
use geodetic::chordal::{dp_min_geodetic_chordal, dp_min_geodetic_chordal_with, dp_min_geodetic_interval, interval_family_a, DpConfig};
use geodetic::exact::{min_geodetic_blocks, min_geodetic_bruteforce};
use geodetic::generate::{random_chordal, random_interval, random_solid_grid};
use geodetic::graph::{build_graph, girth, has_induced_star, subdivide, Distance, Graph};
use geodetic::grid::{full_grid, solid_grid_lower_bound, solve_solid_grid};
use geodetic::metric::{close_set, covered_through_cutset, interval_between, is_edge_geodetic, is_geodetic};
use geodetic::reductions::intervals::intersection_graph;
use geodetic::reductions::sat::{sat_to_intervals, sat_witness_geodetic, CnfFormula, Name};
use geodetic::reductions::vc::{vc_to_partial_grid, RotationSystem};
use geodetic::{SolveBudget, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn brute(g: &Graph) -> usize {
    min_geodetic_bruteforce(g, SolveBudget::unlimited()).expect("unlimited budget").size
}

fn metric_oracle() -> Outcome {
    let mut graphs: Vec<Graph> = (1..=6).flat_map(all_connected_graphs).collect();
    let exhaustive = graphs.len();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for i in 0..1000 {
        let n = 7 + i % 2;
        let p = rng.gen_range(0.0..0.6);
        graphs.push(random_connected(&mut rng, n, p));
    }
    let bad = graphs.par_iter().find_any(|g| {
        let d = floyd(g);
        (0..g.n()).any(|u| {
            (0..g.n()).any(|v| interval_between(g, u, v).unwrap().to_vec() != interval_by_enumeration(g, &d, u, v).into_iter().collect::<Vec<_>>())
        })
    });
    ensure(bad.is_none(), || format!("mismatch on {:?}", bad.map(|g| g.edges())))?;
    Ok(format!("{exhaustive} exhaustive graphs (n ≤ 6) + 1000 random (n = 7, 8)"))
}

fn clique_cutset_law() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut pairs = 0;
    for _ in 0..300 {
        let k = rng.gen_range(1..=3);
        let l = rng.gen_range(1..=(10 - k) / 2);
        let r = rng.gen_range(1..=10 - k - l);
        let n = k + l + r;
        let mut edges = Vec::new();
        for a in 0..k {
            for b in a + 1..k {
                edges.push((a, b));
            }
        }
        let left: Vec<usize> = (k..k + l).collect();
        let right: Vec<usize> = (k + l..n).collect();
        for side in [&left, &right] {
            edges.push((side[0], rng.gen_range(0..k)));
            for i in 1..side.len() {
                edges.push((side[rng.gen_range(0..i)], side[i]));
            }
            for (i, &u) in side.iter().enumerate() {
                for &w in &side[i + 1..] {
                    if rng.gen_bool(0.3) {
                        edges.push((u, w));
                    }
                }
                for c in 0..k {
                    if rng.gen_bool(0.4) {
                        edges.push((u, c));
                    }
                }
            }
        }
        edges.sort_unstable();
        edges.dedup();
        let g = build_graph(n, &edges).unwrap();
        let x = VertexSet::from_ids(n, 0..k);
        for &u in &left {
            let a = close_set(&g, u, &x).unwrap().members;
            for &v in &right {
                let b = close_set(&g, v, &x).unwrap().members;
                let mut direct = interval_between(&g, u, v).unwrap();
                direct.intersect_with(&x);
                let law = covered_through_cutset(&a, &b, &x).unwrap();
                ensure(law == direct, || format!("edges {edges:?}, u={u}, v={v}"))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("300 graphs with a planted clique cutset, {pairs} separated pairs"))
}

fn blocks_vs_brute_force() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let graphs: Vec<Graph> = (0..200)
        .map(|_| {
            let n = rng.gen_range(1..=12);
            let p = rng.gen_range(0.0..0.4);
            random_connected(&mut rng, n, p)
        })
        .collect();
    let bad = graphs
        .par_iter()
        .find_any(|g| min_geodetic_blocks(g, SolveBudget::unlimited()).unwrap().size != brute(g));
    ensure(bad.is_none(), || format!("mismatch on {:?}", bad.map(|g| g.edges())))?;
    Ok("200 random connected graphs, n ≤ 12".into())
}

fn solid_grid() -> Outcome {
    let mut instances = Vec::new();
    for w in 1..=4 {
        for h in 1..=5 {
            instances.push((format!("{w}x{h} grid"), full_grid(w, h)));
        }
    }
    for seed in 0..100 {
        instances.push((format!("polyomino seed {seed}"), random_solid_grid(22, seed).unwrap()));
    }
    let failures: Vec<String> = instances
        .par_iter()
        .filter_map(|(name, (g, emb))| {
            let r = solve_solid_grid(g, emb).unwrap();
            let lb = solid_grid_lower_bound(g, emb).unwrap();
            let b = brute(g);
            (r.size != b || r.size != lb || !is_geodetic(g, &r.set).unwrap())
                .then(|| format!("{name}: algorithm {} brute {b} bound {lb}", r.size))
        })
        .collect();
    ensure(failures.is_empty(), || failures.join("; "))?;
    let g33 = solve_solid_grid(&full_grid(3, 3).0, &full_grid(3, 3).1).unwrap().size;
    let g15 = solve_solid_grid(&full_grid(1, 5).0, &full_grid(1, 5).1).unwrap().size;
    ensure(g33 == 2 && g15 == 2, || format!("g(3x3) = {g33}, g(1x5) = {g15}"))?;
    Ok("20 full grids up to 4x5 + 100 polyominoes ≤ 22 vertices; g(3x3) = g(1x5) = 2".into())
}

fn chordal_dp() -> Outcome {
    let mut graphs: Vec<(String, Graph)> = (0..50u64)
        .map(|seed| {
            let omega = 2 + (seed % 2) as usize;
            let n = 4 + (seed % 11) as usize;
            (format!("chordal seed {seed}"), random_chordal(n, omega, seed).unwrap())
        })
        .collect();
    graphs.push(("P3".into(), build_graph(3, &[(0, 1), (1, 2)]).unwrap()));
    let trees: Vec<Graph> = (100..120).map(|seed| random_chordal(13, 2, seed).unwrap()).collect();
    for g in &trees {
        let leaves = (0..g.n()).filter(|&v| g.degree(v) == 1).count();
        ensure(geodetic_number_oracle(g) == leaves, || format!("tree {:?}: subset enumeration disagrees with leaf count", g.edges()))?;
    }
    graphs.extend(trees.into_iter().map(|g| ("tree".to_string(), g)));
    let failures: Vec<String> = graphs
        .par_iter()
        .filter_map(|(name, g)| {
            let dp = dp_min_geodetic_chordal(g, SolveBudget::unlimited()).unwrap();
            let b = brute(g);
            (dp.size != b || !is_geodetic(g, &dp.set).unwrap()).then(|| format!("{name}: dp {} brute {b}", dp.size))
        })
        .collect();
    ensure(failures.is_empty(), || failures.join("; "))?;
    let k4 = build_graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    let cfg = DpConfig { omega_cap: 4, ..DpConfig::chordal() };
    let r = dp_min_geodetic_chordal_with(&k4, SolveBudget::unlimited(), &cfg).unwrap();
    ensure(r.size == 4, || format!("K4: dp {}", r.size))?;
    Ok("50 random chordal graphs (n ≤ 14, ω ≤ 3), P3, K4, 20 trees (= leaf count)".into())
}

fn interval_dp() -> Outcome {
    let mut corpus = Vec::new();
    let mut seed = 0;
    let mut skipped = 0;
    while corpus.len() < 50 {
        let n = 4 + (seed % 11) as usize;
        let rep = random_interval(n, 3 * n as i64, seed).unwrap();
        seed += 1;
        if ordered_maximal_cliques(&rep).iter().any(|c| c.len() > 8) {
            skipped += 1;
            continue;
        }
        corpus.push(rep);
    }
    let failures: Vec<String> = corpus
        .par_iter()
        .enumerate()
        .filter_map(|(i, rep)| {
            let g = intersection_graph(rep);
            let dp = dp_min_geodetic_interval(rep, SolveBudget::unlimited()).unwrap();
            let b = brute(&g);
            if dp.size != b {
                return Some(format!("model {i}: dp {} brute {b}", dp.size));
            }
            for clique in ordered_maximal_cliques(rep) {
                let x = VertexSet::from_ids(g.n(), clique.iter().copied());
                let family = interval_family_a(&x, rep).unwrap();
                for y in 0..g.n() {
                    let a = close_set(&g, y, &x).unwrap().members;
                    if !family.contains(&a) {
                        return Some(format!("model {i}: close set {:?} of {y} missing", a.to_vec()));
                    }
                }
            }
            None
        })
        .collect();
    ensure(failures.is_empty(), || failures.join("; "))?;
    Ok(format!("50 random interval models (n ≤ 14, ω ≤ 8; {skipped} wider draws skipped), family complete"))
}

fn acceptance_formulas() -> Vec<CnfFormula> {
    [
        (1, vec![[1, -1, 1]]),
        (2, vec![[1, 2, -1]]),
        (2, vec![[1, -2, 2], [-1, 2, -2]]),
        (3, vec![[1, 2, 3], [-1, -2, 3]]),
    ]
    .into_iter()
    .map(|(n, c)| CnfFormula::new(n, c).unwrap())
    .collect()
}

fn sat_structure() -> Outcome {
    let failures: Vec<String> = acceptance_formulas()
        .par_iter()
        .filter_map(|f| {
            let (n, m) = (f.n(), f.m());
            let tag = format!("(n={n}, m={m})");
            let inst = sat_to_intervals(f).unwrap();
            if inst.tracks.len() != 2 + 4 * n + 35 * m || inst.point_intervals().len() != 4 + 6 * n + 52 * m {
                return Some(format!("{tag}: {} tracks, {} points", inst.tracks.len(), inst.point_intervals().len()));
            }
            let g = inst.intersection_graph();
            if !g.is_connected() || has_induced_star(&g, 5) {
                return Some(format!("{tag}: disconnected or contains an induced K1,5"));
            }
            let o = inst.id(&Name::Origin).unwrap();
            for (t, track) in inst.tracks.iter().enumerate() {
                let vs = &track.intervals;
                let path = vs.iter().enumerate().all(|(i, &a)| {
                    vs.iter().enumerate().skip(i + 1).all(|(j, &b)| g.has_edge(a, b) == (j == i + 1))
                });
                if !path {
                    return Some(format!("{tag}: track {t} does not induce a path"));
                }
                let through = interval_between(&g, o, inst.tails[t]).unwrap();
                if !vs.iter().all(|&v| through.contains(v)) {
                    return Some(format!("{tag}: track {t} not between the origin and its tail"));
                }
            }
            for rec in &inst.implications {
                if !interval_between(&g, rec.p, rec.s).unwrap().contains(rec.q) {
                    return Some(format!("{tag}: implication {} -> {} not covered", rec.p, rec.q));
                }
            }
            None
        })
        .collect();
    ensure(failures.is_empty(), || failures.join("; "))?;
    Ok("(1,1), (2,1), (2,2), (3,2): counts, paths, connectivity, K1,5-free, track and implication coverage".into())
}

fn sat_witness() -> Outcome {
    let mut checked = 0;
    for f in acceptance_formulas() {
        let Some(a) = f.find_satisfying_assignment() else { continue };
        let inst = sat_to_intervals(&f).unwrap();
        let w = sat_witness_geodetic(&inst, &a).unwrap();
        let want = 4 + 7 * f.n() + 58 * f.m();
        ensure(w.len() == want, || format!("(n={}, m={}): size {} != {want}", f.n(), f.m(), w.len()))?;
        ensure(is_geodetic(&inst.intersection_graph(), &w).unwrap(), || format!("(n={}, m={}): not geodetic", f.n(), f.m()))?;
        checked += 1;
    }
    ensure(checked == 4, || format!("only {checked} formulas satisfiable"))?;
    Ok("4 satisfiable formulas, witness size 4+7n+58m and geodetic".into())
}

fn vc_reduction() -> Outcome {
    let f1 = vc_to_partial_grid(&RotationSystem::k4());
    let g = &f1.graph;
    let z = f1.z_vertices();
    let rest: Vec<usize> = (0..g.n()).filter(|v| !z.contains(v)).collect();
    let mut found = None;
    let mut candidates = 0u64;
    'sizes: for extra in 0..=3usize {
        let mut idx: Vec<usize> = (0..extra).collect();
        loop {
            candidates += 1;
            let s = VertexSet::from_ids(g.n(), z.iter().copied().chain(idx.iter().map(|&i| rest[i])));
            if is_geodetic(g, &s).unwrap() {
                found = Some(s.len());
                break 'sizes;
            }
            let mut i = extra;
            while i > 0 && idx[i - 1] == rest.len() - extra + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..extra {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    ensure(found == Some(15), || format!("g(f1(K4)) = {found:?}"))?;
    ensure(g.max_degree() <= 6, || format!("max degree {}", g.max_degree()))?;
    let gi = girth(g);
    ensure(gi == Distance::Finite(4), || format!("g(f1(K4)) = 15 and max degree {} hold, but girth is {gi:?}, not 4", g.max_degree()))?;
    Ok(format!("g(f1(K4)) = 15 over {candidates} supersets of the z-vertices, max degree {}, girth 4", g.max_degree()))
}

fn subdivision_keeps_sets_geodetic() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let graphs: Vec<Graph> = (0..100)
        .map(|_| {
            let n = rng.gen_range(2..=8);
            let p = rng.gen_range(0.0..0.5);
            random_connected(&mut rng, n, p)
        })
        .collect();
    let counts: Vec<Result<usize, String>> = graphs
        .par_iter()
        .map(|g| {
            let n = g.n();
            let subdivided = [subdivide(g, 2).unwrap(), subdivide(g, 3).unwrap()];
            let mut sets = 0;
            for mask in 1u32..1 << n {
                let s = VertexSet::from_ids(n, (0..n).filter(|&v| mask >> v & 1 == 1));
                if !(is_geodetic(g, &s).unwrap() && is_edge_geodetic(g, &s).unwrap()) {
                    continue;
                }
                sets += 1;
                for h in &subdivided {
                    let lifted = VertexSet::from_ids(h.n(), s.iter());
                    if !is_geodetic(h, &lifted).unwrap() {
                        return Err(format!("{:?} with {:?} fails after subdivision", g.edges(), s.to_vec()));
                    }
                }
            }
            Ok(sets)
        })
        .collect();
    let mut total = 0;
    for c in counts {
        total += c?;
    }
    Ok(format!("100 random graphs, {total} geodetic and edge-geodetic sets, k = 2, 3"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("interval_between equals shortest-path enumeration", metric_oracle),
        ("clique-cutset covering law", clique_cutset_law),
        ("block-by-block solver equals brute force", blocks_vs_brute_force),
        ("solid-grid algorithm equals brute force and lower bound", solid_grid),
        ("chordal DP equals brute force", chordal_dp),
        ("interval DP equals brute force; family complete", interval_dp),
        ("3-SAT reduction structure", sat_structure),
        ("3-SAT witness size and validity", sat_witness),
        ("vertex-cover reduction on K4", vc_reduction),
        ("subdivision preserves geodetic and edge-geodetic sets", subdivision_keeps_sets_geodetic),
    ];
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {title}: {detail} [{ms} ms]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {title}: {why} [{ms} ms]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
