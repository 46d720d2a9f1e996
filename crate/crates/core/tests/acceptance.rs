//! Exit criteria for the library. Each test writes one PASS/FAIL line to
//! stderr, uncaptured, so `cargo test --test acceptance` shows the summary.

mod common;

use std::io::Write;
use std::time::{Duration, Instant};

use gcat::bench::{bench, cost_spread, to_csv, BenchProfile};
use gcat::oracle::oracle_count;
use gcat::{
    enumerate_mis, oracle_enumerate, recognize, Caterpillar, EnumerateOptions, HairCode, LevelGraph, LongHair, MISet,
    PathCursor, Stage, VertexLabel,
};
use num_bigint::BigUint;

const VALID_PAIRS: [(u8, u8); 9] = [(1, 2), (1, 3), (2, 1), (2, 2), (2, 4), (3, 1), (3, 2), (3, 4), (4, 1)];

fn report(criterion: u32, name: &str, pass: bool, detail: &str) {
    let status = if pass { "PASS" } else { "FAIL" };
    let _ = writeln!(std::io::stderr(), "[{status}] criterion {criterion}: {name} ({detail})");
}

fn label(s: &str) -> VertexLabel {
    VertexLabel::new(s).unwrap()
}

/// Figure-2 instance T = [3, 1, 2, 0] with single-letter hair names.
fn figure_two() -> Caterpillar {
    let long = |i: u32| Some(LongHair { inner: label(&format!("l{i}")), outer: label(&format!("m{i}")) });
    Caterpillar::new(vec![
        Stage { spine: label("v1"), pendants: vec![label("h1")], long_hair: long(1) },
        Stage { spine: label("v2"), pendants: vec![label("h2")], long_hair: None },
        Stage { spine: label("v3"), pendants: vec![], long_hair: long(3) },
        Stage::bare(label("v4")),
    ])
    .unwrap()
}

/// 500 instances, k in [1, 8], at most 20 vertices.
fn oracle_matrix() -> Vec<common::Drawn> {
    common::instance_matrix(0x5eed_0002, 500, 8, 20)
}

#[test]
fn c1_figure_two_golden() {
    let cat = figure_two();
    let start = Instant::now();
    let graph = LevelGraph::build(&cat);
    let rosters: Vec<Vec<String>> =
        (1..=4).map(|lvl| graph.level(lvl).map(|v| graph.vertex(v).to_string()).collect()).collect();
    let mut cited = Vec::new();
    let mut cursor = PathCursor::new(&graph);
    let mut sets = enumerate_mis(&graph, &cat, EnumerateOptions::default()).unwrap();
    while let Some(path) = cursor.next_path() {
        let route: Vec<String> = path.iter().map(|&v| graph.vertex(v).to_string()).collect();
        let mis = sets.next().unwrap();
        let route = route.join("-");
        if route == "p1-s2-u3-p4" || route == "r1-s2-p3-t4" {
            cited.push((route, mis));
        }
    }
    let elapsed = start.elapsed();

    let expected_rosters = [vec!["p1", "q1", "r1"], vec!["p2", "s2"], vec!["p3", "s3", "t3", "u3"], vec!["p4", "t4"]];
    let rosters_ok = rosters.iter().zip(&expected_rosters).all(|(got, want)| got == want) && graph.len() == 11;
    let expected_cited = vec![
        ("p1-s2-u3-p4".to_string(), MISet::parse("v1 m1 h2 m3 v4").unwrap()),
        ("r1-s2-p3-t4".to_string(), MISet::parse("h1 m1 h2 v3 m3").unwrap()),
    ];
    let paths_ok = cited == expected_cited;
    let fast = elapsed < Duration::from_millis(1);
    let pass = rosters_ok && paths_ok && fast;
    report(1, "figure-2 roster and cited paths", pass, &format!("{rosters:?}, {elapsed:?}"));
    assert!(rosters_ok, "rosters {rosters:?}");
    assert!(paths_ok, "cited paths {cited:?}");
    assert!(fast, "took {elapsed:?}");
}

#[test]
fn c2_oracle_equivalence() {
    let start = Instant::now();
    let matrix = oracle_matrix();
    let mut mismatches = Vec::new();
    for d in &matrix {
        let expected = oracle_enumerate(&d.instance.to_tree()).unwrap();
        let found = common::family(&d.instance);
        let count = LevelGraph::build(&d.instance).count_paths();
        if found != expected || count != BigUint::from(expected.len()) {
            mismatches.push((d.k, d.max_ones, d.p_two, d.seed));
        }
    }
    let elapsed = start.elapsed();
    let pass = mismatches.is_empty() && elapsed < Duration::from_secs(60);
    report(
        2,
        "oracle equivalence on 500 random instances",
        pass,
        &format!("{} mismatches, {elapsed:?}", mismatches.len()),
    );
    assert!(mismatches.is_empty(), "mismatching (k, max_ones, p_two, seed): {mismatches:?}");
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
}

#[test]
fn c3_pair_structure() {
    let mut violations = 0usize;
    let mut paths = 0usize;
    for d in &oracle_matrix() {
        let graph = LevelGraph::build(&d.instance);
        for path in PathCursor::new(&graph) {
            paths += 1;
            let types: Vec<u8> = path.iter().map(|v| v.stage_type()).collect();
            if types[0] == 3 || types[types.len() - 1] == 4 {
                violations += 1;
            }
            for pair in types.windows(2) {
                if !VALID_PAIRS.contains(&(pair[0], pair[1])) || (pair[0], pair[1]) == (1, 1) {
                    violations += 1;
                }
            }
        }
    }
    report(3, "consecutive type pairs on every path", violations == 0, &format!("{paths} paths, {violations} violations"));
    assert_eq!(violations, 0);
}

#[test]
fn c4_exhaustive_boundary_sweep() {
    let start = Instant::now();
    let mut instances = 0usize;
    let mut violations = Vec::new();
    for k in 1..=6usize {
        for n in 0..4usize.pow(k as u32) {
            let codes: Vec<HairCode> = (0..k).map(|i| HairCode::from_u8((n >> (2 * i) & 3) as u8).unwrap()).collect();
            instances += 1;
            let graph = LevelGraph::from_codes(&codes);
            let per_level_ok = (1..=k).all(|lvl| graph.level(lvl).len() <= 5);
            let edges_ok = graph.edges().all(|(a, b)| b.level == a.level + 1);
            let tree = Caterpillar::from_codes(&codes).unwrap().to_tree();
            let counts_ok = graph.count_paths() == BigUint::from(oracle_count(&tree).unwrap());
            if !(per_level_ok && edges_ok && counts_ok) {
                violations.push(codes);
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = instances == 5460 && violations.is_empty() && elapsed < Duration::from_secs(300);
    report(
        4,
        "all T-arrays with k <= 6",
        pass,
        &format!("{instances} instances, {} violations, {elapsed:?}", violations.len()),
    );
    assert_eq!(instances, 5460);
    assert!(violations.is_empty(), "{violations:?}");
    assert!(elapsed < Duration::from_secs(300), "took {elapsed:?}");
}

#[test]
fn c5_output_linearity() {
    let start = Instant::now();
    let rows = bench(BenchProfile::TwoHairs, 10..=22);
    let elapsed = start.elapsed();
    let spread = cost_spread(&rows);
    let pass = spread < 3.0 && elapsed < Duration::from_secs(120);
    report(5, "normalized cost spread over k = 10..22", pass, &format!("spread {spread:.3}, {elapsed:?}"));
    let _ = write!(std::io::stderr(), "{}", to_csv(&rows));
    assert!(spread < 3.0, "total_ns / (k * mis_count) varies by {spread:.3}x\n{}", to_csv(&rows));
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
}

#[test]
fn c6_normalization_invariance() {
    // k <= 5 keeps the unnormalized trees within the oracle's reach.
    let matrix = common::instance_matrix(0x5eed_0006, 100, 5, 26);
    let mut mismatches = Vec::new();
    for d in &matrix {
        let (norm, _) = d.instance.normalize();
        let raw = oracle_count(&d.instance.to_tree()).unwrap();
        let reduced = LevelGraph::build(&norm).count_paths();
        let reduced_oracle = oracle_count(&norm.to_tree()).unwrap();
        if BigUint::from(raw) != reduced || raw != reduced_oracle {
            mismatches.push(d.seed);
        }
    }
    report(6, "m(instance) = m(normalized)", mismatches.is_empty(), &format!("100 instances, {} mismatches", mismatches.len()));
    assert!(mismatches.is_empty(), "{mismatches:?}");
}

#[test]
fn c7_decomposition_independence() {
    let matrix = common::instance_matrix(0x5eed_0007, 100, 12, usize::MAX);
    let mut mismatches = Vec::new();
    for d in &matrix {
        let recognized = recognize(&d.instance.to_tree()).unwrap();
        if common::family(&recognized) != common::family(&d.instance) {
            mismatches.push(d.seed);
        }
    }
    report(7, "recognized decomposition yields the same family", mismatches.is_empty(), &format!("100 instances, {} mismatches", mismatches.len()));
    assert!(mismatches.is_empty(), "{mismatches:?}");
}
