//! Timing sweeps for the enumerator over uniform instance families.

use std::fmt::Write as _;
use std::hint::black_box;
use std::str::FromStr;
use std::time::Instant;

use crate::caterpillar::{Caterpillar, HairCode};
use crate::enumerate::{enumerate_mis, EnumerateOptions};
use crate::level_graph::LevelGraph;

pub const CSV_HEADER: &str = "k,mis_count,total_ns,ns_per_set";

/// Passes are repeated until this many sets have been enumerated in total.
const TARGET_SETS: u64 = 4_000_000;
const MAX_REPEATS: u64 = 1_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchProfile {
    /// Every stage carries only the length-2 hair.
    TwoHairs,
    /// A plain path.
    Bare,
}

impl BenchProfile {
    pub fn code(self) -> HairCode {
        match self {
            BenchProfile::TwoHairs => HairCode::Long,
            BenchProfile::Bare => HairCode::Bare,
        }
    }

    pub fn instance(self, k: usize) -> Caterpillar {
        Caterpillar::from_codes(&vec![self.code(); k]).expect("k >= 1")
    }
}

impl FromStr for BenchProfile {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "two-hairs" => Ok(BenchProfile::TwoHairs),
            "bare" => Ok(BenchProfile::Bare),
            other => Err(format!("unknown profile {other:?} (expected two-hairs or bare)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub k: usize,
    pub mis_count: u64,
    /// Best observed time for one full build-and-enumerate pass.
    pub total_ns: u128,
    pub ns_per_set: f64,
}

impl BenchRow {
    /// Time per set per backbone vertex.
    pub fn normalized_cost(&self) -> f64 {
        self.ns_per_set / self.k as f64
    }
}

/// One build-and-enumerate pass; every member id of every set is read.
fn run_once(cat: &Caterpillar) -> u64 {
    let graph = LevelGraph::build(cat);
    let mut stream = enumerate_mis(&graph, cat, EnumerateOptions::default()).expect("graph built from instance");
    let mut sets = 0u64;
    let mut checksum = 0u64;
    while let Some(ids) = stream.next_ids() {
        checksum = ids.iter().fold(checksum, |acc, &id| acc.wrapping_mul(31).wrapping_add(id as u64));
        sets += 1;
    }
    black_box(checksum);
    sets
}

/// Builds the level graph and enumerates every set of the `k`-stage instance,
/// keeping the fastest of one or more passes.
pub fn bench_row(profile: BenchProfile, k: usize) -> BenchRow {
    let cat = profile.instance(k);
    let mis_count: u64 = LevelGraph::build(&cat)
        .count_paths()
        .try_into()
        .expect("benchmark instances have fewer than 2^64 sets");
    let repeats = TARGET_SETS.div_ceil(mis_count).clamp(1, MAX_REPEATS);
    let mut best = u128::MAX;
    for _ in 0..repeats {
        let start = Instant::now();
        let n = run_once(&cat);
        best = best.min(start.elapsed().as_nanos());
        assert_eq!(n, mis_count, "enumerated sets disagree with the path count");
    }
    BenchRow { k, mis_count, total_ns: best, ns_per_set: best as f64 / mis_count as f64 }
}

pub fn bench(profile: BenchProfile, ks: impl IntoIterator<Item = usize>) -> Vec<BenchRow> {
    ks.into_iter().map(|k| bench_row(profile, k)).collect()
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = format!("{CSV_HEADER}\n");
    for r in rows {
        let _ = writeln!(out, "{},{},{},{:.3}", r.k, r.mis_count, r.total_ns, r.ns_per_set);
    }
    out
}

/// Largest over smallest normalized cost across `rows`.
pub fn cost_spread(rows: &[BenchRow]) -> f64 {
    let costs = rows.iter().map(BenchRow::normalized_cost);
    let max = costs.clone().fold(f64::MIN, f64::max);
    let min = costs.fold(f64::MAX, f64::min);
    max / min
}
