#![allow(dead_code)]

use gcat::{enumerate_mis, gen_random, Caterpillar, EnumerateOptions, LevelGraph, MISet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Parameters and seed of one generated instance.
#[derive(Debug, Clone)]
pub struct Drawn {
    pub k: usize,
    pub max_ones: usize,
    pub p_two: f64,
    pub seed: u64,
    pub instance: Caterpillar,
}

/// `count` instances with k in `k_range`, max_ones in 0..=3 and p_two in
/// {0, 0.5, 1}, rejecting those with more than `max_vertices` vertices.
pub fn instance_matrix(meta_seed: u64, count: usize, k_max: usize, max_vertices: usize) -> Vec<Drawn> {
    let mut meta = ChaCha8Rng::seed_from_u64(meta_seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let k = meta.gen_range(1..=k_max);
        let max_ones = meta.gen_range(0..=3usize);
        let p_two = [0.0, 0.5, 1.0][meta.gen_range(0..3usize)];
        let seed: u64 = meta.gen();
        let instance = gen_random(k, max_ones, p_two, seed).unwrap();
        if instance.vertex_count() <= max_vertices {
            out.push(Drawn { k, max_ones, p_two, seed, instance });
        }
    }
    out
}

/// Expanded family of `cat`, sorted.
pub fn family(cat: &Caterpillar) -> Vec<MISet> {
    let graph = LevelGraph::build(cat);
    let mut sets: Vec<MISet> = enumerate_mis(&graph, cat, EnumerateOptions { expand: true, limit: None })
        .unwrap()
        .collect();
    sets.sort();
    sets
}
