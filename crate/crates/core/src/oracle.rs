//! Brute-force maximal independent sets for small graphs.
//!
//! Every subset of the vertex set is tested directly against the definition.
//! This shares no code with the level-graph enumerator and serves as ground
//! truth in tests.

use rayon::prelude::*;
use thiserror::Error;

use crate::enumerate::MISet;
use crate::graph::Tree;

/// Largest vertex count the oracle accepts.
pub const MAX_ORACLE_VERTICES: usize = 30;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {0} vertices; the exhaustive oracle is limited to {MAX_ORACLE_VERTICES}")]
    TooLarge(usize),
}

/// A vertex subset as a bitmask over vertex ids (label order).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetMask(pub u32);

impl SubsetMask {
    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn ones(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(v)
        })
    }
}

fn neighbour_masks(tree: &Tree) -> Vec<u32> {
    (0..tree.len())
        .map(|v| tree.adjacent(v).iter().fold(0u32, |acc, &w| acc | 1 << w))
        .collect()
}

fn is_maximal_independent(mask: u32, neighbours: &[u32], full: u32) -> bool {
    let mut covered = 0u32;
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        covered |= neighbours[v];
    }
    covered & mask == 0 && (covered | mask) == full
}

/// Masks of all maximal independent sets, in increasing mask order.
pub fn oracle_masks(tree: &Tree) -> Result<Vec<SubsetMask>, OracleError> {
    let n = tree.len();
    if n > MAX_ORACLE_VERTICES {
        return Err(OracleError::TooLarge(n));
    }
    let neighbours = neighbour_masks(tree);
    let full: u32 = (1u32 << n) - 1;
    let total = 1u64 << n;
    const CHUNK: u64 = 1 << 16;
    let chunks = total.div_ceil(CHUNK);
    let masks = (0..chunks)
        .into_par_iter()
        .flat_map_iter(|c| {
            let neighbours = &neighbours;
            let lo = c * CHUNK;
            let hi = (lo + CHUNK).min(total);
            (lo..hi)
                .map(|m| m as u32)
                .filter(move |&m| is_maximal_independent(m, neighbours, full))
                .map(SubsetMask)
        })
        .collect();
    Ok(masks)
}

/// All maximal independent sets of `tree`, sorted.
pub fn oracle_enumerate(tree: &Tree) -> Result<Vec<MISet>, OracleError> {
    let mut family: Vec<MISet> = oracle_masks(tree)?
        .into_iter()
        .map(|mask| MISet::new(mask.ones().map(|v| tree.label(v).clone()).collect()))
        .collect();
    family.sort();
    Ok(family)
}

pub fn oracle_count(tree: &Tree) -> Result<usize, OracleError> {
    Ok(oracle_masks(tree)?.len())
}
