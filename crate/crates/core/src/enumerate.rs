//! Streaming enumeration of maximal independent sets as source-sink paths
//! of the level graph.
//!
//! Paths are walked by an explicit-stack DFS that only ever steps onto live
//! vertices, so every push makes progress towards level k and each set costs
//! O(k) work. Nothing beyond the current path is kept in memory.

use std::fmt;

use thiserror::Error;

use crate::caterpillar::{Caterpillar, HairCode, Stage};
use crate::graph::{GraphError, Tree, VertexLabel};
use crate::level_graph::{LevelGraph, LevelVertex, VertexKind};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("level vertex {vertex} cannot occur at a stage with hair code {code}")]
    IllegalKindForProfile { vertex: LevelVertex, code: HairCode },
    #[error("level graph does not match the instance: {0}")]
    InstanceMismatch(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Position of a vertex within its stage.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    /// The backbone vertex `v_i`.
    Spine,
    /// A length-1 hair end `h_i`.
    Pendant,
    /// The middle vertex `l_i` of the length-2 hair.
    Inner,
    /// The end `m_i` of the length-2 hair.
    Outer,
}

/// Which stage vertices a level vertex of `kind` puts into the set at a
/// stage with hair code `code`.
pub fn stage_roles(kind: VertexKind, code: HairCode) -> Result<&'static [Role], (VertexKind, HairCode)> {
    use HairCode::*;
    use VertexKind::*;
    Ok(match (kind, code) {
        (P, Long | Both) => &[Role::Spine, Role::Outer],
        (P, Bare | Short) => &[Role::Spine],
        (T | U, Long) => &[Role::Outer],
        (T | U, Bare) => &[],
        (S, Short) => &[Role::Pendant],
        (S, Long) => &[Role::Inner],
        (Q, Both) => &[Role::Pendant, Role::Inner],
        (R, Both) => &[Role::Pendant, Role::Outer],
        _ => return Err((kind, code)),
    })
}

fn role_label(stage: &Stage, role: Role) -> &VertexLabel {
    match role {
        Role::Spine => &stage.spine,
        Role::Pendant => &stage.pendants[0],
        Role::Inner => &stage.long_hair.as_ref().expect("long hair present").inner,
        Role::Outer => &stage.long_hair.as_ref().expect("long hair present").outer,
    }
}

/// The part of a maximal independent set lying at one stage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StageSet {
    /// 1-based stage number.
    pub stage: usize,
    pub members: Vec<VertexLabel>,
}

/// Stage set selected by level vertex `w` at its stage, sorted. Length-1
/// hairs are represented by the stage's first pendant.
pub fn reconstruct_stage(w: LevelVertex, stage: &Stage) -> Result<StageSet, EnumerateError> {
    let code = stage.code();
    let roles = stage_roles(w.kind, code)
        .map_err(|_| EnumerateError::IllegalKindForProfile { vertex: w, code })?;
    let mut members: Vec<VertexLabel> = roles.iter().map(|&r| role_label(stage, r).clone()).collect();
    members.sort();
    Ok(StageSet { stage: w.level, members })
}

/// One maximal independent set, members sorted by label.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MISet {
    members: Vec<VertexLabel>,
}

impl MISet {
    pub fn new(mut members: Vec<VertexLabel>) -> Self {
        members.sort();
        members.dedup();
        MISet { members }
    }

    /// Parses a whitespace-separated label list.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let members = text.split_whitespace().map(VertexLabel::new).collect::<Result<_, _>>()?;
        Ok(MISet::new(members))
    }

    pub fn members(&self) -> &[VertexLabel] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, label: &str) -> bool {
        self.members.binary_search_by(|m| m.as_str().cmp(label)).is_ok()
    }
}

impl fmt::Display for MISet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(m.as_str())?;
        }
        Ok(())
    }
}

/// Whether `set` is independent and dominating in `tree`.
pub fn verify_mis(tree: &Tree, set: &MISet) -> Result<bool, GraphError> {
    let mut inside = vec![false; tree.len()];
    for m in set.members() {
        let id = tree.id_of(m.as_str()).ok_or_else(|| GraphError::UnknownVertex(m.to_string()))?;
        inside[id] = true;
    }
    for v in 0..tree.len() {
        let neighbour_inside = tree.adjacent(v).iter().any(|&w| inside[w]);
        if inside[v] && neighbour_inside {
            return Ok(false);
        }
        if !inside[v] && !neighbour_inside {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Explicit-stack DFS over the source-sink paths of a level graph.
///
/// Sources are tried in level order and successors in kind order
/// `p, s, q, r, t, u`, which fixes the output order.
pub struct PathCursor<'g> {
    graph: &'g LevelGraph,
    path: Vec<usize>,
    // Next successor position to try, one entry per path vertex.
    cursors: Vec<usize>,
    next_source: usize,
    at_sink: bool,
}

impl<'g> PathCursor<'g> {
    pub fn new(graph: &'g LevelGraph) -> Self {
        PathCursor {
            graph,
            path: Vec::with_capacity(graph.k()),
            cursors: Vec::with_capacity(graph.k()),
            next_source: 0,
            at_sink: false,
        }
    }

    fn push(&mut self, v: usize) {
        self.path.push(v);
        self.cursors.push(0);
    }

    /// Advances to the next path and returns its vertex ids, level 1 first.
    pub fn next_path(&mut self) -> Option<&[usize]> {
        self.advance().map(|(path, _)| path)
    }

    /// Like [`next_path`](Self::next_path), also returning how many leading
    /// vertices are shared with the previous path.
    pub fn advance(&mut self) -> Option<(&[usize], usize)> {
        let graph = self.graph;
        let k = graph.k();
        if self.at_sink {
            self.path.pop();
            self.cursors.pop();
            self.at_sink = false;
        }
        let mut shared = self.path.len();
        loop {
            match self.path.last() {
                None => {
                    let sources = graph.level(1);
                    let source = (sources.start + self.next_source..sources.end).find(|&s| graph.is_live(s))?;
                    self.next_source = source - sources.start + 1;
                    self.push(source);
                }
                Some(&top) => {
                    let cursor = self.cursors.last_mut().unwrap();
                    match graph.live_successors(top).get(*cursor) {
                        Some(&next) => {
                            *cursor += 1;
                            self.push(next);
                        }
                        None => {
                            self.path.pop();
                            self.cursors.pop();
                            shared = shared.min(self.path.len());
                            continue;
                        }
                    }
                }
            }
            if self.path.len() == k {
                self.at_sink = true;
                return Some((&self.path, shared));
            }
        }
    }

    pub fn graph(&self) -> &'g LevelGraph {
        self.graph
    }
}

impl Iterator for PathCursor<'_> {
    type Item = Vec<LevelVertex>;

    fn next(&mut self) -> Option<Self::Item> {
        let graph = self.graph;
        self.next_path().map(|p| p.iter().map(|&v| graph.vertex(v)).collect())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumerateOptions {
    /// Replace each stage's representative pendant by all of its pendants.
    pub expand: bool,
    /// Stop after this many sets.
    pub limit: Option<usize>,
}

/// Stream of maximal independent sets; see [`enumerate_mis`].
///
/// Members are tracked as ids into [`label_table`](Self::label_table), which
/// is sorted, and rebuilt only from the first level where consecutive paths
/// differ.
pub struct MisStream<'g> {
    paths: PathCursor<'g>,
    labels: Vec<VertexLabel>,
    contribution: Vec<Vec<u32>>,
    remaining: Option<usize>,
    // marks[i] is the member count after the first i + 1 path vertices.
    marks: Vec<usize>,
    members: Vec<u32>,
}

impl MisStream<'_> {
    /// Labels that can occur in an emitted set, in sorted order.
    pub fn label_table(&self) -> &[VertexLabel] {
        &self.labels
    }

    /// Next set as unsorted ids into [`label_table`](Self::label_table).
    pub fn next_ids(&mut self) -> Option<&[u32]> {
        if self.remaining == Some(0) {
            return None;
        }
        let (path, shared) = self.paths.advance()?;
        if let Some(r) = &mut self.remaining {
            *r -= 1;
        }
        self.marks.truncate(shared);
        self.members.truncate(self.marks.last().copied().unwrap_or(0));
        for &v in &path[shared..] {
            self.members.extend_from_slice(&self.contribution[v]);
            self.marks.push(self.members.len());
        }
        Some(&self.members)
    }
}

impl Iterator for MisStream<'_> {
    type Item = MISet;

    fn next(&mut self) -> Option<MISet> {
        let mut ids = self.next_ids()?.to_vec();
        ids.sort_unstable();
        Some(MISet { members: ids.into_iter().map(|i| self.labels[i as usize].clone()).collect() })
    }
}

/// Streams every maximal independent set of `instance`, one per source-sink
/// path of `graph`.
///
/// `instance` may carry several length-1 hairs per stage; the graph only
/// depends on hair codes, so it is the graph of the normalized instance.
/// Without `expand`, stages with length-1 hairs report only the least pendant.
pub fn enumerate_mis<'g>(
    graph: &'g LevelGraph,
    instance: &Caterpillar,
    options: EnumerateOptions,
) -> Result<MisStream<'g>, EnumerateError> {
    if graph.codes() != instance.codes().as_slice() {
        return Err(EnumerateError::InstanceMismatch(format!(
            "graph has {} levels, instance has {} stages with different hair codes",
            graph.k(),
            instance.k()
        )));
    }
    let mut contribution: Vec<Vec<&VertexLabel>> = vec![Vec::new(); graph.len()];
    for (id, slot) in contribution.iter_mut().enumerate() {
        if !graph.is_live(id) {
            continue;
        }
        let w = graph.vertex(id);
        let stage = instance.stage(w.level - 1);
        let code = stage.code();
        let roles = stage_roles(w.kind, code)
            .map_err(|_| EnumerateError::IllegalKindForProfile { vertex: w, code })?;
        for &role in roles {
            if role == Role::Pendant && options.expand {
                slot.extend(&stage.pendants);
            } else {
                slot.push(role_label(stage, role));
            }
        }
    }
    let mut labels: Vec<VertexLabel> = contribution.iter().flatten().map(|&l| l.clone()).collect();
    labels.sort();
    labels.dedup();
    let contribution = contribution
        .iter()
        .map(|slot| slot.iter().map(|l| labels.binary_search(l).unwrap() as u32).collect())
        .collect();
    Ok(MisStream {
        paths: PathCursor::new(graph),
        labels,
        contribution,
        remaining: options.limit,
        marks: Vec::with_capacity(graph.k()),
        members: Vec::with_capacity(4 * graph.k()),
    })
}
