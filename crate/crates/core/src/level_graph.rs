//! The k-level DAG whose level-1 to level-k paths are in bijection with the
//! maximal independent sets of a generalised caterpillar.
//!
//! Level `i` holds one vertex per admissible shape of the stage-`i` part of
//! a maximal independent set. Each vertex carries a *type* describing the
//! status of the backbone vertex `v_i`:
//!
//! 1. `v_i` is in the set;
//! 2. `v_i` is out, but one of its hair neighbours is in;
//! 3. `v_i` is dominated only by `v_{i-1}`;
//! 4. `v_i` is dominated only by `v_{i+1}`, and `v_{i-1}` is out.
//!
//! Edges join consecutive levels exactly when the two types may follow each
//! other in a maximal independent set.

use std::fmt;
use std::fmt::Write as _;

use num_bigint::BigUint;

use crate::caterpillar::{Caterpillar, HairCode};

/// The six vertex shapes, declared in successor visiting order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexKind {
    /// `v_i` in the set.
    P,
    /// Lone hair neighbour of `v_i` in the set (`h_i` or `l_i`).
    S,
    /// `h_i` and `l_i` in the set.
    Q,
    /// `h_i` and `m_i` in the set.
    R,
    /// Dominated from the left.
    T,
    /// Dominated from the right.
    U,
}

impl VertexKind {
    pub const ALL: [VertexKind; 6] =
        [VertexKind::P, VertexKind::S, VertexKind::Q, VertexKind::R, VertexKind::T, VertexKind::U];

    pub fn stage_type(self) -> u8 {
        match self {
            VertexKind::P => 1,
            VertexKind::S | VertexKind::Q | VertexKind::R => 2,
            VertexKind::T => 3,
            VertexKind::U => 4,
        }
    }

    /// Distinguishes the two type-2 shapes of a stage carrying both hair kinds.
    pub fn index(self) -> u8 {
        match self {
            VertexKind::R => 2,
            _ => 1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            VertexKind::P => 'p',
            VertexKind::S => 's',
            VertexKind::Q => 'q',
            VertexKind::R => 'r',
            VertexKind::T => 't',
            VertexKind::U => 'u',
        }
    }
}

/// Kinds present at `level` (1-based) of a `k`-level graph for hair code `code`.
pub fn kinds_at(code: HairCode, level: usize, k: usize) -> Vec<VertexKind> {
    let mut kinds = vec![VertexKind::P];
    let dominated_by_neighbours = |kinds: &mut Vec<VertexKind>| {
        // No left neighbour at level 1, no right neighbour at level k.
        if level >= 2 {
            kinds.push(VertexKind::T);
        }
        if level < k {
            kinds.push(VertexKind::U);
        }
    };
    match code {
        HairCode::Bare => dominated_by_neighbours(&mut kinds),
        HairCode::Short => kinds.push(VertexKind::S),
        HairCode::Long => {
            kinds.push(VertexKind::S);
            dominated_by_neighbours(&mut kinds);
        }
        HairCode::Both => kinds.extend([VertexKind::Q, VertexKind::R]),
    }
    kinds
}

/// Whether a stage of type `from` may be followed by a stage of type `to`.
pub fn allows_edge(from: u8, to: u8) -> bool {
    match from {
        1 => to == 2 || to == 3,
        2 | 3 => matches!(to, 1 | 2 | 4),
        4 => to == 1,
        _ => false,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LevelVertex {
    /// 1-based level, equal to the stage number.
    pub level: usize,
    pub kind: VertexKind,
}

impl LevelVertex {
    pub fn stage_type(&self) -> u8 {
        self.kind.stage_type()
    }

    pub fn index(&self) -> u8 {
        self.kind.index()
    }
}

impl fmt::Display for LevelVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.symbol(), self.level)
    }
}

/// Level graph with forward edges only and per-vertex liveness.
///
/// A vertex is live when it is reachable from some level-1 vertex and can
/// reach some level-k vertex. Only live vertices lie on source-sink paths.
#[derive(Debug, Clone)]
pub struct LevelGraph {
    codes: Vec<HairCode>,
    vertices: Vec<LevelVertex>,
    level_start: Vec<usize>,
    successors: Vec<Vec<usize>>,
    predecessors: Vec<Vec<usize>>,
    reaches_sink: Vec<bool>,
    from_source: Vec<bool>,
    live_successors: Vec<Vec<usize>>,
}

impl LevelGraph {
    pub fn build(cat: &Caterpillar) -> Self {
        Self::from_codes(&cat.codes())
    }

    /// Builds the graph for hair codes `T[1..=k]`; panics if `codes` is empty.
    pub fn from_codes(codes: &[HairCode]) -> Self {
        assert!(!codes.is_empty(), "a level graph needs at least one level");
        let k = codes.len();
        let mut vertices = Vec::new();
        let mut level_start = Vec::with_capacity(k + 1);
        for (i, &code) in codes.iter().enumerate() {
            level_start.push(vertices.len());
            let level = i + 1;
            vertices.extend(kinds_at(code, level, k).into_iter().map(|kind| LevelVertex { level, kind }));
        }
        level_start.push(vertices.len());

        let n = vertices.len();
        let mut successors = vec![Vec::new(); n];
        let mut predecessors = vec![Vec::new(); n];
        for i in 0..k.saturating_sub(1) {
            for a in level_start[i]..level_start[i + 1] {
                for b in level_start[i + 1]..level_start[i + 2] {
                    if allows_edge(vertices[a].stage_type(), vertices[b].stage_type()) {
                        successors[a].push(b);
                        predecessors[b].push(a);
                    }
                }
            }
        }

        let mut reaches_sink = vec![false; n];
        for v in (0..n).rev() {
            reaches_sink[v] = vertices[v].level == k || successors[v].iter().any(|&w| reaches_sink[w]);
        }
        let mut from_source = vec![false; n];
        for v in 0..n {
            from_source[v] = vertices[v].level == 1 || predecessors[v].iter().any(|&u| from_source[u]);
        }
        let live_successors = successors
            .iter()
            .map(|list| list.iter().copied().filter(|&w| reaches_sink[w] && from_source[w]).collect())
            .collect();

        LevelGraph {
            codes: codes.to_vec(),
            vertices,
            level_start,
            successors,
            predecessors,
            reaches_sink,
            from_source,
            live_successors,
        }
    }

    pub fn k(&self) -> usize {
        self.codes.len()
    }

    pub fn codes(&self) -> &[HairCode] {
        &self.codes
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[LevelVertex] {
        &self.vertices
    }

    pub fn vertex(&self, id: usize) -> LevelVertex {
        self.vertices[id]
    }

    /// Vertex ids at `level` (1-based), in kind order.
    pub fn level(&self, level: usize) -> std::ops::Range<usize> {
        self.level_start[level - 1]..self.level_start[level]
    }

    pub fn find(&self, level: usize, kind: VertexKind) -> Option<usize> {
        self.level(level).find(|&v| self.vertices[v].kind == kind)
    }

    pub fn successors(&self, id: usize) -> &[usize] {
        &self.successors[id]
    }

    pub fn predecessors(&self, id: usize) -> &[usize] {
        &self.predecessors[id]
    }

    /// Successors that lie on at least one source-sink path.
    pub fn live_successors(&self, id: usize) -> &[usize] {
        &self.live_successors[id]
    }

    pub fn reaches_sink(&self, id: usize) -> bool {
        self.reaches_sink[id]
    }

    pub fn reachable_from_source(&self, id: usize) -> bool {
        self.from_source[id]
    }

    pub fn is_live(&self, id: usize) -> bool {
        self.reaches_sink[id] && self.from_source[id]
    }

    pub fn edge_count(&self) -> usize {
        self.successors.iter().map(Vec::len).sum()
    }

    pub fn edges(&self) -> impl Iterator<Item = (LevelVertex, LevelVertex)> + '_ {
        self.successors
            .iter()
            .enumerate()
            .flat_map(move |(a, list)| list.iter().map(move |&b| (self.vertices[a], self.vertices[b])))
    }

    /// Number of source-sink paths, by a forward sum over predecessors.
    pub fn count_paths(&self) -> BigUint {
        let mut ways = vec![BigUint::ZERO; self.len()];
        for v in 0..self.len() {
            ways[v] = if self.vertices[v].level == 1 {
                BigUint::from(1u8)
            } else {
                self.predecessors[v].iter().map(|&u| &ways[u]).sum()
            };
        }
        self.level(self.k()).map(|v| &ways[v]).sum()
    }

    /// Graphviz rendering, one rank per level. Vertices on no source-sink
    /// path, and edges touching them, are dashed.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph levelgraph {\n    rankdir=LR;\n    node [shape=circle];\n");
        for (id, v) in self.vertices.iter().enumerate() {
            let style = if self.is_live(id) { "" } else { ", style=dashed" };
            let _ = writeln!(
                out,
                "    {v} [label=\"{v}\\ntype {} index {}\"{style}];",
                v.stage_type(),
                v.index()
            );
        }
        for level in 1..=self.k() {
            let names: Vec<String> = self.level(level).map(|v| format!("{};", self.vertices[v])).collect();
            let _ = writeln!(out, "    {{ rank=same; {} }}", names.join(" "));
        }
        for (a, list) in self.successors.iter().enumerate() {
            for &b in list {
                let style = if self.is_live(a) && self.is_live(b) { "" } else { " [style=dashed]" };
                let _ = writeln!(out, "    {} -> {}{style};", self.vertices[a], self.vertices[b]);
            }
        }
        out.push_str("}\n");
        out
    }
}
