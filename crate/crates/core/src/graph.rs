//! Labeled undirected trees and the edge-list text format.
//!
//! Edge lists are line oriented: every non-blank line that does not start
//! with `#` holds exactly two whitespace-separated vertex labels. Both `\n`
//! and `\r\n` line endings are accepted; serialization always emits `\n`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// An opaque vertex name: a non-empty token without whitespace.
///
/// Labels order lexicographically (byte order) and are cheap to clone.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexLabel(Arc<str>);

impl VertexLabel {
    pub fn new(name: &str) -> Result<Self, GraphError> {
        if name.is_empty() || name.chars().any(char::is_whitespace) {
            return Err(GraphError::InvalidLabel(name.to_string()));
        }
        Ok(VertexLabel(Arc::from(name)))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl AsRef<str> for VertexLabel {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

impl std::borrow::Borrow<str> for VertexLabel {
    fn borrow(&self) -> &str {
        &self.0
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("invalid vertex label {0:?}")]
    InvalidLabel(String),
    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("empty input: no edges")]
    EmptyInput,
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
}

/// A connected acyclic graph on labeled vertices.
///
/// Vertices are stored in lexicographic label order, so vertex ids double
/// as ranks in that order. Adjacency lists are sorted the same way.
#[derive(Clone, PartialEq, Eq)]
pub struct Tree {
    labels: Vec<VertexLabel>,
    index: BTreeMap<VertexLabel, usize>,
    adjacency: Vec<Vec<usize>>,
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Tree")
            .field("vertices", &self.labels)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Tree {
    /// The one-vertex tree. It has no edge-list representation.
    pub fn singleton(label: VertexLabel) -> Self {
        let mut index = BTreeMap::new();
        index.insert(label.clone(), 0);
        Tree { labels: vec![label], index, adjacency: vec![Vec::new()] }
    }

    /// Builds a tree from an edge set whose endpoints are exactly its vertices.
    pub fn from_edges<I>(edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexLabel, VertexLabel)>,
    {
        let edges: Vec<_> = edges.into_iter().collect();
        if edges.is_empty() {
            return Err(GraphError::EmptyInput);
        }
        Self::build(edges.into_iter().map(|(a, b)| (0, a, b)))
    }

    fn build<I>(edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, VertexLabel, VertexLabel)>,
    {
        let edges: Vec<_> = edges.into_iter().collect();
        let vertex_set: BTreeSet<VertexLabel> =
            edges.iter().flat_map(|(_, a, b)| [a.clone(), b.clone()]).collect();
        let labels: Vec<VertexLabel> = vertex_set.into_iter().collect();
        let index: BTreeMap<VertexLabel, usize> =
            labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();

        let mut seen = BTreeSet::new();
        let mut adjacency = vec![Vec::new(); labels.len()];
        for (line, a, b) in &edges {
            if a == b {
                return Err(GraphError::Parse {
                    line: *line,
                    reason: format!("self-loop on {a}"),
                });
            }
            let (x, y) = (index[a], index[b]);
            if !seen.insert((x.min(y), x.max(y))) {
                return Err(GraphError::Parse {
                    line: *line,
                    reason: format!("duplicate edge {a} {b}"),
                });
            }
            adjacency[x].push(y);
            adjacency[y].push(x);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }

        let tree = Tree { labels, index, adjacency };
        if edges.len() + 1 != tree.len() {
            return Err(GraphError::NotATree(format!(
                "{} vertices but {} edges",
                tree.len(),
                edges.len()
            )));
        }
        // With |E| = |V| - 1, connectedness rules out cycles as well.
        let reached = tree.bfs_distances(0).iter().filter(|d| d.is_some()).count();
        if reached != tree.len() {
            return Err(GraphError::NotATree("graph is disconnected".into()));
        }
        Ok(tree)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.len() - 1
    }

    /// Vertex labels in lexicographic order.
    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn label(&self, id: usize) -> &VertexLabel {
        &self.labels[id]
    }

    pub fn id_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn contains(&self, label: &str) -> bool {
        self.index.contains_key(label)
    }

    /// Neighbor ids of `id`, sorted.
    pub fn adjacent(&self, id: usize) -> &[usize] {
        &self.adjacency[id]
    }

    pub fn degree(&self, id: usize) -> usize {
        self.adjacency[id].len()
    }

    pub fn neighbors(&self, label: &str) -> Result<BTreeSet<VertexLabel>, GraphError> {
        let id = self
            .id_of(label)
            .ok_or_else(|| GraphError::UnknownVertex(label.to_string()))?;
        Ok(self.adjacency[id].iter().map(|&n| self.labels[n].clone()).collect())
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Edges as `(smaller, larger)` label pairs in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (&VertexLabel, &VertexLabel)> + '_ {
        self.adjacency.iter().enumerate().flat_map(move |(a, list)| {
            list.iter()
                .filter(move |&&b| a < b)
                .map(move |&b| (&self.labels[a], &self.labels[b]))
        })
    }

    /// Hop distances from `source`; neighbors are scanned in label order.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        self.bfs(source).0
    }

    /// BFS distances and parents, with neighbors visited in label order so
    /// the parent tree is deterministic.
    pub(crate) fn bfs(&self, source: usize) -> (Vec<Option<usize>>, Vec<Option<usize>>) {
        let mut dist = vec![None; self.len()];
        let mut parent = vec![None; self.len()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &w in &self.adjacency[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    parent[w] = Some(v);
                    queue.push_back(w);
                }
            }
        }
        (dist, parent)
    }

    /// Edge-list text, one `a b` line per edge with `a < b`, lines sorted.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (a, b) in self.edges() {
            out.push_str(a.as_str());
            out.push(' ');
            out.push_str(b.as_str());
            out.push('\n');
        }
        out
    }
}

/// Parses edge-list text into a [`Tree`].
pub fn parse_edge_list(text: &str) -> Result<Tree, GraphError> {
    let mut edges = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.strip_suffix('\r').unwrap_or(raw).trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(GraphError::Parse {
                line: n + 1,
                reason: format!("expected two vertex labels, found {}", tokens.len()),
            });
        }
        let a = VertexLabel::new(tokens[0])?;
        let b = VertexLabel::new(tokens[1])?;
        edges.push((n + 1, a, b));
    }
    if edges.is_empty() {
        return Err(GraphError::EmptyInput);
    }
    Tree::build(edges)
}
