//! Generalised caterpillars: a backbone path `v_1 .. v_k` where every
//! backbone vertex carries any number of length-1 hairs and at most one
//! length-2 hair.
//!
//! The stage of `v_i` is `v_i` plus every hair vertex hanging off it. The
//! canonical symbolic form of an instance is one [`StageProfile`] per stage;
//! [`Caterpillar`] additionally carries the vertex names of every stage.

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{GraphError, Tree, VertexLabel};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CaterpillarError {
    #[error("tree is not a generalised caterpillar: {0}")]
    NotGeneralizedCaterpillar(String),
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("invalid stage count {0}: need at least one stage")]
    InvalidK(i64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("duplicate vertex label {0}")]
    DuplicateLabel(VertexLabel),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Hair configuration of one stage, the entry `T[i]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HairCode {
    /// No hairs.
    Bare = 0,
    /// Only length-1 hairs.
    Short = 1,
    /// Only the length-2 hair.
    Long = 2,
    /// Both kinds.
    Both = 3,
}

impl HairCode {
    pub const ALL: [HairCode; 4] = [HairCode::Bare, HairCode::Short, HairCode::Long, HairCode::Both];

    pub fn as_u8(self) -> u8 {
        self as u8
    }

    pub fn from_u8(code: u8) -> Option<Self> {
        Self::ALL.get(code as usize).copied()
    }

    pub fn has_short(self) -> bool {
        matches!(self, HairCode::Short | HairCode::Both)
    }

    pub fn has_long(self) -> bool {
        matches!(self, HairCode::Long | HairCode::Both)
    }
}

impl fmt::Display for HairCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_u8())
    }
}

/// Hair counts at one stage.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct StageProfile {
    /// Number of length-1 hairs.
    pub ones: usize,
    /// Whether the length-2 hair is present.
    pub two: bool,
}

impl StageProfile {
    pub fn new(ones: usize, two: bool) -> Self {
        StageProfile { ones, two }
    }

    pub fn code(&self) -> HairCode {
        match (self.ones > 0, self.two) {
            (false, false) => HairCode::Bare,
            (true, false) => HairCode::Short,
            (false, true) => HairCode::Long,
            (true, true) => HairCode::Both,
        }
    }

    pub fn t_code(&self) -> u8 {
        self.code().as_u8()
    }
}

/// The length-2 hair `v_i - inner - outer` (the `l_i`, `m_i` pair).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LongHair {
    pub inner: VertexLabel,
    pub outer: VertexLabel,
}

/// Names of every vertex at one stage.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Stage {
    pub spine: VertexLabel,
    /// Ends of the length-1 hairs, sorted.
    pub pendants: Vec<VertexLabel>,
    pub long_hair: Option<LongHair>,
}

impl Stage {
    pub fn bare(spine: VertexLabel) -> Self {
        Stage { spine, pendants: Vec::new(), long_hair: None }
    }

    pub fn profile(&self) -> StageProfile {
        StageProfile::new(self.pendants.len(), self.long_hair.is_some())
    }

    pub fn code(&self) -> HairCode {
        self.profile().code()
    }

    fn labels(&self) -> impl Iterator<Item = &VertexLabel> {
        std::iter::once(&self.spine)
            .chain(&self.pendants)
            .chain(self.long_hair.iter().flat_map(|h| [&h.inner, &h.outer]))
    }
}

/// A generalised caterpillar with a fixed backbone and named stages.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Caterpillar {
    stages: Vec<Stage>,
}

impl Caterpillar {
    /// Validates that there is at least one stage and that labels are unique.
    pub fn new(mut stages: Vec<Stage>) -> Result<Self, CaterpillarError> {
        if stages.is_empty() {
            return Err(CaterpillarError::InvalidK(0));
        }
        let mut seen = BTreeSet::new();
        for stage in &mut stages {
            stage.pendants.sort();
            for label in stage.labels() {
                if !seen.insert(label.clone()) {
                    return Err(CaterpillarError::DuplicateLabel(label.clone()));
                }
            }
        }
        Ok(Caterpillar { stages })
    }

    /// Instance with the synthesized names `v{i}`, `h{i}_{j}`, `l{i}`, `m{i}`.
    pub fn from_profiles(profiles: &[StageProfile]) -> Result<Self, CaterpillarError> {
        if profiles.is_empty() {
            return Err(CaterpillarError::InvalidK(0));
        }
        let name = |s: String| VertexLabel::new(&s).expect("synthesized labels are valid");
        let stages = profiles
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let i = i + 1;
                Stage {
                    spine: name(format!("v{i}")),
                    pendants: (1..=p.ones).map(|j| name(format!("h{i}_{j}"))).collect(),
                    long_hair: p.two.then(|| LongHair {
                        inner: name(format!("l{i}")),
                        outer: name(format!("m{i}")),
                    }),
                }
            })
            .collect();
        Caterpillar::new(stages)
    }

    pub fn from_codes(codes: &[HairCode]) -> Result<Self, CaterpillarError> {
        let profiles: Vec<_> = codes
            .iter()
            .map(|c| StageProfile::new(c.has_short() as usize, c.has_long()))
            .collect();
        Self::from_profiles(&profiles)
    }

    /// Number of backbone vertices.
    pub fn k(&self) -> usize {
        self.stages.len()
    }

    pub fn stages(&self) -> &[Stage] {
        &self.stages
    }

    pub fn stage(&self, i: usize) -> &Stage {
        &self.stages[i]
    }

    pub fn backbone(&self) -> impl Iterator<Item = &VertexLabel> {
        self.stages.iter().map(|s| &s.spine)
    }

    pub fn profiles(&self) -> Vec<StageProfile> {
        self.stages.iter().map(Stage::profile).collect()
    }

    pub fn codes(&self) -> Vec<HairCode> {
        self.stages.iter().map(Stage::code).collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.stages.iter().map(|s| s.labels().count()).sum()
    }

    pub fn is_normalized(&self) -> bool {
        self.stages.iter().all(|s| s.pendants.len() <= 1)
    }

    pub fn to_tree(&self) -> Tree {
        let mut edges = Vec::new();
        for pair in self.stages.windows(2) {
            edges.push((pair[0].spine.clone(), pair[1].spine.clone()));
        }
        for stage in &self.stages {
            for h in &stage.pendants {
                edges.push((stage.spine.clone(), h.clone()));
            }
            if let Some(hair) = &stage.long_hair {
                edges.push((stage.spine.clone(), hair.inner.clone()));
                edges.push((hair.inner.clone(), hair.outer.clone()));
            }
        }
        if edges.is_empty() {
            return Tree::singleton(self.stages[0].spine.clone());
        }
        Tree::from_edges(edges).expect("a caterpillar with unique labels is a tree")
    }

    /// Collapses every stage's length-1 hairs onto one representative, the
    /// lexicographically least pendant.
    ///
    /// A length-1 pendant belongs to a maximal independent set exactly when
    /// all pendants of its stage do, so the representative stands for the
    /// whole group and [`ExpansionMap`] restores it.
    pub fn normalize(&self) -> (Caterpillar, ExpansionMap) {
        let groups = self.stages.iter().map(|s| s.pendants.clone()).collect();
        let stages = self
            .stages
            .iter()
            .map(|s| Stage {
                spine: s.spine.clone(),
                pendants: s.pendants.first().cloned().into_iter().collect(),
                long_hair: s.long_hair.clone(),
            })
            .collect();
        (Caterpillar { stages }, ExpansionMap { groups })
    }
}

/// Per-stage list of all length-1 pendants collapsed by normalization.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExpansionMap {
    groups: Vec<Vec<VertexLabel>>,
}

impl ExpansionMap {
    /// Every pendant of stage `i` (0-based); its first entry is the representative.
    pub fn group(&self, i: usize) -> &[VertexLabel] {
        &self.groups[i]
    }

    pub fn is_identity(&self) -> bool {
        self.groups.iter().all(|g| g.len() <= 1)
    }

    /// Replaces each representative in `members` by its whole group.
    pub fn expand(&self, members: &[VertexLabel]) -> Vec<VertexLabel> {
        let mut out = Vec::with_capacity(members.len());
        for m in members {
            match self.groups.iter().find(|g| g.first() == Some(m)) {
                Some(group) => out.extend(group.iter().cloned()),
                None => out.push(m.clone()),
            }
        }
        out.sort();
        out
    }
}

/// Order in which backbone trims `(front, back)` of the diameter path are tried.
const TRIM_ORDER: [(usize, usize); 9] =
    [(0, 0), (0, 1), (1, 0), (1, 1), (0, 2), (2, 0), (1, 2), (2, 1), (2, 2)];

/// Finds a generalised caterpillar decomposition of `tree`.
///
/// The backbone is taken from a diameter path found by two BFS sweeps (ties
/// broken by least label), trimmed by up to two vertices at each end; the
/// first trim in [`TRIM_ORDER`] under which every off-backbone component is a
/// length-1 or length-2 hair wins.
pub fn recognize(tree: &Tree) -> Result<Caterpillar, CaterpillarError> {
    let diameter = diameter_path(tree);
    for &(front, back) in &TRIM_ORDER {
        if front + back >= diameter.len() {
            continue;
        }
        let backbone = &diameter[front..diameter.len() - back];
        if let Some(stages) = decompose_along(tree, backbone) {
            return Caterpillar::new(stages);
        }
    }
    Err(CaterpillarError::NotGeneralizedCaterpillar(
        "no backbone leaves only hairs of length one or two with at most one length-2 hair per stage"
            .into(),
    ))
}

fn farthest(dist: &[Option<usize>]) -> usize {
    // Ids are label ranks, so the first maximum is the least label.
    let mut best = 0;
    for (v, d) in dist.iter().enumerate() {
        if d > &dist[best] {
            best = v;
        }
    }
    best
}

fn diameter_path(tree: &Tree) -> Vec<usize> {
    let start = farthest(&tree.bfs_distances(0));
    let (dist, parent) = tree.bfs(start);
    let end = farthest(&dist);
    let mut path = vec![end];
    let mut cur = end;
    while let Some(p) = parent[cur] {
        path.push(p);
        cur = p;
    }
    path.reverse();
    path
}

fn decompose_along(tree: &Tree, backbone: &[usize]) -> Option<Vec<Stage>> {
    let mut on_backbone = vec![false; tree.len()];
    for &v in backbone {
        on_backbone[v] = true;
    }
    let mut covered = backbone.len();
    let mut stages = Vec::with_capacity(backbone.len());
    for &v in backbone {
        let mut stage = Stage::bare(tree.label(v).clone());
        for &w in tree.adjacent(v) {
            if on_backbone[w] {
                continue;
            }
            match tree.degree(w) {
                1 => {
                    stage.pendants.push(tree.label(w).clone());
                    covered += 1;
                }
                2 => {
                    let far = *tree.adjacent(w).iter().find(|&&x| x != v)?;
                    if tree.degree(far) != 1 || stage.long_hair.is_some() {
                        return None;
                    }
                    stage.long_hair = Some(LongHair {
                        inner: tree.label(w).clone(),
                        outer: tree.label(far).clone(),
                    });
                    covered += 2;
                }
                _ => return None,
            }
        }
        stages.push(stage);
    }
    debug_assert_eq!(covered, tree.len());
    Some(stages)
}

fn parse_err(line: usize, reason: impl Into<String>) -> CaterpillarError {
    CaterpillarError::Parse { line, reason: reason.into() }
}

/// Parses the instance file format: a line holding `k`, then `k` lines
/// `ones two` with `two` in `{0, 1}`. Blank lines and `#` comments are skipped.
pub fn parse_instance(text: &str) -> Result<Caterpillar, CaterpillarError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(n, raw)| (n + 1, raw.strip_suffix('\r').unwrap_or(raw).trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (n, head) = lines.next().ok_or_else(|| parse_err(1, "missing stage count"))?;
    let mut head_tokens = head.split_whitespace();
    let k: i64 = head_tokens
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(n, format!("expected stage count, found {head:?}")))?;
    if head_tokens.next().is_some() {
        return Err(parse_err(n, "stage count line must hold a single integer"));
    }
    if k < 1 {
        return Err(CaterpillarError::InvalidK(k));
    }

    let mut profiles = Vec::with_capacity(k as usize);
    for (n, line) in lines {
        if profiles.len() == k as usize {
            return Err(parse_err(n, format!("more than {k} stage lines")));
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let [ones, two] = tokens[..] else {
            return Err(parse_err(n, format!("expected `ones two`, found {line:?}")));
        };
        let ones: usize = ones
            .parse()
            .map_err(|_| parse_err(n, format!("invalid length-1 hair count {ones:?}")))?;
        let two = match two {
            "0" => false,
            "1" => true,
            other => return Err(parse_err(n, format!("length-2 flag must be 0 or 1, found {other:?}"))),
        };
        profiles.push(StageProfile::new(ones, two));
    }
    if profiles.len() != k as usize {
        return Err(parse_err(
            text.lines().count().max(1),
            format!("expected {k} stage lines, found {}", profiles.len()),
        ));
    }
    Caterpillar::from_profiles(&profiles)
}

/// Canonical instance file text; every line ends in `\n`.
pub fn serialize_instance(cat: &Caterpillar) -> String {
    let mut out = format!("{}\n", cat.k());
    for p in cat.profiles() {
        out.push_str(&format!("{} {}\n", p.ones, p.two as u8));
    }
    out
}

/// Seeded random instance: per stage, `ones` uniform on `0..=max_ones` and
/// the length-2 hair present with probability `p_two`.
///
/// Uses ChaCha8 so the output is identical on every platform.
pub fn gen_random(k: usize, max_ones: usize, p_two: f64, seed: u64) -> Result<Caterpillar, CaterpillarError> {
    if k < 1 {
        return Err(CaterpillarError::InvalidK(k as i64));
    }
    if !(0.0..=1.0).contains(&p_two) {
        return Err(CaterpillarError::InvalidParameter(format!("p_two = {p_two} is not a probability")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let profiles: Vec<_> = (0..k)
        .map(|_| {
            let ones = rng.gen_range(0..=max_ones as u64) as usize;
            let two = rng.gen_bool(p_two);
            StageProfile::new(ones, two)
        })
        .collect();
    Caterpillar::from_profiles(&profiles)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_edge_list;
    use crate::test_support::{FIGURE_TWO_EDGES, FIGURE_TWO_INSTANCE};

    fn codes(cat: &Caterpillar) -> Vec<u8> {
        cat.codes().iter().map(|c| c.as_u8()).collect()
    }

    #[test]
    fn t_code_covers_all_configurations() {
        assert_eq!(StageProfile::new(0, false).t_code(), 0);
        assert_eq!(StageProfile::new(1, false).t_code(), 1);
        assert_eq!(StageProfile::new(4, false).t_code(), 1);
        assert_eq!(StageProfile::new(0, true).t_code(), 2);
        assert_eq!(StageProfile::new(1, true).t_code(), 3);
        assert_eq!(StageProfile::new(7, true).t_code(), 3);
    }

    #[test]
    fn recognizes_single_vertex() {
        let tree = Tree::singleton(VertexLabel::new("x").unwrap());
        let cat = recognize(&tree).unwrap();
        assert_eq!(cat.k(), 1);
        assert_eq!(cat.profiles(), vec![StageProfile::new(0, false)]);
    }

    #[test]
    fn recognizes_figure_two_along_the_diameter() {
        // The unique diameter is m3 l3 v3 v2 v1 l1 m1 and it is already a
        // valid backbone, so the untrimmed candidate wins.
        let tree = parse_edge_list(FIGURE_TWO_EDGES).unwrap();
        let cat = recognize(&tree).unwrap();
        let spine: Vec<&str> = cat.backbone().map(VertexLabel::as_str).collect();
        assert_eq!(spine, ["m3", "l3", "v3", "v2", "v1", "l1", "m1"]);
        assert_eq!(codes(&cat), [0, 0, 1, 1, 1, 0, 0]);
        assert_eq!(cat.to_tree(), tree);
    }

    #[test]
    fn recognizes_a_star() {
        // BFS from a reaches b and d at distance 2 and keeps b; BFS from b then
        // keeps a. Trim (0,0) of b-c-a is valid with d as a pendant of c.
        let tree = parse_edge_list("c a\nc b\nc d\n").unwrap();
        let cat = recognize(&tree).unwrap();
        let spine: Vec<&str> = cat.backbone().map(VertexLabel::as_str).collect();
        assert_eq!(spine, ["b", "c", "a"]);
        assert_eq!(codes(&cat), [0, 1, 0]);
    }

    #[test]
    fn spider_legs() {
        // Four length-2 legs at c: any backbone through c leaves two of them.
        let edges = "c a1\na1 a2\nc b1\nb1 b2\nc d1\nd1 d2\nc e1\ne1 e2\n";
        let tree = parse_edge_list(edges).unwrap();
        assert!(matches!(recognize(&tree), Err(CaterpillarError::NotGeneralizedCaterpillar(_))));

        // Three length-2 legs and a pendant x on a1.
        let edges = "c a1\na1 a2\nc b1\nb1 b2\nc d1\nd1 d2\na1 x\n";
        let tree = parse_edge_list(edges).unwrap();
        let cat = recognize(&tree).unwrap();
        let spine: Vec<&str> = cat.backbone().map(VertexLabel::as_str).collect();
        assert_eq!(spine, ["b2", "b1", "c", "a1", "a2"]);
        assert_eq!(codes(&cat), [0, 0, 2, 1, 0]);
        assert_eq!(cat.to_tree(), tree);
    }

    #[test]
    fn rejects_two_long_hairs_and_long_legs() {
        // Two length-2 hairs at both b and c of a 2-vertex core, with nothing
        // longer: every trim leaves two length-2 hairs on one stage.
        let edges = "b c\nb x1\nx1 x2\nb y1\ny1 y2\nb z1\nz1 z2\nc p1\np1 p2\nc q1\nq1 q2\nc r1\nr1 r2\n";
        let tree = parse_edge_list(edges).unwrap();
        assert!(matches!(recognize(&tree), Err(CaterpillarError::NotGeneralizedCaterpillar(_))));

        // A spider with three legs of length 3.
        let edges = "c a1\na1 a2\na2 a3\nc b1\nb1 b2\nb2 b3\nc d1\nd1 d2\nd2 d3\n";
        let tree = parse_edge_list(edges).unwrap();
        assert!(matches!(recognize(&tree), Err(CaterpillarError::NotGeneralizedCaterpillar(_))));
    }

    #[test]
    fn normalize_collapses_pendants() {
        let cat = Caterpillar::from_profiles(&[StageProfile::new(3, false)]).unwrap();
        let (norm, map) = cat.normalize();
        assert_eq!(norm.profiles(), vec![StageProfile::new(1, false)]);
        assert_eq!(norm.stage(0).pendants[0].as_str(), "h1_1");
        assert_eq!(map.group(0).len(), 3);
        assert!(!map.is_identity());

        let h = |s: &str| VertexLabel::new(s).unwrap();
        assert_eq!(map.expand(&[h("h1_1")]), vec![h("h1_1"), h("h1_2"), h("h1_3")]);
    }

    #[test]
    fn normalize_is_identity_on_normalized_input() {
        let cat = parse_instance(FIGURE_TWO_INSTANCE).unwrap();
        let (norm, map) = cat.normalize();
        assert_eq!(norm, cat);
        assert!(map.is_identity());
    }

    #[test]
    fn representative_is_least_label() {
        let l = |s: &str| VertexLabel::new(s).unwrap();
        let cat = Caterpillar::new(vec![Stage {
            spine: l("v"),
            pendants: vec![l("zeta"), l("alpha"), l("mu")],
            long_hair: None,
        }])
        .unwrap();
        let (norm, map) = cat.normalize();
        assert_eq!(norm.stage(0).pendants, vec![l("alpha")]);
        assert_eq!(map.group(0), &[l("alpha"), l("mu"), l("zeta")]);
    }

    #[test]
    fn instance_file_examples() {
        let cat = parse_instance("4\n1 1\n1 0\n0 1\n0 0").unwrap();
        assert_eq!(codes(&cat), [3, 1, 2, 0]);
        assert_eq!(cat.vertex_count(), 10);

        let single = parse_instance("1\n0 0").unwrap();
        assert_eq!(single.k(), 1);
        assert_eq!(single.to_tree().labels().len(), 1);

        let canonical = "4\n1 1\n1 0\n0 1\n0 0\n";
        assert_eq!(serialize_instance(&parse_instance(canonical).unwrap()), canonical);
    }

    #[test]
    fn instance_file_errors() {
        assert_eq!(parse_instance("0\n"), Err(CaterpillarError::InvalidK(0)));
        assert_eq!(parse_instance("-3\n"), Err(CaterpillarError::InvalidK(-3)));
        assert!(matches!(parse_instance(""), Err(CaterpillarError::Parse { .. })));
        assert!(matches!(parse_instance("x\n"), Err(CaterpillarError::Parse { line: 1, .. })));
        assert!(matches!(parse_instance("2\n0 0\n"), Err(CaterpillarError::Parse { .. })));
        assert!(matches!(parse_instance("1\n0 0\n1 1\n"), Err(CaterpillarError::Parse { line: 3, .. })));
        assert!(matches!(parse_instance("1\n0 2\n"), Err(CaterpillarError::Parse { line: 2, .. })));
        assert!(matches!(parse_instance("1\n-1 0\n"), Err(CaterpillarError::Parse { line: 2, .. })));
        assert!(matches!(parse_instance("1\n0\n"), Err(CaterpillarError::Parse { line: 2, .. })));
    }

    #[test]
    fn synthesized_names() {
        let cat = parse_instance("2\n2 1\n0 0\n").unwrap();
        let stage = cat.stage(0);
        assert_eq!(stage.spine.as_str(), "v1");
        let pendants: Vec<&str> = stage.pendants.iter().map(VertexLabel::as_str).collect();
        assert_eq!(pendants, ["h1_1", "h1_2"]);
        let hair = stage.long_hair.as_ref().unwrap();
        assert_eq!((hair.inner.as_str(), hair.outer.as_str()), ("l1", "m1"));
        assert_eq!(cat.stage(1).spine.as_str(), "v2");
    }

    #[test]
    fn to_tree_builds_hairs() {
        let cat = parse_instance("1\n0 1\n").unwrap();
        assert_eq!(cat.to_tree(), parse_edge_list("v1 l1\nl1 m1\n").unwrap());
        assert_eq!(parse_instance(FIGURE_TWO_INSTANCE).unwrap().to_tree().len(), 10);
    }

    #[test]
    fn gen_random_basics() {
        let single = gen_random(1, 0, 0.0, 99).unwrap();
        assert_eq!(single.profiles(), vec![StageProfile::new(0, false)]);
        assert_eq!(gen_random(5, 3, 0.5, 7).unwrap(), gen_random(5, 3, 0.5, 7).unwrap());
        assert!(gen_random(0, 1, 0.5, 1).is_err());
        assert!(gen_random(3, 1, 1.5, 1).is_err());
        let all_long = gen_random(6, 0, 1.0, 3).unwrap();
        assert!(all_long.profiles().iter().all(|p| p.two && p.ones == 0));
    }

    #[test]
    fn gen_random_golden() {
        let cat = gen_random(6, 3, 0.5, 42).unwrap();
        assert_eq!(serialize_instance(&cat), include_str!("../tests/golden/gen_k6_seed42.txt"));
    }

    #[test]
    fn duplicate_labels_rejected() {
        let l = |s: &str| VertexLabel::new(s).unwrap();
        let err = Caterpillar::new(vec![Stage::bare(l("a")), Stage::bare(l("a"))]).unwrap_err();
        assert_eq!(err, CaterpillarError::DuplicateLabel(l("a")));
    }
}
