//! Finite simplicial graphs and the purely graph-theoretic predicates used by
//! the dichotomy analysis: links, stars, domination, separating intersections
//! of links, depth, and the named graph families.

mod conditions;
mod depth;
mod enumerate;
mod families;
mod sil;
mod symmetry;

pub use conditions::{
    classify_special, corollary_conditions, CorollaryCondition, Reduction, SpecialFlags,
};
pub use depth::{
    depth_report, domination_depth, domination_depth_chain, star_separation_chain,
    star_separation_depth, DepthReport, DominationChain, VertexDepth,
};
pub use enumerate::enumerate_nonisomorphic;
pub use families::gamma_k;
pub use sil::{find_sil, sil_from_double_separation, sil_from_nonadjacent_domination, SilWitness};
pub use symmetry::{
    compose_permutations, enumerate_graph_symmetries, enumerate_graph_symmetries_with_bound,
    invert_permutation, render_permutation, DEFAULT_SYMMETRY_BOUND,
};

use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Index of a vertex in its graph's construction order.
pub type VertexId = usize;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("self-loop at `{0}`")]
    SelfLoop(String),
    #[error("asymmetric adjacency: `{from}` lists `{to}` but not vice versa")]
    AsymmetricAdjacency { from: String, to: String },
    #[error("graph parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("graph has {actual} vertices, exceeding the bound {bound}")]
    SizeBoundExceeded { actual: usize, bound: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// A finite simplicial graph: named vertices in a fixed construction order
/// and a symmetric, irreflexive adjacency relation.
///
/// The construction order is used for canonical tie-breaking everywhere
/// downstream, so it is fixed at construction and never reordered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    index: BTreeMap<String, VertexId>,
    adj: Vec<Vec<bool>>,
}

impl Graph {
    /// Builds a graph from named vertices and edges given as name pairs.
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Graph, GraphError> {
        let mut names = Vec::with_capacity(vertices.len());
        let mut index = BTreeMap::new();
        for v in vertices {
            let name = v.as_ref().to_owned();
            if index.insert(name.clone(), names.len()).is_some() {
                return Err(GraphError::DuplicateVertex(name));
            }
            names.push(name);
        }
        let n = names.len();
        let mut adj = vec![vec![false; n]; n];
        for (a, b) in edges {
            let ia = *index
                .get(a.as_ref())
                .ok_or_else(|| GraphError::UnknownVertex(a.as_ref().to_owned()))?;
            let ib = *index
                .get(b.as_ref())
                .ok_or_else(|| GraphError::UnknownVertex(b.as_ref().to_owned()))?;
            if ia == ib {
                return Err(GraphError::SelfLoop(names[ia].clone()));
            }
            adj[ia][ib] = true;
            adj[ib][ia] = true;
        }
        Ok(Graph { names, index, adj })
    }

    /// Builds a graph on vertices `v0..v{n-1}` from an upper-triangle edge
    /// mask in the bit order used by [`enumerate_nonisomorphic`].
    pub fn from_edge_mask(n: usize, mask: u64) -> Graph {
        let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let mut g = Graph::new(&names, &[]).expect("generated names are distinct");
        let mut bit = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                if mask >> bit & 1 == 1 {
                    g.adj[i][j] = true;
                    g.adj[j][i] = true;
                }
                bit += 1;
            }
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        0..self.names.len()
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Resolves a vertex name to its id.
    pub fn vertex(&self, name: &str) -> Result<VertexId, GraphError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| GraphError::UnknownVertex(name.to_owned()))
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v < self.names.len() {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(format!("#{v}")))
        }
    }

    pub fn adjacent(&self, a: VertexId, b: VertexId) -> bool {
        self.adj[a][b]
    }

    pub fn edge_count(&self) -> usize {
        let n = self.vertex_count();
        (0..n)
            .map(|i| ((i + 1)..n).filter(|&j| self.adj[i][j]).count())
            .sum()
    }

    /// Vertices adjacent to `v`, in construction order. `v` itself is never a member.
    pub fn link(&self, v: VertexId) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(VertexSet::from_sorted(
            self.vertices().filter(|&u| self.adj[v][u]).collect(),
        ))
    }

    /// The link of `v` together with `v` itself.
    pub fn star(&self, v: VertexId) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(VertexSet::from_sorted(
            self.vertices()
                .filter(|&u| u == v || self.adj[v][u])
                .collect(),
        ))
    }

    /// Whether `y` dominates `x`, i.e. lk(x) is contained in st(y).
    /// Every vertex dominates itself.
    pub fn dominates(&self, y: VertexId, x: VertexId) -> Result<bool, GraphError> {
        self.check_vertex(y)?;
        self.check_vertex(x)?;
        Ok(self
            .vertices()
            .filter(|&u| self.adj[x][u])
            .all(|u| u == y || self.adj[y][u]))
    }

    /// All unordered pairs {x, y} of distinct vertices with x ≤ y and y ≤ x,
    /// in canonical scan order. Adjacent pairs count.
    pub fn domination_equivalent_pairs(&self) -> Vec<(VertexId, VertexId)> {
        let n = self.vertex_count();
        let mut pairs = Vec::new();
        for x in 0..n {
            for y in (x + 1)..n {
                if self.dominates(x, y).unwrap() && self.dominates(y, x).unwrap() {
                    pairs.push((x, y));
                }
            }
        }
        pairs
    }

    /// Connected components of the subgraph induced on the complement of
    /// `removed`, each in construction order, components ordered by their
    /// least vertex.
    pub fn components_excluding(&self, removed: &VertexSet) -> Vec<VertexSet> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        for &v in removed.iter() {
            seen[v] = true;
        }
        let mut components = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut members = Vec::new();
            seen[start] = true;
            while let Some(v) = stack.pop() {
                members.push(v);
                for (u, _) in self.adj[v].iter().enumerate().filter(|(_, adj)| **adj) {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            members.sort_unstable();
            components.push(VertexSet::from_sorted(members));
        }
        components
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_excluding(&VertexSet::empty())
    }

    /// Whether `separator` disconnects `a` from `b`: both survive the removal
    /// and end up in different components.
    pub fn separates(&self, separator: &VertexSet, a: VertexId, b: VertexId) -> bool {
        if separator.contains(a) || separator.contains(b) || a == b {
            return false;
        }
        let comps = self.components_excluding(separator);
        let ca = comps.iter().position(|c| c.contains(a));
        let cb = comps.iter().position(|c| c.contains(b));
        ca != cb
    }

    /// Parses the adjacency-list text format: one `name: neighbor ...` line per
    /// vertex, `#` comments and blank lines ignored. Adjacency must be listed
    /// symmetrically. The empty graph parses successfully; callers that want to
    /// reject it check `vertex_count`.
    pub fn parse(text: &str) -> Result<Graph, GraphError> {
        let mut names: Vec<String> = Vec::new();
        let mut rows: Vec<(usize, Vec<String>)> = Vec::new();
        let mut index: BTreeMap<String, usize> = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            let (head, rest) = line.split_once(':').ok_or(GraphError::Parse {
                line: lineno + 1,
                msg: "expected `name: neighbor ...`".to_owned(),
            })?;
            let name = head.trim();
            if name.is_empty() || name.contains(char::is_whitespace) {
                return Err(GraphError::Parse {
                    line: lineno + 1,
                    msg: format!("invalid vertex name `{name}`"),
                });
            }
            if index.insert(name.to_owned(), names.len()).is_some() {
                return Err(GraphError::DuplicateVertex(name.to_owned()));
            }
            names.push(name.to_owned());
            rows.push((
                lineno + 1,
                rest.split_whitespace().map(str::to_owned).collect(),
            ));
        }
        let n = names.len();
        let mut adj = vec![vec![false; n]; n];
        for (v, (lineno, neighbors)) in rows.iter().enumerate() {
            for nb in neighbors {
                let u = *index.get(nb).ok_or(GraphError::Parse {
                    line: *lineno,
                    msg: format!("neighbor `{nb}` has no vertex line"),
                })?;
                if u == v {
                    return Err(GraphError::SelfLoop(names[v].clone()));
                }
                adj[v][u] = true;
            }
        }
        for v in 0..n {
            for u in 0..n {
                if adj[v][u] && !adj[u][v] {
                    return Err(GraphError::AsymmetricAdjacency {
                        from: names[v].clone(),
                        to: names[u].clone(),
                    });
                }
            }
        }
        Ok(Graph { names, index, adj })
    }

    /// Serializes back to the adjacency-list format; inverse of [`Graph::parse`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in self.vertices() {
            out.push_str(&self.names[v]);
            out.push(':');
            for u in self.vertices() {
                if self.adj[v][u] {
                    out.push(' ');
                    out.push_str(&self.names[u]);
                }
            }
            out.push('\n');
        }
        out
    }

    /// Renders a set of vertex ids as names, for reports.
    pub fn render_set(&self, set: &VertexSet) -> String {
        let names: Vec<&str> = set.iter().map(|&v| self.name(v)).collect();
        format!("{{{}}}", names.join(" "))
    }
}

/// A subset of a graph's vertices, kept in construction order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    members: Vec<VertexId>,
}

impl VertexSet {
    pub fn empty() -> VertexSet {
        VertexSet {
            members: Vec::new(),
        }
    }

    /// Wraps an already-sorted, duplicate-free list.
    pub fn from_sorted(members: Vec<VertexId>) -> VertexSet {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet { members }
    }

    pub fn from_unsorted(mut members: Vec<VertexId>) -> VertexSet {
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, VertexId> {
        self.members.iter()
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.members
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.members.iter().all(|&v| other.contains(v))
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet::from_sorted(
            self.members
                .iter()
                .copied()
                .filter(|&v| other.contains(v))
                .collect(),
        )
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut all: Vec<VertexId> = self
            .members
            .iter()
            .chain(other.members.iter())
            .copied()
            .collect();
        all.sort_unstable();
        all.dedup();
        VertexSet::from_sorted(all)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet::from_sorted(
            self.members
                .iter()
                .copied()
                .filter(|&v| !other.contains(v))
                .collect(),
        )
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.members.iter().all(|&v| !other.contains(v))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<T: IntoIterator<Item = VertexId>>(iter: T) -> Self {
        VertexSet::from_unsorted(iter.into_iter().collect())
    }
}
