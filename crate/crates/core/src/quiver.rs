//! Quivers, digraphs and undirected graphs.
//!
//! A [`Quiver`] is a finite set of vertices together with an ordered list of
//! edges, each with a source and a target. Parallel edges and self-loops are
//! allowed. Digraphs forbid parallel edges with the same ordered endpoints.
//! Undirected graphs are quivers carrying a reflection: every undirected edge
//! is stored as a pair of opposite darts `<id>+` and `<id>-`.

use std::collections::{HashMap, HashSet};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("duplicate vertex id `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate edge id `{0}`")]
    DuplicateEdge(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("digraph already has an edge from `{0}` to `{1}`")]
    ParallelEdge(String, String),
    #[error("invalid reflection: {0}")]
    BadReflection(String),
    #[error("cannot contract self-loop `{0}`")]
    SelfLoopContraction(String),
    #[error("operation requires an undirected graph")]
    NotUndirected,
    #[error("operation requires a directed quiver")]
    NotDirected,
    #[error("cone apex `{0}` is already a vertex")]
    ApexCollision(String),
    #[error("cone orientation must label every base vertex")]
    IncompleteOrientation,
    #[error("bad family parameters: {0}")]
    BadParams(String),
    #[error("identifier `{0}` is empty or contains whitespace")]
    BadIdentifier(String),
}

pub type Result<T> = std::result::Result<T, QuiverError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Quiver,
    Digraph,
    Undirected,
}

impl Kind {
    pub fn is_directed(self) -> bool {
        !matches!(self, Kind::Undirected)
    }

    pub fn keyword(self) -> &'static str {
        match self {
            Kind::Quiver => "quiver",
            Kind::Digraph => "digraph",
            Kind::Undirected => "graph",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

/// An edge (or dart, for undirected graphs) given by vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: String,
    pub source: usize,
    pub target: usize,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.source == self.target
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    name: String,
    kind: Kind,
    vertices: Vec<String>,
    edges: Vec<Edge>,
    reflection: Option<Vec<usize>>,
    vertex_index: HashMap<String, usize>,
    edge_index: HashMap<String, usize>,
}

fn check_identifier(id: &str) -> Result<()> {
    if id.is_empty() || id.chars().any(char::is_whitespace) {
        return Err(QuiverError::BadIdentifier(id.to_string()));
    }
    Ok(())
}

impl Quiver {
    /// Builds a quiver from vertex ids and edges given as `(id, source, target)`.
    ///
    /// For [`Kind::Undirected`] every triple declares one undirected edge and
    /// is expanded into the darts `<id>+` (source to target) and `<id>-`.
    pub fn new<S: AsRef<str>>(
        kind: Kind,
        name: &str,
        vertices: &[S],
        edges: &[(S, S, S)],
    ) -> Result<Self> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let mut vertex_index = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            check_identifier(v)?;
            if vertex_index.insert(v.clone(), i).is_some() {
                return Err(QuiverError::DuplicateVertex(v.clone()));
            }
        }
        let lookup = |v: &str| {
            vertex_index
                .get(v)
                .copied()
                .ok_or_else(|| QuiverError::UnknownVertex(v.to_string()))
        };
        let mut darts = Vec::new();
        let mut reflection = Vec::new();
        for (id, s, t) in edges {
            let (id, s, t) = (id.as_ref(), lookup(s.as_ref())?, lookup(t.as_ref())?);
            check_identifier(id)?;
            match kind {
                Kind::Undirected => {
                    let i = darts.len();
                    darts.push(Edge { id: format!("{id}+"), source: s, target: t });
                    darts.push(Edge { id: format!("{id}-"), source: t, target: s });
                    reflection.push(i + 1);
                    reflection.push(i);
                }
                _ => darts.push(Edge { id: id.to_string(), source: s, target: t }),
            }
        }
        let reflection = (kind == Kind::Undirected).then_some(reflection);
        Self::from_parts(kind, name, vertices, darts, reflection)
    }

    /// Shorthand for a digraph.
    pub fn digraph<S: AsRef<str>>(name: &str, vertices: &[S], edges: &[(S, S, S)]) -> Result<Self> {
        Self::new(Kind::Digraph, name, vertices, edges)
    }

    /// Builds a quiver from already-indexed parts, validating every invariant.
    pub fn from_parts(
        kind: Kind,
        name: &str,
        vertices: Vec<String>,
        edges: Vec<Edge>,
        reflection: Option<Vec<usize>>,
    ) -> Result<Self> {
        let mut vertex_index = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            check_identifier(v)?;
            if vertex_index.insert(v.clone(), i).is_some() {
                return Err(QuiverError::DuplicateVertex(v.clone()));
            }
        }
        let mut edge_index = HashMap::with_capacity(edges.len());
        for (i, e) in edges.iter().enumerate() {
            check_identifier(&e.id)?;
            if e.source >= vertices.len() || e.target >= vertices.len() {
                return Err(QuiverError::UnknownVertex(format!("index out of range in `{}`", e.id)));
            }
            if edge_index.insert(e.id.clone(), i).is_some() {
                return Err(QuiverError::DuplicateEdge(e.id.clone()));
            }
        }
        if kind == Kind::Digraph {
            let mut seen = HashSet::with_capacity(edges.len());
            for e in &edges {
                if !seen.insert((e.source, e.target)) {
                    return Err(QuiverError::ParallelEdge(
                        vertices[e.source].clone(),
                        vertices[e.target].clone(),
                    ));
                }
            }
        }
        match (&reflection, kind) {
            (None, Kind::Undirected) => {
                return Err(QuiverError::BadReflection("undirected graph without reflection".into()))
            }
            (Some(_), Kind::Quiver | Kind::Digraph) => {
                return Err(QuiverError::BadReflection("directed quiver with reflection".into()))
            }
            (Some(r), Kind::Undirected) => {
                if r.len() != edges.len() {
                    return Err(QuiverError::BadReflection("length mismatch".into()));
                }
                for (i, &j) in r.iter().enumerate() {
                    if j >= edges.len() || r[j] != i {
                        return Err(QuiverError::BadReflection(format!("not an involution at `{}`", edges[i].id)));
                    }
                    if j == i && !edges[i].is_loop() {
                        return Err(QuiverError::BadReflection(format!("fixed point `{}`", edges[i].id)));
                    }
                    if edges[j].source != edges[i].target {
                        return Err(QuiverError::BadReflection(format!("s(r(e)) != t(e) at `{}`", edges[i].id)));
                    }
                }
            }
            (None, _) => {}
        }
        Ok(Quiver {
            name: name.to_string(),
            kind,
            vertices,
            edges,
            reflection,
            vertex_index,
            edge_index,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex(&self, id: &str) -> Option<usize> {
        self.vertex_index.get(id).copied()
    }

    pub fn edge(&self, id: &str) -> Option<usize> {
        self.edge_index.get(id).copied()
    }

    pub fn require_vertex(&self, id: &str) -> Result<usize> {
        self.vertex(id).ok_or_else(|| QuiverError::UnknownVertex(id.to_string()))
    }

    pub fn require_edge(&self, id: &str) -> Result<usize> {
        self.edge(id).ok_or_else(|| QuiverError::UnknownEdge(id.to_string()))
    }

    pub fn reflection(&self) -> Option<&[usize]> {
        self.reflection.as_deref()
    }

    /// Partner dart of `e` under the reflection (`e` itself for directed kinds).
    pub fn reflect(&self, e: usize) -> usize {
        self.reflection.as_ref().map_or(e, |r| r[e])
    }

    /// Name of the undirected edge containing dart `e`.
    pub fn orbit_label(&self, e: usize) -> String {
        let id = &self.edges[e].id;
        let Some(r) = &self.reflection else {
            return id.clone();
        };
        let partner = &self.edges[r[e]].id;
        if let (Some(a), Some(b)) = (strip_sign(id), strip_sign(partner)) {
            if a == b && id != partner {
                return a.to_string();
            }
        }
        if id <= partner { id.clone() } else { partner.clone() }
    }

    /// One representative dart per undirected edge, in dart order. For
    /// directed kinds, every edge.
    pub fn orbit_representatives(&self) -> Vec<usize> {
        match &self.reflection {
            None => (0..self.edges.len()).collect(),
            Some(r) => (0..self.edges.len()).filter(|&e| e <= r[e]).collect(),
        }
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.target == v).count()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.source == v).count()
    }

    /// Number of connected components of the geometric realization.
    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::new(self.vertices.len());
        for e in &self.edges {
            uf.union(e.source, e.target);
        }
        uf.count()
    }

    /// Component index per vertex, numbered by first appearance.
    pub fn component_labels(&self) -> Vec<usize> {
        let mut uf = UnionFind::new(self.vertices.len());
        for e in &self.edges {
            uf.union(e.source, e.target);
        }
        let mut label = HashMap::new();
        (0..self.vertices.len())
            .map(|v| {
                let root = uf.find(v);
                let next = label.len();
                *label.entry(root).or_insert(next)
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// First Betti number of the geometric realization.
    pub fn genus(&self) -> usize {
        let edges = self.orbit_representatives().len();
        edges + self.component_count() - self.vertices.len()
    }

    /// Subquiver with the same vertices and the given edges (by index).
    pub fn spanning_subquiver(&self, edges: &[usize]) -> Quiver {
        self.subquiver(&(0..self.vertices.len()).collect::<Vec<_>>(), edges)
    }

    /// Subquiver spanned by the given edges: its vertices are their endpoints.
    pub fn edge_subquiver(&self, edges: &[usize]) -> Quiver {
        let mut keep = vec![false; self.vertices.len()];
        for &e in edges {
            keep[self.edges[e].source] = true;
            keep[self.edges[e].target] = true;
        }
        let vs: Vec<usize> = (0..self.vertices.len()).filter(|&v| keep[v]).collect();
        self.subquiver(&vs, edges)
    }

    /// Subquiver on the given vertex and edge indices (edges sorted into the
    /// parent's order). Undirected graphs keep darts whose partner is kept.
    pub fn subquiver(&self, vertices: &[usize], edges: &[usize]) -> Quiver {
        let mut vmap = vec![usize::MAX; self.vertices.len()];
        let mut vs = vertices.to_vec();
        vs.sort_unstable();
        vs.dedup();
        for (i, &v) in vs.iter().enumerate() {
            vmap[v] = i;
        }
        let mut es = edges.to_vec();
        es.sort_unstable();
        es.dedup();
        let kept: HashSet<usize> = es.iter().copied().collect();
        let mut emap = vec![usize::MAX; self.edges.len()];
        let mut new_edges = Vec::with_capacity(es.len());
        for &e in &es {
            let edge = &self.edges[e];
            debug_assert!(vmap[edge.source] != usize::MAX && vmap[edge.target] != usize::MAX);
            emap[e] = new_edges.len();
            new_edges.push(Edge {
                id: edge.id.clone(),
                source: vmap[edge.source],
                target: vmap[edge.target],
            });
        }
        let (kind, reflection) = match &self.reflection {
            Some(r) if es.iter().all(|e| kept.contains(&r[*e])) => {
                (Kind::Undirected, Some(es.iter().map(|&e| emap[r[e]]).collect()))
            }
            Some(_) => (Kind::Quiver, None),
            None => (self.kind, None),
        };
        Quiver::from_parts(
            kind,
            &self.name,
            vs.iter().map(|&v| self.vertices[v].clone()).collect(),
            new_edges,
            reflection,
        )
        .expect("subquiver of a valid quiver is valid")
    }

    /// Disjoint union; identifiers are prefixed with `a:` and `b:`.
    pub fn disjoint_union(&self, other: &Quiver) -> Result<Quiver> {
        let kind = match (self.kind, other.kind) {
            (a, b) if a == b => a,
            (Kind::Undirected, _) | (_, Kind::Undirected) => return Err(QuiverError::NotDirected),
            _ => Kind::Quiver,
        };
        let mut vertices = Vec::with_capacity(self.vertex_count() + other.vertex_count());
        let mut edges = Vec::with_capacity(self.edge_count() + other.edge_count());
        let mut reflection = Vec::new();
        for (prefix, g) in [("a:", self), ("b:", other)] {
            let (voff, eoff) = (vertices.len(), edges.len());
            vertices.extend(g.vertices.iter().map(|v| format!("{prefix}{v}")));
            edges.extend(g.edges.iter().map(|e| Edge {
                id: format!("{prefix}{}", e.id),
                source: e.source + voff,
                target: e.target + voff,
            }));
            if let Some(r) = &g.reflection {
                reflection.extend(r.iter().map(|&j| j + eoff));
            }
        }
        let reflection = (kind == Kind::Undirected).then_some(reflection);
        let name = format!("{}+{}", self.name, other.name);
        Quiver::from_parts(kind, &name, vertices, edges, reflection)
    }

    /// The same structure re-tagged as a plain quiver (reflection dropped).
    pub fn as_quiver(&self) -> Quiver {
        let mut q = self.clone();
        q.kind = Kind::Quiver;
        q.reflection = None;
        q
    }

    /// Re-tags a quiver as a digraph when it has no parallel edges.
    pub fn into_digraph(self) -> Result<Quiver> {
        Quiver::from_parts(Kind::Digraph, &self.name, self.vertices, self.edges, None)
    }

    /// `Digraph` when the edge set has no parallel edges, `Quiver` otherwise.
    pub(crate) fn narrowest_directed_kind(edges: &[Edge]) -> Kind {
        let mut seen = HashSet::with_capacity(edges.len());
        if edges.iter().all(|e| seen.insert((e.source, e.target))) {
            Kind::Digraph
        } else {
            Kind::Quiver
        }
    }
}

fn strip_sign(id: &str) -> Option<&str> {
    id.strip_suffix('+').or_else(|| id.strip_suffix('-'))
}

/// Union-find over `0..n` with path halving.
#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    components: usize,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), components: n }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        self.components -= 1;
        true
    }

    pub(crate) fn count(&self) -> usize {
        self.components
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digraph_rejects_parallel_edges() {
        let err = Quiver::digraph("g", &["a", "b"], &[("e0", "a", "b"), ("e1", "a", "b")]).unwrap_err();
        assert_eq!(err, QuiverError::ParallelEdge("a".into(), "b".into()));
        assert!(Quiver::new(Kind::Quiver, "g", &["a", "b"], &[("e0", "a", "b"), ("e1", "a", "b")]).is_ok());
    }

    #[test]
    fn duplicate_and_unknown_ids() {
        assert!(matches!(
            Quiver::digraph("g", &["a", "a"], &[]),
            Err(QuiverError::DuplicateVertex(_))
        ));
        assert!(matches!(
            Quiver::digraph("g", &["a"], &[("e", "a", "z")]),
            Err(QuiverError::UnknownVertex(_))
        ));
        assert!(matches!(
            Quiver::digraph("g", &["a", "b"], &[("e", "a", "b"), ("e", "b", "a")]),
            Err(QuiverError::DuplicateEdge(_))
        ));
    }

    #[test]
    fn undirected_darts_and_orbits() {
        let g = Quiver::new(Kind::Undirected, "g", &["a", "b"], &[("x", "a", "b")]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.edges()[0].id, "x+");
        assert_eq!(g.reflect(0), 1);
        assert_eq!(g.orbit_label(1), "x");
        assert_eq!(g.orbit_representatives(), vec![0]);
        assert_eq!(g.genus(), 0);
    }

    #[test]
    fn reflection_must_swap_endpoints() {
        let edges = vec![
            Edge { id: "x".into(), source: 0, target: 1 },
            Edge { id: "y".into(), source: 0, target: 1 },
        ];
        let err = Quiver::from_parts(Kind::Undirected, "g", vec!["a".into(), "b".into()], edges, Some(vec![1, 0]));
        assert!(matches!(err, Err(QuiverError::BadReflection(_))));
    }

    #[test]
    fn genus_counts_loops_and_components() {
        let g = Quiver::new(
            Kind::Quiver,
            "g",
            &["a", "b", "c"],
            &[("l", "a", "a"), ("e0", "a", "b"), ("e1", "b", "a")],
        )
        .unwrap();
        assert_eq!(g.component_count(), 2);
        assert_eq!(g.genus(), 2);
    }

    #[test]
    fn edge_subquiver_keeps_endpoints_only() {
        let g = Quiver::digraph("g", &["a", "b", "c"], &[("e0", "a", "b"), ("e1", "b", "c")]).unwrap();
        let h = g.edge_subquiver(&[1]);
        assert_eq!(h.vertices(), &["b".to_string(), "c".to_string()]);
        assert_eq!(h.edges()[0].source, 0);
    }
}
