//! Minor morphisms: structured maps realizing contractions and deletions.

use std::fmt;

use thiserror::Error;

use crate::quiver::{Edge, Kind, Quiver, QuiverError, Result, UnionFind};

/// Image of a vertex or an edge under a minor morphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Image {
    Vertex(usize),
    Edge(usize),
    /// The base point `⋆`; edges sent here are deleted.
    Star,
}

/// The first violated condition found by [`MinorMorphism::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MinorViolation {
    #[error("vertex map not onto the codomain vertices: {0}")]
    VertexSurjection(String),
    #[error("edge image incompatible with endpoints: {0}")]
    EdgeEndpoints(String),
    #[error("edge-preimage bijection violated: {0}")]
    EdgeBijection(String),
    #[error("fiber not a directed tree: {0}")]
    FiberNotTree(String),
    #[error("reflection not preserved: {0}")]
    Reflection(String),
    #[error("connectivity not preserved")]
    Disconnecting,
    #[error("map sizes do not match the domain")]
    Shape,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComposeError {
    #[error("codomain of the first morphism is not the domain of the second")]
    DomainMismatch,
}

/// A map `V(G') ⊔ E(G') ⊔ {⋆} → V(G) ⊔ E(G) ⊔ {⋆}`; `⋆ ↦ ⋆` is implicit.
///
/// Construction does not validate; call [`MinorMorphism::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorMorphism {
    domain: Quiver,
    codomain: Quiver,
    vertex_map: Vec<Image>,
    edge_map: Vec<Image>,
}

impl MinorMorphism {
    pub fn new(domain: Quiver, codomain: Quiver, vertex_map: Vec<Image>, edge_map: Vec<Image>) -> Self {
        MinorMorphism { domain, codomain, vertex_map, edge_map }
    }

    pub fn identity(g: &Quiver) -> Self {
        MinorMorphism {
            domain: g.clone(),
            codomain: g.clone(),
            vertex_map: (0..g.vertex_count()).map(Image::Vertex).collect(),
            edge_map: (0..g.edge_count()).map(Image::Edge).collect(),
        }
    }

    pub fn domain(&self) -> &Quiver {
        &self.domain
    }

    pub fn codomain(&self) -> &Quiver {
        &self.codomain
    }

    pub fn vertex_image(&self, v: usize) -> Image {
        self.vertex_map[v]
    }

    pub fn edge_image(&self, e: usize) -> Image {
        self.edge_map[e]
    }

    pub fn vertex_map(&self) -> &[Image] {
        &self.vertex_map
    }

    pub fn edge_map(&self) -> &[Image] {
        &self.edge_map
    }

    /// True if no edge is deleted.
    pub fn is_contraction(&self) -> bool {
        !self.edge_map.contains(&Image::Star)
    }

    /// Vertex image as an index; panics on an invalid morphism.
    pub fn map_vertex(&self, v: usize) -> usize {
        match self.vertex_map[v] {
            Image::Vertex(u) => u,
            other => panic!("vertex {v} maps to {other:?}"),
        }
    }

    /// The unique domain edge mapped onto each codomain edge.
    pub fn edge_preimages(&self) -> Vec<usize> {
        let mut pre = vec![usize::MAX; self.codomain.edge_count()];
        for (e, img) in self.edge_map.iter().enumerate() {
            if let Image::Edge(f) = *img {
                pre[f] = e;
            }
        }
        pre
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// Checks the four defining conditions in order and reports the first
    /// violation. Connectivity is not required; see [`Self::validate_strict`].
    pub fn validate(&self) -> std::result::Result<(), MinorViolation> {
        let (dom, cod) = (&self.domain, &self.codomain);
        if self.vertex_map.len() != dom.vertex_count() || self.edge_map.len() != dom.edge_count() {
            return Err(MinorViolation::Shape);
        }

        // φ(V(G')) = V(G)
        let mut hit = vec![false; cod.vertex_count()];
        for (v, img) in self.vertex_map.iter().enumerate() {
            match *img {
                Image::Vertex(u) if u < cod.vertex_count() => hit[u] = true,
                other => {
                    return Err(MinorViolation::VertexSurjection(format!(
                        "`{}` maps to {other:?}",
                        dom.vertices()[v]
                    )))
                }
            }
        }
        if let Some(u) = hit.iter().position(|h| !h) {
            return Err(MinorViolation::VertexSurjection(format!(
                "`{}` has no preimage",
                cod.vertices()[u]
            )));
        }

        // edges go to ⋆, to the common image of both endpoints, or to a
        // compatible edge
        for (e, img) in self.edge_map.iter().enumerate() {
            let edge = &dom.edges()[e];
            let (s, t) = (self.map_vertex(edge.source), self.map_vertex(edge.target));
            let ok = match *img {
                Image::Star => true,
                Image::Vertex(u) => u == s && u == t,
                Image::Edge(f) => {
                    f < cod.edge_count() && cod.edges()[f].source == s && cod.edges()[f].target == t
                }
            };
            if !ok {
                return Err(MinorViolation::EdgeEndpoints(format!("`{}` maps to {img:?}", edge.id)));
            }
        }

        let mut preimages = vec![0usize; cod.edge_count()];
        for img in &self.edge_map {
            if let Image::Edge(f) = *img {
                preimages[f] += 1;
            }
        }
        if let Some(f) = preimages.iter().position(|&c| c != 1) {
            return Err(MinorViolation::EdgeBijection(format!(
                "`{}` has {} preimages",
                cod.edges()[f].id,
                preimages[f]
            )));
        }

        // every vertex fiber is a (directed) tree
        let mut uf = UnionFind::new(dom.vertex_count());
        let mut fiber_edges = vec![0usize; cod.vertex_count()];
        let mut fiber_vertices = vec![0usize; cod.vertex_count()];
        for v in 0..dom.vertex_count() {
            fiber_vertices[self.map_vertex(v)] += 1;
        }
        for e in dom.orbit_representatives() {
            if let Image::Vertex(u) = self.edge_map[e] {
                fiber_edges[u] += 1;
                let edge = &dom.edges()[e];
                if !uf.union(edge.source, edge.target) {
                    return Err(MinorViolation::FiberNotTree(format!(
                        "`{}` closes a cycle over `{}`",
                        edge.id,
                        cod.vertices()[u]
                    )));
                }
            }
        }
        for u in 0..cod.vertex_count() {
            if fiber_edges[u] + 1 != fiber_vertices[u] {
                return Err(MinorViolation::FiberNotTree(format!(
                    "fiber over `{}` is disconnected",
                    cod.vertices()[u]
                )));
            }
        }

        if let (Some(rd), Some(rc)) = (dom.reflection(), cod.reflection()) {
            for (e, img) in self.edge_map.iter().enumerate() {
                let partner = self.edge_map[rd[e]];
                let expected = match *img {
                    Image::Edge(f) => Image::Edge(rc[f]),
                    other => other,
                };
                if partner != expected {
                    return Err(MinorViolation::Reflection(dom.edges()[e].id.clone()));
                }
            }
        }
        Ok(())
    }

    /// [`Self::validate`] plus the requirement that the component count is
    /// preserved (deletions must not disconnect).
    pub fn validate_strict(&self) -> std::result::Result<(), MinorViolation> {
        self.validate()?;
        if self.codomain.component_count() != self.domain.component_count() {
            return Err(MinorViolation::Disconnecting);
        }
        Ok(())
    }

    /// `next ∘ self`: apply `self` first, then `next`.
    pub fn then(&self, next: &MinorMorphism) -> std::result::Result<MinorMorphism, ComposeError> {
        compose_minor(self, next)
    }
}

/// Set-composition `g ∘ f`, requiring `codomain(f) = domain(g)`.
pub fn compose_minor(f: &MinorMorphism, g: &MinorMorphism) -> std::result::Result<MinorMorphism, ComposeError> {
    if f.codomain != g.domain {
        return Err(ComposeError::DomainMismatch);
    }
    let through = |img: Image| match img {
        Image::Vertex(u) => g.vertex_map[u],
        Image::Edge(e) => g.edge_map[e],
        Image::Star => Image::Star,
    };
    Ok(MinorMorphism {
        domain: f.domain.clone(),
        codomain: g.codomain.clone(),
        vertex_map: f.vertex_map.iter().map(|&i| through(i)).collect(),
        edge_map: f.edge_map.iter().map(|&i| through(i)).collect(),
    })
}

/// Contracts edge `id` (and its reflection, for undirected graphs). The
/// merged vertex keeps the lexicographically smaller endpoint id.
pub fn contract_edge(g: &Quiver, id: &str) -> Result<(Quiver, MinorMorphism)> {
    let e = g.require_edge(id)?;
    let edge = &g.edges()[e];
    if edge.is_loop() {
        return Err(QuiverError::SelfLoopContraction(id.to_string()));
    }
    let (a, b) = (edge.source, edge.target);
    let (keep, drop) = if g.vertices()[a] <= g.vertices()[b] { (a, b) } else { (b, a) };

    let mut vertex_new = vec![0usize; g.vertex_count()];
    let mut vertices = Vec::with_capacity(g.vertex_count() - 1);
    for (v, name) in g.vertices().iter().enumerate() {
        if v != drop {
            vertex_new[v] = vertices.len();
            vertices.push(name.clone());
        }
    }
    vertex_new[drop] = vertex_new[keep];

    let removed = [e, g.reflect(e)];
    let (vertex_map, edges, edge_map, reflection) = rebuild(g, &vertex_new, &removed, Image::Vertex(vertex_new[keep]));
    let kind = match g.kind() {
        Kind::Undirected => Kind::Undirected,
        Kind::Digraph => Quiver::narrowest_directed_kind(&edges),
        Kind::Quiver => Kind::Quiver,
    };
    let h = Quiver::from_parts(kind, g.name(), vertices, edges, reflection)?;
    let m = MinorMorphism::new(g.clone(), h.clone(), vertex_map, edge_map);
    Ok((h, m))
}

/// Deletes edge `id` (and its reflection, for undirected graphs).
pub fn delete_edge(g: &Quiver, id: &str) -> Result<(Quiver, MinorMorphism)> {
    let e = g.require_edge(id)?;
    let vertex_new: Vec<usize> = (0..g.vertex_count()).collect();
    let removed = [e, g.reflect(e)];
    let (vertex_map, edges, edge_map, reflection) = rebuild(g, &vertex_new, &removed, Image::Star);
    let h = Quiver::from_parts(g.kind(), g.name(), g.vertices().to_vec(), edges, reflection)?;
    let m = MinorMorphism::new(g.clone(), h.clone(), vertex_map, edge_map);
    Ok((h, m))
}

type Rebuilt = (Vec<Image>, Vec<Edge>, Vec<Image>, Option<Vec<usize>>);

fn rebuild(g: &Quiver, vertex_new: &[usize], removed: &[usize], removed_image: Image) -> Rebuilt {
    let mut edge_new = vec![usize::MAX; g.edge_count()];
    let mut edges = Vec::with_capacity(g.edge_count());
    let mut edge_map = Vec::with_capacity(g.edge_count());
    for (i, edge) in g.edges().iter().enumerate() {
        if removed.contains(&i) {
            edge_map.push(removed_image);
            continue;
        }
        edge_new[i] = edges.len();
        edge_map.push(Image::Edge(edges.len()));
        edges.push(Edge {
            id: edge.id.clone(),
            source: vertex_new[edge.source],
            target: vertex_new[edge.target],
        });
    }
    let reflection = g.reflection().map(|r| {
        (0..g.edge_count())
            .filter(|i| !removed.contains(i))
            .map(|i| edge_new[r[i]])
            .collect()
    });
    let vertex_map = vertex_new.iter().map(|&v| Image::Vertex(v)).collect();
    (vertex_map, edges, edge_map, reflection)
}

impl fmt::Display for MinorMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |img: &Image| match *img {
            Image::Vertex(u) => self.codomain.vertices()[u].clone(),
            Image::Edge(e) => self.codomain.edges()[e].id.clone(),
            Image::Star => "*".to_string(),
        };
        for (v, img) in self.vertex_map.iter().enumerate() {
            writeln!(f, "m {} {}", self.domain.vertices()[v], show(img))?;
        }
        for (e, img) in self.edge_map.iter().enumerate() {
            writeln!(f, "m {} {}", self.domain.edges()[e].id, show(img))?;
        }
        Ok(())
    }
}
