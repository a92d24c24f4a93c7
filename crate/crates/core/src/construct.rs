//! Constructions between quivers and undirected graphs, and cones.

use crate::quiver::{Edge, Kind, Quiver, QuiverError, Result};

/// The underlying undirected graph: each directed edge `e` becomes the
/// reflection pair `e+`, `e-`. Undirected inputs are returned unchanged.
pub fn underlying_graph(g: &Quiver) -> Quiver {
    if g.kind() == Kind::Undirected {
        return g.clone();
    }
    let mut edges = Vec::with_capacity(2 * g.edge_count());
    let mut reflection = Vec::with_capacity(2 * g.edge_count());
    for (i, e) in g.edges().iter().enumerate() {
        edges.push(Edge { id: format!("{}+", e.id), source: e.source, target: e.target });
        edges.push(Edge { id: format!("{}-", e.id), source: e.target, target: e.source });
        reflection.push(2 * i + 1);
        reflection.push(2 * i);
    }
    Quiver::from_parts(Kind::Undirected, g.name(), g.vertices().to_vec(), edges, Some(reflection))
        .expect("underlying graph of a valid quiver is valid")
}

/// The doubled quiver: every undirected edge becomes its two darts.
pub fn doubled_quiver(g: &Quiver) -> Result<Quiver> {
    if g.kind() != Kind::Undirected {
        return Err(QuiverError::NotUndirected);
    }
    Ok(g.as_quiver())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConeDirection {
    /// Spoke from the base vertex to the apex.
    TowardApex,
    /// Spoke from the apex to the base vertex.
    FromApex,
}

#[derive(Debug, Clone)]
pub struct ConeSpec {
    pub base: Quiver,
    pub apex: String,
    /// One label per base vertex, in vertex order.
    pub orientation: Vec<ConeDirection>,
}

impl ConeSpec {
    pub fn uniform(base: Quiver, apex: &str, dir: ConeDirection) -> Self {
        let orientation = vec![dir; base.vertex_count()];
        ConeSpec { base, apex: apex.to_string(), orientation }
    }
}

/// Adds the apex and one spoke per base vertex. Spokes are named `e<k>`
/// continuing after the base edges, skipping ids already in use.
pub fn cone(spec: &ConeSpec) -> Result<Quiver> {
    let base = &spec.base;
    if !base.kind().is_directed() {
        return Err(QuiverError::NotDirected);
    }
    if base.vertex(&spec.apex).is_some() {
        return Err(QuiverError::ApexCollision(spec.apex.clone()));
    }
    if spec.orientation.len() != base.vertex_count() {
        return Err(QuiverError::IncompleteOrientation);
    }
    let apex = base.vertex_count();
    let mut vertices = base.vertices().to_vec();
    vertices.push(spec.apex.clone());
    let mut edges = base.edges().to_vec();
    let mut next = base.edge_count();
    for (v, dir) in spec.orientation.iter().enumerate() {
        while base.edge(&format!("e{next}")).is_some() {
            next += 1;
        }
        let (source, target) = match dir {
            ConeDirection::TowardApex => (v, apex),
            ConeDirection::FromApex => (apex, v),
        };
        edges.push(Edge { id: format!("e{next}"), source, target });
        next += 1;
    }
    let name = format!("cone({})", base.name());
    Quiver::from_parts(base.kind(), &name, vertices, edges, None)
}
