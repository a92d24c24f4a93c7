//! Blow-ups of digraphs and the dynamical-module decomposition.
//!
//! Blowing up a vertex `v` with positive in- and out-degree replaces it by
//! `v.in`, which receives every edge that ended at `v`, and `v.out`, which
//! emits every edge that started at `v`. Edge identifiers are preserved, so
//! the canonical edge bijection is the identity on ids.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

use crate::complex::{
    canonical_iso_check, identity_bijection, join, matching_complex, multipath_complex, ComplexError,
    SimplicialComplex,
};
use crate::construct::underlying_graph;
use crate::predicates::{has_oriented_cycle, unstable_mask};
use crate::quiver::{Edge, Kind, Quiver, QuiverError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlowupError {
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("input has an oriented cycle")]
    HasOrientedCycle,
    #[error("input is disconnected")]
    Disconnected,
    #[error("self-loop at `{0}` cannot be blown up")]
    SelfLoop(String),
    #[error("blow-up is defined for directed inputs")]
    NotDirected,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VertexTrace {
    Kept(String),
    Split { incoming: String, outgoing: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowupResult {
    pub result: Quiver,
    /// Input edge id to output edge id, in input edge order.
    pub edge_bijection: Vec<(String, String)>,
    /// Fate of each input vertex, in input vertex order.
    pub vertex_trace: Vec<(String, VertexTrace)>,
}

impl BlowupResult {
    pub fn bijection_map(&self) -> HashMap<String, String> {
        self.edge_bijection.iter().cloned().collect()
    }
}

impl fmt::Display for BlowupResult {
    /// The result graph followed by one `b <input-edge> <output-edge>` line
    /// per input edge.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::format::write_graph(&self.result))?;
        for (a, b) in &self.edge_bijection {
            writeln!(f, "b {a} {b}")?;
        }
        Ok(())
    }
}

fn split_names(v: &str) -> (String, String) {
    (format!("{v}.in"), format!("{v}.out"))
}

/// Blow-up at a single vertex. Vertices with zero in- or out-degree are left
/// untouched.
pub fn blow_up_at(g: &Quiver, v: &str) -> Result<BlowupResult, BlowupError> {
    if !g.kind().is_directed() {
        return Err(BlowupError::NotDirected);
    }
    let vi = g.require_vertex(v)?;
    let identity_edges = g.edges().iter().map(|e| (e.id.clone(), e.id.clone())).collect();
    let mut trace: Vec<(String, VertexTrace)> =
        g.vertices().iter().map(|u| (u.clone(), VertexTrace::Kept(u.clone()))).collect();
    if g.in_degree(vi) == 0 || g.out_degree(vi) == 0 {
        return Ok(BlowupResult { result: g.clone(), edge_bijection: identity_edges, vertex_trace: trace });
    }
    if g.edges().iter().any(|e| e.is_loop() && e.source == vi) {
        return Err(BlowupError::SelfLoop(v.to_string()));
    }
    let (vin, vout) = split_names(v);
    if g.vertex(&vin).is_some() || g.vertex(&vout).is_some() {
        return Err(QuiverError::DuplicateVertex(if g.vertex(&vin).is_some() { vin } else { vout }).into());
    }
    // v.in takes v's slot, v.out goes right after it
    let shift = |u: usize| if u > vi { u + 1 } else { u };
    let mut vertices = Vec::with_capacity(g.vertex_count() + 1);
    for (u, name) in g.vertices().iter().enumerate() {
        if u == vi {
            vertices.push(vin.clone());
            vertices.push(vout.clone());
        } else {
            vertices.push(name.clone());
        }
    }
    let edges: Vec<Edge> = g
        .edges()
        .iter()
        .map(|e| Edge {
            id: e.id.clone(),
            source: if e.source == vi { vi + 1 } else { shift(e.source) },
            target: if e.target == vi { vi } else { shift(e.target) },
        })
        .collect();
    let kind = if g.kind() == Kind::Digraph { Kind::Digraph } else { Kind::Quiver };
    let result = Quiver::from_parts(kind, g.name(), vertices, edges, None)?;
    trace[vi].1 = VertexTrace::Split { incoming: vin, outgoing: vout };
    Ok(BlowupResult { result, edge_bijection: identity_edges, vertex_trace: trace })
}

/// Blow-up at every vertex, in vertex order.
pub fn blow_up(g: &Quiver) -> Result<BlowupResult, BlowupError> {
    let order: Vec<String> = g.vertices().to_vec();
    blow_up_in_order(g, &order)
}

/// Blow-up at every vertex in the given order (which must list each vertex
/// of `g` once). The result does not depend on the order.
pub fn blow_up_in_order(g: &Quiver, order: &[String]) -> Result<BlowupResult, BlowupError> {
    let mut current = g.clone();
    let mut trace: BTreeMap<usize, VertexTrace> = BTreeMap::new();
    for v in order {
        let vi = g.require_vertex(v)?;
        let step = blow_up_at(&current, v)?;
        let fate = step
            .vertex_trace
            .into_iter()
            .find(|(u, _)| u == v)
            .map(|(_, t)| t)
            .expect("vertex present");
        trace.insert(vi, fate);
        current = step.result;
    }
    let vertex_trace = g
        .vertices()
        .iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), trace.remove(&i).unwrap_or_else(|| VertexTrace::Kept(v.clone()))))
        .collect();
    let edge_bijection = g.edges().iter().map(|e| (e.id.clone(), e.id.clone())).collect();
    Ok(BlowupResult { result: current, edge_bijection, vertex_trace })
}

/// Checks that the multipath complex of `g` agrees with the matching complex
/// of the underlying graph of its blow-up, under the blow-up edge bijection.
pub fn verify_blowup_theorem(g: &Quiver) -> Result<bool, BlowupError> {
    if has_oriented_cycle(g) {
        return Err(BlowupError::HasOrientedCycle);
    }
    let b = blow_up(g)?;
    let x = multipath_complex(g)?;
    let m = matching_complex(&underlying_graph(&b.result))?;
    let map = b.bijection_map();
    let bijection: HashMap<String, String> =
        x.labels().iter().map(|l| (l.clone(), map[l].clone())).collect();
    Ok(canonical_iso_check(&x, &m, &bijection)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynamicalModule {
    pub module: Quiver,
    /// Vertices shared with the rest of the graph.
    pub boundary: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynamicalDecomposition {
    pub modules: Vec<DynamicalModule>,
}

/// Decomposition of a connected digraph without oriented cycles into
/// dynamical modules, read off from the components of its blow-up.
pub fn dynamical_modules(g: &Quiver) -> Result<DynamicalDecomposition, BlowupError> {
    if has_oriented_cycle(g) {
        return Err(BlowupError::HasOrientedCycle);
    }
    if !g.is_connected() {
        return Err(BlowupError::Disconnected);
    }
    let b = blow_up(g)?;
    let comp = b.result.component_labels();
    // blow-up edges carry the input ids, so edge index i corresponds to i
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, e) in b.result.edges().iter().enumerate() {
        groups.entry(comp[e.source]).or_default().push(i);
    }
    let modules = groups
        .into_values()
        .enumerate()
        .map(|(k, edges)| {
            let module = g.edge_subquiver(&edges).with_name(&format!("{}.M{}", g.name(), k + 1));
            let boundary = boundary_of(g, &edges);
            DynamicalModule { module, boundary }
        })
        .collect();
    Ok(DynamicalDecomposition { modules })
}

/// `V(R) ∩ V(complement of R)` for the subgraph spanned by `edges`.
pub fn boundary_of(g: &Quiver, edges: &[usize]) -> Vec<String> {
    let mut inside = vec![false; g.edge_count()];
    for &e in edges {
        inside[e] = true;
    }
    let (mut in_r, mut in_c) = (vec![false; g.vertex_count()], vec![false; g.vertex_count()]);
    for (i, e) in g.edges().iter().enumerate() {
        let side = if inside[i] { &mut in_r } else { &mut in_c };
        side[e.source] = true;
        side[e.target] = true;
    }
    (0..g.vertex_count())
        .filter(|&v| in_r[v] && in_c[v])
        .map(|v| g.vertices()[v].clone())
        .collect()
}

/// A module is stable when none of its non-boundary vertices is unstable.
pub fn is_stable_module(m: &DynamicalModule) -> bool {
    let unstable = unstable_mask(&m.module);
    m.module
        .vertices()
        .iter()
        .zip(unstable)
        .all(|(v, bad)| !bad || m.boundary.contains(v))
}

/// Checks `X(g) ≅ X(M_1) * ... * X(M_k)` with edge labels kept.
pub fn verify_module_join(g: &Quiver) -> Result<bool, BlowupError> {
    let dec = dynamical_modules(g)?;
    let mut joined = SimplicialComplex::empty();
    for m in &dec.modules {
        joined = join(&joined, &multipath_complex(&m.module)?, false)?;
    }
    let x = multipath_complex(g)?;
    if x.labels() != joined.labels() {
        return Ok(false);
    }
    Ok(canonical_iso_check(&x, &joined, &identity_bijection(&x))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::Family;
    use crate::predicates::is_alternating;

    fn fam(f: Family) -> Quiver {
        f.build().unwrap()
    }

    fn sorted_edges(g: &Quiver) -> Vec<(String, String, String)> {
        let mut v: Vec<_> = g
            .edges()
            .iter()
            .map(|e| (e.id.clone(), g.vertices()[e.source].clone(), g.vertices()[e.target].clone()))
            .collect();
        v.sort();
        v
    }

    #[test]
    fn dandelion_splits_into_two_stars() {
        let d = fam(Family::D(3, 2));
        let b = blow_up_at(&d, "v0").unwrap();
        assert_eq!(b.result.component_count(), 2);
        assert_eq!(b.result.in_degree(b.result.vertex("v0.in").unwrap()), 3);
        assert_eq!(b.result.out_degree(b.result.vertex("v0.out").unwrap()), 2);
        assert!(is_alternating(&b.result));
    }

    #[test]
    fn sources_are_untouched() {
        let i3 = fam(Family::I(3));
        let b = blow_up_at(&i3, "v0").unwrap();
        assert_eq!(b.result, i3);
        assert_eq!(b.vertex_trace[0].1, VertexTrace::Kept("v0".into()));
        assert!(matches!(blow_up_at(&i3, "zz"), Err(BlowupError::Quiver(QuiverError::UnknownVertex(_)))));
    }

    #[test]
    fn tournament_single_split() {
        let t = fam(Family::T(3));
        let b = blow_up_at(&t, "v1").unwrap();
        assert_eq!(b.result.vertex_count(), 5);
        assert_eq!(
            sorted_edges(&b.result),
            vec![
                ("e0".into(), "v0".into(), "v1.in".into()),
                ("e1".into(), "v0".into(), "v2".into()),
                ("e2".into(), "v0".into(), "v3".into()),
                ("e3".into(), "v1.out".into(), "v2".into()),
                ("e4".into(), "v1.out".into(), "v3".into()),
                ("e5".into(), "v2".into(), "v3".into()),
            ]
        );
    }

    #[test]
    fn full_blowups() {
        let b = blow_up(&fam(Family::I(4))).unwrap();
        assert_eq!(b.result.component_count(), 4);
        assert_eq!(b.result.edge_count(), 4);
        assert!(b.result.edges().iter().all(|e| {
            let r = &b.result;
            r.in_degree(e.source) == 0 && r.out_degree(e.target) == 0
        }));
        let a = fam(Family::A(5));
        assert_eq!(blow_up(&a).unwrap().result, a);
    }

    #[test]
    fn tournament_blowup_is_half_graph() {
        for n in 1..=5 {
            let b = blow_up(&fam(Family::T(n))).unwrap();
            let half = fam(Family::B(n));
            // p_i <-> out-copy of v_{i-1}, q_j <-> in-copy of v_j
            let rename = |v: &str| -> String {
                let base = v.trim_end_matches(".in").trim_end_matches(".out");
                let k: usize = base[1..].parse().unwrap();
                if v.ends_with(".out") || (k == 0) {
                    format!("p{}", k + 1)
                } else {
                    format!("q{k}")
                }
            };
            let mut got: Vec<(String, String)> = b
                .result
                .edges()
                .iter()
                .map(|e| (rename(&b.result.vertices()[e.source]), rename(&b.result.vertices()[e.target])))
                .collect();
            got.sort();
            let mut want: Vec<(String, String)> = half
                .orbit_representatives()
                .into_iter()
                .map(|e| (half.vertices()[half.edges()[e].source].clone(), half.vertices()[half.edges()[e].target].clone()))
                .collect();
            want.sort();
            assert_eq!(got, want, "n = {n}");
        }
    }

    #[test]
    fn theorem_examples() {
        assert!(verify_blowup_theorem(&fam(Family::T(3))).unwrap());
        assert!(verify_blowup_theorem(&fam(Family::D(3, 2))).unwrap());
        assert_eq!(verify_blowup_theorem(&fam(Family::P(3))).unwrap_err(), BlowupError::HasOrientedCycle);
    }

    #[test]
    fn dandelion_modules() {
        let dec = dynamical_modules(&fam(Family::D(3, 2))).unwrap();
        assert_eq!(dec.modules.len(), 2);
        let mut vs: Vec<Vec<String>> = dec.modules.iter().map(|m| m.module.vertices().to_vec()).collect();
        vs.sort();
        assert_eq!(vs[0], vec!["v0", "w1", "w2", "w3"]);
        assert_eq!(vs[1], vec!["v0", "x1", "x2"]);
        assert!(dec.modules.iter().all(|m| m.boundary == vec!["v0".to_string()]));
        assert!(dec.modules.iter().all(is_stable_module));
        assert!(verify_module_join(&fam(Family::D(3, 2))).unwrap());
    }

    #[test]
    fn alternating_single_module() {
        let a = fam(Family::A(5));
        let dec = dynamical_modules(&a).unwrap();
        assert_eq!(dec.modules.len(), 1);
        assert!(dec.modules[0].boundary.is_empty());
        assert!(verify_module_join(&a).unwrap());
    }

    #[test]
    fn module_errors() {
        assert_eq!(dynamical_modules(&fam(Family::P(3))).unwrap_err(), BlowupError::HasOrientedCycle);
        let two = Quiver::digraph("g", &["a", "b", "c", "d"], &[("e0", "a", "b"), ("e1", "c", "d")]).unwrap();
        assert_eq!(dynamical_modules(&two).unwrap_err(), BlowupError::Disconnected);
    }

    #[test]
    fn serialization_trailer() {
        let b = blow_up(&fam(Family::I(2))).unwrap();
        let text = b.to_string();
        assert!(text.contains("v v1.in\nv v1.out\n"));
        assert!(text.ends_with("b e0 e0\nb e1 e1\n"));
    }
}
