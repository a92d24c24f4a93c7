//! Abstract simplicial complexes with labelled vertices, and the multipath
//! and matching complexes of graphs.
//!
//! Faces are stored in full as sorted vectors of label indices. Labels are
//! kept in natural order (`e2` before `e10`), so the index order and the
//! printed order agree, and faces are listed lexicographically.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;

use thiserror::Error;

use crate::minor::{Image, MinorMorphism};
use crate::quiver::{Kind, Quiver};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("operation requires an undirected graph")]
    NotUndirected,
    #[error("operation requires a directed quiver")]
    NotDirected,
    #[error("label `{0}` occurs in both complexes")]
    LabelClash(String),
    #[error("label map is not a bijection: {0}")]
    NotABijection(String),
    #[error("invalid minor morphism: {0}")]
    InvalidMorphism(String),
    #[error("face {0:?} is missing a subface")]
    NotDownwardClosed(Vec<String>),
}

pub type Face = Vec<u32>;

/// Natural ordering on identifiers: digit runs compare numerically.
pub fn label_cmp(a: &str, b: &str) -> Ordering {
    let (mut x, mut y) = (a.as_bytes(), b.as_bytes());
    loop {
        match (x.first(), y.first()) {
            (None, None) => return a.cmp(b),
            (None, _) => return Ordering::Less,
            (_, None) => return Ordering::Greater,
            (Some(c), Some(d)) if c.is_ascii_digit() && d.is_ascii_digit() => {
                let dx = x.iter().take_while(|c| c.is_ascii_digit()).count();
                let dy = y.iter().take_while(|c| c.is_ascii_digit()).count();
                let (nx, ny) = (trim_zeros(&x[..dx]), trim_zeros(&y[..dy]));
                let ord = nx.len().cmp(&ny.len()).then_with(|| nx.cmp(ny));
                if ord != Ordering::Equal {
                    return ord;
                }
                x = &x[dx..];
                y = &y[dy..];
            }
            (Some(c), Some(d)) => {
                if c != d {
                    return c.cmp(d);
                }
                x = &x[1..];
                y = &y[1..];
            }
        }
    }
}

fn trim_zeros(d: &[u8]) -> &[u8] {
    let k = d.iter().take_while(|&&c| c == b'0').count();
    &d[k..]
}

#[derive(Debug, Clone)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    label_index: HashMap<String, u32>,
    /// `faces[k]` holds the faces with `k` vertices, sorted.
    faces: Vec<Vec<Face>>,
    index: HashMap<Face, usize>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.faces == other.faces
    }
}

impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    /// The complex `{∅}`.
    pub fn empty() -> Self {
        Self::from_sorted(Vec::new(), vec![vec![Vec::new()]])
    }

    /// Builds the complex generated by `faces` (downward closure is taken).
    pub fn from_faces<S: AsRef<str>>(faces: &[Vec<S>]) -> Self {
        let mut labels: Vec<String> = faces
            .iter()
            .flatten()
            .map(|l| l.as_ref().to_string())
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        labels.sort_by(|a, b| label_cmp(a, b));
        let index: HashMap<&str, u32> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i as u32)).collect();
        let mut all: HashSet<Face> = HashSet::new();
        all.insert(Vec::new());
        for f in faces {
            let mut face: Face = f.iter().map(|l| index[l.as_ref()]).collect();
            face.sort_unstable();
            face.dedup();
            add_subsets(&face, &mut all);
        }
        Self::from_face_set(labels, all)
    }

    /// Builds from the full face list, checking downward closure and that
    /// every label is a vertex.
    pub fn from_all_faces<S: AsRef<str>>(faces: &[Vec<S>]) -> Result<Self, ComplexError> {
        let c = Self::from_faces(faces);
        let given: HashSet<Vec<String>> = faces
            .iter()
            .map(|f| c.sorted_labels(f.iter().map(|s| s.as_ref().to_string()).collect()))
            .chain(std::iter::once(Vec::new()))
            .collect();
        for face in c.faces() {
            let named = c.face_labels(face);
            if !given.contains(&named) {
                return Err(ComplexError::NotDownwardClosed(named));
            }
        }
        Ok(c)
    }

    fn sorted_labels(&self, mut v: Vec<String>) -> Vec<String> {
        v.sort_by(|a, b| label_cmp(a, b));
        v.dedup();
        v
    }

    fn from_face_set(labels: Vec<String>, all: HashSet<Face>) -> Self {
        let top = all.iter().map(Vec::len).max().unwrap_or(0);
        let mut faces = vec![Vec::new(); top + 1];
        for f in all {
            faces[f.len()].push(f);
        }
        for layer in &mut faces {
            layer.sort_unstable();
        }
        Self::from_sorted(labels, faces)
    }

    /// `labels` in natural order, `faces[k]` sorted and downward closed.
    fn from_sorted(labels: Vec<String>, faces: Vec<Vec<Face>>) -> Self {
        let label_index = labels.iter().enumerate().map(|(i, l)| (l.clone(), i as u32)).collect();
        let index = faces
            .iter()
            .flat_map(|layer| layer.iter().enumerate().map(|(i, f)| (f.clone(), i)))
            .collect();
        SimplicialComplex { labels, label_index, faces, index }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Option<u32> {
        self.label_index.get(label).copied()
    }

    /// Dimension; `-1` for `{∅}`.
    pub fn dim(&self) -> isize {
        self.faces.len() as isize - 2
    }

    /// Faces with `k` vertices, i.e. of dimension `k - 1`, sorted.
    pub fn faces_of_size(&self, k: usize) -> &[Face] {
        self.faces.get(k).map_or(&[], Vec::as_slice)
    }

    /// Faces of dimension `d` (`d = -1` is the empty face).
    pub fn faces_of_dim(&self, d: isize) -> &[Face] {
        if d < -1 {
            return &[];
        }
        self.faces_of_size((d + 1) as usize)
    }

    /// All faces including `∅`, ordered by size and then lexicographically.
    pub fn faces(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter().flatten()
    }

    /// All faces in lexicographic order of their sorted label tuples.
    pub fn faces_lex(&self) -> Vec<&Face> {
        let mut all: Vec<&Face> = self.faces().collect();
        all.sort_unstable();
        all
    }

    pub fn face_count(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    /// Number of faces per dimension, starting at dimension `-1`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    pub fn contains(&self, face: &[u32]) -> bool {
        self.index.contains_key(face)
    }

    /// Position of `face` within its dimension.
    pub fn position(&self, face: &[u32]) -> Option<usize> {
        self.index.get(face).copied()
    }

    pub fn contains_labels<S: AsRef<str>>(&self, face: &[S]) -> bool {
        self.face_from_labels(face).is_some_and(|f| self.contains(&f))
    }

    /// Sorted index face for the given labels, if all labels are known.
    pub fn face_from_labels<S: AsRef<str>>(&self, face: &[S]) -> Option<Face> {
        let mut f = face
            .iter()
            .map(|l| self.label_index(l.as_ref()))
            .collect::<Option<Face>>()?;
        f.sort_unstable();
        f.dedup();
        (f.len() == face.len()).then_some(f)
    }

    pub fn face_labels(&self, face: &[u32]) -> Vec<String> {
        face.iter().map(|&i| self.labels[i as usize].clone()).collect()
    }

    /// Maximal faces, sorted lexicographically.
    pub fn facets(&self) -> Vec<Face> {
        let mut covered: HashSet<Face> = HashSet::new();
        for layer in self.faces.iter().skip(1) {
            for f in layer {
                for i in 0..f.len() {
                    let mut sub = f.clone();
                    sub.remove(i);
                    covered.insert(sub);
                }
            }
        }
        let mut out: Vec<Face> = self.faces().filter(|f| !covered.contains(*f)).cloned().collect();
        out.sort_unstable();
        out
    }

    /// Returns the same complex with every label rewritten by `f`.
    pub fn relabel<F: Fn(&str) -> String>(&self, f: F) -> SimplicialComplex {
        let named: Vec<Vec<String>> = self
            .faces()
            .map(|face| face.iter().map(|&i| f(&self.labels[i as usize])).collect())
            .collect();
        SimplicialComplex::from_faces(&named)
    }
}

fn add_subsets(face: &[u32], all: &mut HashSet<Face>) {
    if !all.insert(face.to_vec()) {
        return;
    }
    for i in 0..face.len() {
        let mut sub = face.to_vec();
        sub.remove(i);
        add_subsets(&sub, all);
    }
}

impl fmt::Display for SimplicialComplex {
    /// `dim <d>` then one non-empty face per line, lexicographically.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dim {}", self.dim())?;
        for face in self.faces_lex() {
            if face.is_empty() {
                continue;
            }
            writeln!(f, "{}", self.face_labels(face).join(" "))?;
        }
        Ok(())
    }
}

/// A vertex map between complexes sending faces to faces of equal size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialMap {
    pub domain: SimplicialComplex,
    pub codomain: SimplicialComplex,
    /// Image label index for each domain label index.
    pub vertex_map: Vec<u32>,
}

impl SimplicialMap {
    pub fn image(&self, face: &[u32]) -> Face {
        let mut img: Face = face.iter().map(|&i| self.vertex_map[i as usize]).collect();
        img.sort_unstable();
        img
    }

    pub fn label_image(&self, label: &str) -> Option<&str> {
        let i = self.domain.label_index(label)?;
        Some(&self.codomain.labels()[self.vertex_map[i as usize] as usize])
    }

    /// Injective on labels, and every face lands on a face of equal size.
    pub fn is_valid(&self) -> bool {
        let distinct: HashSet<u32> = self.vertex_map.iter().copied().collect();
        distinct.len() == self.vertex_map.len()
            && self.domain.faces().all(|f| self.codomain.contains(&self.image(f)))
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &SimplicialMap) -> SimplicialMap {
        assert_eq!(first.codomain, self.domain);
        SimplicialMap {
            domain: first.domain.clone(),
            codomain: self.codomain.clone(),
            vertex_map: first.vertex_map.iter().map(|&i| self.vertex_map[i as usize]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.domain == self.codomain && self.vertex_map.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }
}

/// Edge set check: in- and out-degree at most one everywhere and no oriented
/// cycle. Self-loops are never allowed.
pub fn is_multipath<S: AsRef<str>>(g: &Quiver, edges: &[S]) -> Result<bool, ComplexError> {
    let idx = edges
        .iter()
        .map(|e| g.edge(e.as_ref()).ok_or_else(|| ComplexError::UnknownEdge(e.as_ref().to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(is_multipath_indices(g, &idx))
}

pub fn is_multipath_indices(g: &Quiver, edges: &[usize]) -> bool {
    let n = g.vertex_count();
    let mut next = vec![usize::MAX; n];
    let mut has_in = vec![false; n];
    for &e in edges {
        let edge = &g.edges()[e];
        if edge.is_loop() || next[edge.source] != usize::MAX || has_in[edge.target] {
            return false;
        }
        next[edge.source] = edge.target;
        has_in[edge.target] = true;
    }
    // with degrees bounded by one, a cycle is a closed successor chain
    let mut state = vec![0u8; n];
    for start in 0..n {
        let mut v = start;
        while v != usize::MAX && state[v] == 0 {
            state[v] = 1;
            v = next[v];
        }
        if v != usize::MAX && state[v] == 1 {
            return false;
        }
        let mut v = start;
        while v != usize::MAX && state[v] == 1 {
            state[v] = 2;
            v = next[v];
        }
    }
    true
}

/// Multipath complex on the edges of a directed quiver.
///
/// Backtracking in edge order keeps the degree bounds incrementally; adding
/// `u -> w` closes a cycle exactly when the path ending at `u` starts at `w`.
pub fn multipath_complex(g: &Quiver) -> Result<SimplicialComplex, ComplexError> {
    if !g.kind().is_directed() {
        return Err(ComplexError::NotDirected);
    }
    let candidates: Vec<usize> = (0..g.edge_count()).filter(|&e| !g.edges()[e].is_loop()).collect();
    let n = g.vertex_count();

    struct State {
        out_used: Vec<bool>,
        in_used: Vec<bool>,
        // for a path end, the path start (and vice versa); identity otherwise
        other_end: Vec<usize>,
    }

    fn search(
        g: &Quiver,
        cand: &[usize],
        from: usize,
        st: &mut State,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        out.push(current.clone());
        for i in from..cand.len() {
            let e = &g.edges()[cand[i]];
            let (u, w) = (e.source, e.target);
            if st.out_used[u] || st.in_used[w] || st.other_end[u] == w {
                continue;
            }
            let (start, end) = (st.other_end[u], st.other_end[w]);
            let saved = (st.other_end[start], st.other_end[end]);
            st.out_used[u] = true;
            st.in_used[w] = true;
            st.other_end[start] = end;
            st.other_end[end] = start;
            current.push(i);
            search(g, cand, i + 1, st, current, out);
            current.pop();
            st.other_end[start] = saved.0;
            st.other_end[end] = saved.1;
            st.out_used[u] = false;
            st.in_used[w] = false;
        }
    }

    let mut st = State { out_used: vec![false; n], in_used: vec![false; n], other_end: (0..n).collect() };
    let mut found = Vec::new();
    search(g, &candidates, 0, &mut st, &mut Vec::new(), &mut found);
    let labels: Vec<String> = candidates.iter().map(|&e| g.edges()[e].id.clone()).collect();
    Ok(build_from_index_faces(labels, found))
}

/// Matching complex of an undirected graph: faces are sets of undirected
/// edges with pairwise disjoint endpoints. Self-loops are excluded.
pub fn matching_complex(g: &Quiver) -> Result<SimplicialComplex, ComplexError> {
    if g.kind() != Kind::Undirected {
        return Err(ComplexError::NotUndirected);
    }
    let reps: Vec<usize> = g
        .orbit_representatives()
        .into_iter()
        .filter(|&e| !g.edges()[e].is_loop())
        .collect();

    fn search(g: &Quiver, reps: &[usize], from: usize, used: &mut [bool], current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(current.clone());
        for i in from..reps.len() {
            let e = &g.edges()[reps[i]];
            if used[e.source] || used[e.target] {
                continue;
            }
            used[e.source] = true;
            used[e.target] = true;
            current.push(i);
            search(g, reps, i + 1, used, current, out);
            current.pop();
            used[e.source] = false;
            used[e.target] = false;
        }
    }

    let mut found = Vec::new();
    search(g, &reps, 0, &mut vec![false; g.vertex_count()], &mut Vec::new(), &mut found);
    let labels: Vec<String> = reps.iter().map(|&e| g.orbit_label(e)).collect();
    Ok(build_from_index_faces(labels, found))
}

/// `labels[i]` names candidate `i`; `faces` index into `labels` and are
/// already downward closed.
fn build_from_index_faces(labels: Vec<String>, faces: Vec<Vec<usize>>) -> SimplicialComplex {
    let mut order: Vec<usize> = (0..labels.len()).collect();
    order.sort_by(|&a, &b| label_cmp(&labels[a], &labels[b]));
    let used: HashSet<usize> = faces.iter().flatten().copied().collect();
    // drop candidates that never occur, keeping natural order
    let kept: Vec<usize> = order.iter().copied().filter(|i| used.contains(i)).collect();
    let mut compact = vec![u32::MAX; labels.len()];
    for (r, &i) in kept.iter().enumerate() {
        compact[i] = r as u32;
    }
    let top = faces.iter().map(Vec::len).max().unwrap_or(0);
    let mut layers: Vec<Vec<Face>> = vec![Vec::new(); top + 1];
    for f in faces {
        let mut face: Face = f.iter().map(|&i| compact[i]).collect();
        face.sort_unstable();
        layers[face.len()].push(face);
    }
    for layer in &mut layers {
        layer.sort_unstable();
    }
    let labels = kept.iter().map(|&i| labels[i].clone()).collect();
    SimplicialComplex::from_sorted(labels, layers)
}

/// Join `{σ ∪ τ}`. With `auto_prefix`, labels are rewritten as `a:<l>` and
/// `b:<l>`; otherwise shared labels are an error.
pub fn join(a: &SimplicialComplex, b: &SimplicialComplex, auto_prefix: bool) -> Result<SimplicialComplex, ComplexError> {
    let (a, b) = if auto_prefix {
        (a.relabel(|l| format!("a:{l}")), b.relabel(|l| format!("b:{l}")))
    } else {
        if let Some(l) = a.labels().iter().find(|l| b.label_index(l).is_some()) {
            return Err(ComplexError::LabelClash(l.clone()));
        }
        (a.clone(), b.clone())
    };
    let mut labels: Vec<String> = a.labels().iter().chain(b.labels()).cloned().collect();
    labels.sort_by(|x, y| label_cmp(x, y));
    let pos: HashMap<&str, u32> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i as u32)).collect();
    let ma: Vec<u32> = a.labels().iter().map(|l| pos[l.as_str()]).collect();
    let mb: Vec<u32> = b.labels().iter().map(|l| pos[l.as_str()]).collect();
    let top = a.faces.len() + b.faces.len() - 1;
    let mut layers: Vec<Vec<Face>> = vec![Vec::new(); top];
    for s in a.faces() {
        for t in b.faces() {
            let mut f: Face = s.iter().map(|&i| ma[i as usize]).chain(t.iter().map(|&i| mb[i as usize])).collect();
            f.sort_unstable();
            layers[f.len()].push(f);
        }
    }
    for layer in &mut layers {
        layer.sort_unstable();
    }
    Ok(SimplicialComplex::from_sorted(labels, layers))
}

/// The simplicial map `X(codomain) → X(domain)` sending each codomain edge to
/// its unique preimage edge.
pub fn induced_map(m: &MinorMorphism) -> Result<SimplicialMap, ComplexError> {
    m.validate().map_err(|v| ComplexError::InvalidMorphism(v.to_string()))?;
    let source = multipath_complex(m.codomain())?;
    let target = multipath_complex(m.domain())?;
    let pre = m.edge_preimages();
    let vertex_map = source
        .labels()
        .iter()
        .map(|l| {
            let f = m.codomain().edge(l).expect("label is a codomain edge");
            debug_assert!(matches!(m.edge_image(pre[f]), Image::Edge(_)));
            let id = &m.domain().edges()[pre[f]].id;
            target.label_index(id).ok_or_else(|| {
                ComplexError::InvalidMorphism(format!("preimage `{id}` of `{l}` is not a multipath edge"))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SimplicialMap { domain: source, codomain: target, vertex_map })
}

/// True iff `bijection` (label of `a` to label of `b`) maps the faces of `a`
/// onto the faces of `b`.
pub fn canonical_iso_check(
    a: &SimplicialComplex,
    b: &SimplicialComplex,
    bijection: &HashMap<String, String>,
) -> Result<bool, ComplexError> {
    if bijection.len() != a.labels().len() || a.labels().len() != b.labels().len() {
        return Err(ComplexError::NotABijection("label counts differ".into()));
    }
    let mut map = Vec::with_capacity(a.labels().len());
    let mut seen = HashSet::new();
    for l in a.labels() {
        let target = bijection
            .get(l)
            .ok_or_else(|| ComplexError::NotABijection(format!("`{l}` is unmapped")))?;
        let j = b
            .label_index(target)
            .ok_or_else(|| ComplexError::NotABijection(format!("`{target}` is not a label of the target")))?;
        if !seen.insert(j) {
            return Err(ComplexError::NotABijection(format!("`{target}` is hit twice")));
        }
        map.push(j);
    }
    if a.face_count() != b.face_count() {
        return Ok(false);
    }
    Ok(a.faces().all(|f| {
        let mut img: Face = f.iter().map(|&i| map[i as usize]).collect();
        img.sort_unstable();
        b.contains(&img)
    }))
}

/// Identity bijection on the labels of `a`.
pub fn identity_bijection(a: &SimplicialComplex) -> HashMap<String, String> {
    a.labels().iter().map(|l| (l.clone(), l.clone())).collect()
}

/// The path poset: multipaths ordered by inclusion.
#[derive(Debug, Clone)]
pub struct PathPoset {
    pub elements: Vec<Vec<String>>,
    sets: Vec<Face>,
}

impl PathPoset {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `elements[i] ≤ elements[j]`.
    pub fn le(&self, i: usize, j: usize) -> bool {
        let (a, b) = (&self.sets[i], &self.sets[j]);
        a.iter().all(|x| b.binary_search(x).is_ok())
    }

    pub fn maximum(&self) -> Option<usize> {
        (0..self.len()).find(|&i| (0..self.len()).all(|j| self.le(j, i)))
    }

    pub fn minimum(&self) -> Option<usize> {
        (0..self.len()).find(|&i| (0..self.len()).all(|j| self.le(i, j)))
    }

    /// Cover relations `(i, j)` with `i ⋖ j`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in 0..self.len() {
                if self.sets[j].len() == self.sets[i].len() + 1 && self.le(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

pub fn path_poset(g: &Quiver) -> Result<PathPoset, ComplexError> {
    let x = multipath_complex(g)?;
    let sets: Vec<Face> = x.faces_lex().into_iter().cloned().collect();
    let elements = sets.iter().map(|f| x.face_labels(f)).collect();
    Ok(PathPoset { elements, sets })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::underlying_graph;
    use crate::family::Family;
    use crate::minor::{compose_minor, contract_edge, delete_edge};

    fn fam(f: Family) -> Quiver {
        f.build().unwrap()
    }

    #[test]
    fn natural_order() {
        let mut v = vec!["e10", "e2", "e1", "a", "e02"];
        v.sort_by(|a, b| label_cmp(a, b));
        assert_eq!(v, vec!["a", "e1", "e02", "e2", "e10"]);
    }

    #[test]
    fn multipath_checks() {
        assert!(!is_multipath(&fam(Family::P(2)), &["e0", "e1"]).unwrap());
        assert!(is_multipath(&fam(Family::I(3)), &["e0", "e1", "e2"]).unwrap());
        assert!(!is_multipath(&fam(Family::D(3, 2)), &["e0", "e1"]).unwrap());
        assert!(!is_multipath(&fam(Family::P(1)), &["e0"]).unwrap());
        assert_eq!(
            is_multipath(&fam(Family::I(1)), &["zz"]).unwrap_err(),
            ComplexError::UnknownEdge("zz".into())
        );
    }

    #[test]
    fn path_complex_is_simplex() {
        let x = multipath_complex(&fam(Family::I(3))).unwrap();
        assert_eq!(x.face_count(), 8);
        assert_eq!(x.facets(), vec![vec![0, 1, 2]]);
        assert_eq!(x.dim(), 2);
    }

    #[test]
    fn cycle_complex_is_sphere() {
        let x = multipath_complex(&fam(Family::P(4))).unwrap();
        assert_eq!(x.f_vector(), vec![1, 4, 6, 4]);
        assert_eq!(x.facets().len(), 4);
    }

    #[test]
    fn alternating_two_edges() {
        let x = multipath_complex(&fam(Family::A(2))).unwrap();
        assert_eq!(x.f_vector(), vec![1, 2]);
    }

    #[test]
    fn loops_are_not_vertices() {
        let q = Quiver::new(Kind::Quiver, "q", &["a", "b"], &[("l", "a", "a"), ("e", "a", "b")]).unwrap();
        let x = multipath_complex(&q).unwrap();
        assert_eq!(x.labels(), &["e"]);
    }

    #[test]
    fn matching_of_short_path() {
        let g = underlying_graph(&fam(Family::I(2)));
        let m = matching_complex(&g).unwrap();
        assert_eq!(m.f_vector(), vec![1, 2]);
        assert_eq!(m.labels(), &["e0", "e1"]);
        assert_eq!(matching_complex(&fam(Family::I(2))).unwrap_err(), ComplexError::NotUndirected);
    }

    #[test]
    fn matching_of_half_graph_b3() {
        // brute force over all subsets of the 6 undirected edges
        let g = fam(Family::B(3));
        let reps = g.orbit_representatives();
        let mut f = vec![0usize; 4];
        for mask in 0u32..(1 << reps.len()) {
            let chosen: Vec<usize> = (0..reps.len()).filter(|i| mask >> i & 1 == 1).map(|i| reps[i]).collect();
            let mut ends: Vec<usize> = chosen.iter().flat_map(|&e| [g.edges()[e].source, g.edges()[e].target]).collect();
            let k = ends.len();
            ends.sort();
            ends.dedup();
            if ends.len() == k {
                f[chosen.len()] += 1;
            }
        }
        let m = matching_complex(&g).unwrap();
        assert_eq!(m.labels().len(), 6);
        assert_eq!(m.f_vector(), f[..m.f_vector().len()].to_vec());
        assert_eq!(f, vec![1, 6, 7, 1]);
    }

    #[test]
    fn alternating_matches_matching() {
        for n in 1..7 {
            let g = fam(Family::A(n));
            let x = multipath_complex(&g).unwrap();
            let m = matching_complex(&underlying_graph(&g)).unwrap();
            assert!(canonical_iso_check(&x, &m, &identity_bijection(&x)).unwrap());
        }
    }

    #[test]
    fn join_examples() {
        let pt = |l: &str| SimplicialComplex::from_faces(&[vec![l]]);
        let j = join(&pt("x"), &pt("y"), false).unwrap();
        assert_eq!(j.f_vector(), vec![1, 2, 1]);
        assert_eq!(join(&pt("x"), &pt("x"), false).unwrap_err(), ComplexError::LabelClash("x".into()));

        let a = multipath_complex(&fam(Family::P(3))).unwrap();
        assert_eq!(join(&SimplicialComplex::empty(), &a, false).unwrap(), a);

        let i2 = fam(Family::I(2));
        let lhs = multipath_complex(&i2.disjoint_union(&i2).unwrap()).unwrap();
        let x = multipath_complex(&i2).unwrap();
        let rhs = join(&x, &x, true).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn contraction_induces_face_inclusion() {
        let i3 = fam(Family::I(3));
        let (_, m) = contract_edge(&i3, "e2").unwrap();
        let f = induced_map(&m).unwrap();
        assert!(f.is_valid());
        assert_eq!(f.domain.f_vector(), vec![1, 2, 1]);
        assert_eq!(f.codomain.f_vector(), vec![1, 3, 3, 1]);
        assert_eq!(f.label_image("e0"), Some("e0"));
        assert_eq!(f.label_image("e1"), Some("e1"));

        let id = induced_map(&MinorMorphism::identity(&i3)).unwrap();
        assert!(id.is_identity());
    }

    #[test]
    fn deletion_from_cycle_induces_simplex_in_sphere() {
        let p4 = fam(Family::P(4));
        let (h, m) = delete_edge(&p4, "e3").unwrap();
        let f = induced_map(&m).unwrap();
        let xh = multipath_complex(&h).unwrap();
        assert_eq!(xh.facets().len(), 1);
        assert_eq!(xh.dim(), 2);
        assert!(f.is_valid());
        for face in f.domain.faces() {
            assert!(f.codomain.contains(&f.image(face)));
        }
    }

    #[test]
    fn functoriality_of_induced_maps() {
        let t = fam(Family::T(3));
        let (a, f) = contract_edge(&t, "e5").unwrap();
        let (_, g) = delete_edge(&a, "e1").unwrap();
        let gf = compose_minor(&f, &g).unwrap();
        let lhs = induced_map(&gf).unwrap();
        let rhs = induced_map(&f).unwrap().after(&induced_map(&g).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn iso_check_cases() {
        let x = multipath_complex(&fam(Family::I(3))).unwrap();
        assert!(canonical_iso_check(&x, &x, &identity_bijection(&x)).unwrap());
        let edge = SimplicialComplex::from_faces(&[vec!["a", "b"]]);
        let points = SimplicialComplex::from_faces(&[vec!["a"], vec!["b"]]);
        let id = identity_bijection(&edge);
        assert!(!canonical_iso_check(&edge, &points, &id).unwrap());
        let swap: HashMap<String, String> = [("a".into(), "b".into()), ("b".into(), "b".into())].into();
        assert!(matches!(canonical_iso_check(&edge, &points, &swap), Err(ComplexError::NotABijection(_))));
    }

    #[test]
    fn path_posets() {
        let p = path_poset(&fam(Family::I(3))).unwrap();
        assert_eq!(p.len(), 8);
        assert!(p.maximum().is_some());
        assert_eq!(p.covers().len(), 12);
        let p = path_poset(&fam(Family::P(3))).unwrap();
        assert_eq!(p.len(), 7);
        assert!(p.maximum().is_none());
        let empty = Quiver::digraph::<&str>("pt", &["a", "b"], &[]).unwrap();
        let p = path_poset(&empty).unwrap();
        assert_eq!(p.elements, vec![Vec::<String>::new()]);
        assert_eq!(p.minimum(), Some(0));
    }

    #[test]
    fn display_format() {
        let x = multipath_complex(&fam(Family::A(2))).unwrap();
        assert_eq!(x.to_string(), "dim 0\ne0\ne1\n");
        assert_eq!(SimplicialComplex::empty().to_string(), "dim -1\n");
    }

    #[test]
    fn from_all_faces_checks_closure() {
        let err = SimplicialComplex::from_all_faces(&[vec!["a", "b"], vec!["a"]]).unwrap_err();
        assert_eq!(err, ComplexError::NotDownwardClosed(vec!["b".into()]));
    }
}
