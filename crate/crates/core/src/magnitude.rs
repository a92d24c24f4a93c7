//! Magnitude chain complexes of quivers under the directed path metric.
//!
//! The chain group in bidegree `(k, l)` is built directly on its canonical
//! basis: `(k+1)`-tuples of vertices with consecutive entries distinct and
//! reachable, whose consecutive distances sum to `l`. Parallel edges and
//! self-loops do not affect distances, so they are invisible here.

use std::collections::{HashMap, VecDeque};

use rayon::prelude::*;
use thiserror::Error;

use crate::homology::{chain_cohomology, chain_homology, ChainComplexZ, HomologyProfile, HomologyRecord};
use crate::minor::MinorMorphism;
use crate::quiver::Quiver;
use crate::snf::IntMatrix;

/// Basis generation aborts past this many tuples in one length slice.
pub const MAX_TUPLES: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MagnitudeError {
    #[error("length slice {l} has more than {MAX_TUPLES} tuples")]
    TooManyTuples { l: usize },
    #[error("morphism deletes edges; only contractions induce chain maps")]
    NotAContraction,
    #[error("morphism is not a valid minor morphism: {0}")]
    InvalidMorphism(String),
}

/// Directed shortest-path distances; `None` means unreachable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<Option<u32>>,
}

impl DistanceMatrix {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        self.d[u * self.n + v]
    }

    /// Length of a tuple, or `None` if two consecutive entries coincide or
    /// are not connected by a directed path.
    pub fn tuple_length(&self, tuple: &[u32]) -> Option<usize> {
        tuple.windows(2).try_fold(0usize, |acc, w| {
            if w[0] == w[1] {
                return None;
            }
            self.get(w[0] as usize, w[1] as usize).map(|d| acc + d as usize)
        })
    }
}

/// Unit-weight BFS from every vertex along edge direction.
pub fn path_metric(g: &Quiver) -> DistanceMatrix {
    let n = g.vertex_count();
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in g.edges() {
        if !e.is_loop() && !out[e.source].contains(&e.target) {
            out[e.source].push(e.target);
        }
    }
    let mut d = vec![None; n * n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        d[s * n + s] = Some(0);
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = d[s * n + u].expect("queued vertices are reached");
            for &w in &out[u] {
                if d[s * n + w].is_none() {
                    d[s * n + w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
    }
    DistanceMatrix { n, d }
}

/// Lexicographically sorted basis tuples of bidegree `(k, l)`.
pub fn basis_tuples(d: &DistanceMatrix, k: usize, l: usize) -> Result<Vec<Vec<u32>>, MagnitudeError> {
    let mut out = Vec::new();
    let mut tuple = Vec::with_capacity(k + 1);
    for v in 0..d.len() {
        tuple.push(v as u32);
        extend_tuple(d, k, l, &mut tuple, &mut out)?;
        tuple.pop();
    }
    Ok(out)
}

fn extend_tuple(
    d: &DistanceMatrix,
    k: usize,
    remaining: usize,
    tuple: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) -> Result<(), MagnitudeError> {
    let steps_left = k + 1 - tuple.len();
    if steps_left == 0 {
        if remaining == 0 {
            if out.len() == MAX_TUPLES {
                return Err(MagnitudeError::TooManyTuples { l: 0 });
            }
            out.push(tuple.clone());
        }
        return Ok(());
    }
    // every remaining step costs at least one
    if remaining < steps_left {
        return Ok(());
    }
    let last = *tuple.last().expect("tuple starts nonempty") as usize;
    for w in 0..d.len() {
        match d.get(last, w) {
            Some(step) if w != last && step as usize <= remaining => {
                tuple.push(w as u32);
                extend_tuple(d, k, remaining - step as usize, tuple, out)?;
                tuple.pop();
            }
            _ => {}
        }
    }
    Ok(())
}

fn index_of(tuples: &[Vec<u32>]) -> HashMap<&[u32], usize> {
    tuples.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect()
}

/// `δ : MC_{k,l} → MC_{k-1,l}` given both bases.
fn differential(d: &DistanceMatrix, upper: &[Vec<u32>], lower: &[Vec<u32>], l: usize) -> IntMatrix {
    let index = index_of(lower);
    let mut m = IntMatrix::zeros(lower.len(), upper.len());
    for (j, t) in upper.iter().enumerate() {
        let k = t.len() - 1;
        for i in 1..k {
            let (a, b, c) = (t[i - 1] as usize, t[i] as usize, t[i + 1] as usize);
            if a == c {
                continue;
            }
            let keeps_length = matches!(
                (d.get(a, c), d.get(a, b), d.get(b, c)),
                (Some(ac), Some(ab), Some(bc)) if ac == ab + bc
            );
            if !keeps_length {
                continue;
            }
            let mut face = t.clone();
            face.remove(i);
            debug_assert_eq!(d.tuple_length(&face), Some(l));
            let row = index[face.as_slice()];
            m.add(row, j, if i % 2 == 0 { 1 } else { -1 });
        }
    }
    m
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MagnitudeBasis {
    pub k: usize,
    pub l: usize,
    /// Tuples of vertex indices, sorted lexicographically.
    pub tuples: Vec<Vec<u32>>,
    /// Differential into bidegree `(k-1, l)`; zero rows when `k = 0`.
    pub boundary: IntMatrix,
}

impl MagnitudeBasis {
    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn tuple_names(&self, g: &Quiver) -> Vec<Vec<String>> {
        self.tuples
            .iter()
            .map(|t| t.iter().map(|&v| g.vertices()[v as usize].clone()).collect())
            .collect()
    }
}

pub fn magnitude_basis(g: &Quiver, k: usize, l: usize) -> Result<MagnitudeBasis, MagnitudeError> {
    let d = path_metric(g);
    let tuples = basis_tuples(&d, k, l).map_err(|_| MagnitudeError::TooManyTuples { l })?;
    let boundary = if k == 0 {
        IntMatrix::zeros(0, tuples.len())
    } else {
        let lower = basis_tuples(&d, k - 1, l).map_err(|_| MagnitudeError::TooManyTuples { l })?;
        differential(&d, &tuples, &lower, l)
    };
    Ok(MagnitudeBasis { k, l, tuples, boundary })
}

pub fn magnitude_differential(b: &MagnitudeBasis) -> IntMatrix {
    b.boundary.clone()
}

/// The chain complex `(MC_{*,l}, δ)`, degrees `0..=l`.
pub fn magnitude_chain_complex(g: &Quiver, l: usize) -> Result<ChainComplexZ, MagnitudeError> {
    slice_complex(&path_metric(g), l)
}

fn slice_complex(d: &DistanceMatrix, l: usize) -> Result<ChainComplexZ, MagnitudeError> {
    let mut bases = Vec::with_capacity(l + 1);
    let mut total = 0usize;
    for k in 0..=l {
        let b = basis_tuples(d, k, l).map_err(|_| MagnitudeError::TooManyTuples { l })?;
        total += b.len();
        if total > MAX_TUPLES {
            return Err(MagnitudeError::TooManyTuples { l });
        }
        bases.push(b);
    }
    let boundaries = (0..=l)
        .map(|k| {
            if k == 0 {
                IntMatrix::zeros(0, bases[0].len())
            } else {
                differential(d, &bases[k], &bases[k - 1], l)
            }
        })
        .collect();
    Ok(ChainComplexZ::new(0, boundaries))
}

/// Magnitude (co)homology groups for every `k ≤ l ≤ max_l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MagnitudeTable {
    pub cohomology: bool,
    /// `slices[l][k]`.
    pub slices: Vec<Vec<HomologyRecord>>,
}

impl MagnitudeTable {
    pub fn get(&self, k: usize, l: usize) -> Option<&HomologyRecord> {
        self.slices.get(l).and_then(|s| s.get(k))
    }

    pub fn rank(&self, k: usize, l: usize) -> usize {
        self.get(k, l).map_or(0, |r| r.betti)
    }

    /// `(k, l, record)` ordered by `l`, then `k`.
    pub fn rows(&self) -> impl Iterator<Item = (usize, usize, &HomologyRecord)> {
        self.slices
            .iter()
            .enumerate()
            .flat_map(|(l, s)| s.iter().enumerate().map(move |(k, r)| (k, l, r)))
    }

    /// The length-`l` slice as an unreduced profile.
    pub fn profile(&self, l: usize) -> Option<HomologyProfile> {
        self.slices.get(l).map(|s| HomologyProfile { reduced: false, records: s.clone() })
    }
}

fn table(g: &Quiver, max_l: usize, cohomology: bool) -> Result<MagnitudeTable, MagnitudeError> {
    let d = path_metric(g);
    let slices = (0..=max_l)
        .into_par_iter()
        .map(|l| {
            let cc = slice_complex(&d, l)?;
            Ok(if cohomology { chain_cohomology(&cc) } else { chain_homology(&cc) })
        })
        .collect::<Result<Vec<_>, MagnitudeError>>()?;
    Ok(MagnitudeTable { cohomology, slices })
}

pub fn magnitude_homology(g: &Quiver, max_l: usize) -> Result<MagnitudeTable, MagnitudeError> {
    table(g, max_l, false)
}

pub fn magnitude_cohomology(g: &Quiver, max_l: usize) -> Result<MagnitudeTable, MagnitudeError> {
    table(g, max_l, true)
}

/// Matrix of `φ_# : MC_{k,l}(G) → MC_{k,l}(H)` for a contraction `φ`. A tuple
/// goes to its image when the image keeps length `l`, and to zero otherwise.
pub fn contraction_chain_map(m: &MinorMorphism, k: usize, l: usize) -> Result<IntMatrix, MagnitudeError> {
    if !m.is_contraction() {
        return Err(MagnitudeError::NotAContraction);
    }
    m.validate().map_err(|e| MagnitudeError::InvalidMorphism(e.to_string()))?;
    let (dg, dh) = (path_metric(m.domain()), path_metric(m.codomain()));
    let too_many = |_| MagnitudeError::TooManyTuples { l };
    let source = basis_tuples(&dg, k, l).map_err(too_many)?;
    let target = basis_tuples(&dh, k, l).map_err(too_many)?;
    let index = index_of(&target);
    let mut out = IntMatrix::zeros(target.len(), source.len());
    for (j, t) in source.iter().enumerate() {
        let image: Vec<u32> = t.iter().map(|&v| m.map_vertex(v as usize) as u32).collect();
        if dh.tuple_length(&image) == Some(l) {
            out.set(index[image.as_slice()], j, 1);
        }
    }
    Ok(out)
}
