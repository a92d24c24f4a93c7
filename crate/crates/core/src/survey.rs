//! Exhaustive torsion survey over small connected digraphs.
//!
//! Digraphs are enumerated as sets of ordered vertex pairs (no self-loops),
//! deduplicated up to isomorphism by minimizing the edge bitmask over all
//! vertex permutations.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use thiserror::Error;

use crate::complex::multipath_complex;
use crate::homology::{homology, torsion_exponent};
use crate::quiver::{Edge, Kind, Quiver, UnionFind};

/// Canonical labeling is brute force, so vertex counts stay small.
pub const MAX_SURVEY_VERTICES: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurveyError {
    #[error("survey bounds too large: at most {MAX_SURVEY_VERTICES} vertices")]
    BoundsTooLarge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyRow {
    pub genus: usize,
    /// Isomorphism classes of connected digraphs with this genus.
    pub graphs: usize,
    /// Largest torsion exponent of a multipath complex in this genus.
    pub max_exponent: BigInt,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    heap_permute(n, &mut p, &mut out);
    out
}

fn heap_permute(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(p.clone());
        return;
    }
    for i in 0..k {
        heap_permute(k - 1, p, out);
        let j = if k.is_multiple_of(2) { i } else { 0 };
        p.swap(j, k - 1);
    }
}

struct PairSpace {
    n: usize,
    pairs: Vec<(usize, usize)>,
    bit: Vec<Vec<usize>>,
}

impl PairSpace {
    fn new(n: usize) -> Self {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))).collect();
        let mut bit = vec![vec![usize::MAX; n]; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            bit[u][v] = i;
        }
        PairSpace { n, pairs, bit }
    }

    fn canonical(&self, mask: u32, perms: &[Vec<usize>]) -> u32 {
        perms
            .iter()
            .map(|p| {
                let mut m = 0u32;
                for (i, &(u, v)) in self.pairs.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        m |= 1 << self.bit[p[u]][p[v]];
                    }
                }
                m
            })
            .min()
            .expect("at least one permutation")
    }

    fn is_connected(&self, mask: u32) -> bool {
        let mut uf = UnionFind::new(self.n);
        for (i, &(u, v)) in self.pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                uf.union(u, v);
            }
        }
        uf.count() == 1
    }

    fn quiver(&self, mask: u32) -> Quiver {
        let edges = self
            .pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .enumerate()
            .map(|(k, (_, &(source, target)))| Edge { id: format!("e{k}"), source, target })
            .collect();
        let vertices = (0..self.n).map(|i| format!("v{i}")).collect();
        Quiver::from_parts(Kind::Digraph, "survey", vertices, edges, None).expect("valid digraph")
    }
}

/// Calls `visit` on every edge subset of size `k` out of `total` bits.
fn for_each_subset(total: usize, k: usize, visit: &mut impl FnMut(u32)) {
    fn go(start: usize, total: usize, left: usize, mask: u32, visit: &mut impl FnMut(u32)) {
        if left == 0 {
            visit(mask);
            return;
        }
        for i in start..=total - left {
            go(i + 1, total, left - 1, mask | 1 << i, visit);
        }
    }
    if k <= total {
        go(0, total, k, 0, visit);
    }
}

/// Connected digraphs with at most `max_vertices` vertices, `max_edges`
/// edges and genus at most `max_genus`, one per isomorphism class, grouped
/// by genus.
pub fn survey_classes(max_vertices: usize, max_edges: usize, max_genus: usize) -> Result<BTreeMap<usize, Vec<Quiver>>, SurveyError> {
    if max_vertices > MAX_SURVEY_VERTICES {
        return Err(SurveyError::BoundsTooLarge);
    }
    let mut by_genus: BTreeMap<usize, Vec<Quiver>> = BTreeMap::new();
    for n in 1..=max_vertices {
        let space = PairSpace::new(n);
        let perms = permutations(n);
        let mut seen: HashSet<u32> = HashSet::new();
        // connected needs at least n - 1 edges; genus bounds the rest
        let top = max_edges.min(n - 1 + max_genus).min(space.pairs.len());
        for m in n - 1..=top {
            let genus = m + 1 - n;
            for_each_subset(space.pairs.len(), m, &mut |mask| {
                if space.is_connected(mask) && seen.insert(space.canonical(mask, &perms)) {
                    by_genus.entry(genus).or_default().push(space.quiver(mask));
                }
            });
        }
    }
    Ok(by_genus)
}

/// Maximum torsion exponent of reduced multipath-complex homology per genus.
/// Rows are handed to `emit` in increasing genus as soon as they are done.
pub fn torsion_survey_with(
    max_vertices: usize,
    max_edges: usize,
    max_genus: usize,
    mut emit: impl FnMut(&SurveyRow),
) -> Result<Vec<SurveyRow>, SurveyError> {
    let classes = survey_classes(max_vertices, max_edges, max_genus)?;
    let mut rows = Vec::with_capacity(classes.len());
    for (genus, graphs) in classes {
        let max_exponent = graphs
            .par_iter()
            .map(|g| {
                let x = multipath_complex(g).expect("digraph input");
                torsion_exponent(&homology(&x, true))
            })
            .reduce(BigInt::one, |a, b| a.max(b));
        let row = SurveyRow { genus, graphs: graphs.len(), max_exponent };
        emit(&row);
        rows.push(row);
    }
    Ok(rows)
}

pub fn torsion_survey(max_vertices: usize, max_edges: usize, max_genus: usize) -> Result<Vec<SurveyRow>, SurveyError> {
    torsion_survey_with(max_vertices, max_edges, max_genus, |_| {})
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(4).len(), 24);
        let set: HashSet<Vec<usize>> = permutations(5).into_iter().collect();
        assert_eq!(set.len(), 120);
    }

    #[test]
    fn tiny_survey() {
        let rows = torsion_survey(2, 2, 1).unwrap();
        // single vertex, one edge, and the 2-cycle
        assert_eq!(rows.len(), 2);
        assert_eq!((rows[0].genus, rows[0].graphs), (0, 2));
        assert_eq!((rows[1].genus, rows[1].graphs), (1, 1));
        assert!(rows.iter().all(|r| r.max_exponent == BigInt::one()));
    }

    #[test]
    fn class_counts() {
        // connected digraphs on 3 vertices, no loops: trees are the 3 oriented
        // paths/stars (in-star, out-star, directed path)
        let classes = survey_classes(3, 2, 0).unwrap();
        let on_three = classes[&0].iter().filter(|g| g.vertex_count() == 3).count();
        assert_eq!(on_three, 3);
    }

    #[test]
    fn four_vertex_survey_is_torsion_free() {
        let rows = torsion_survey(4, 6, 1).unwrap();
        assert!(rows.iter().all(|r| r.max_exponent == BigInt::one()));
    }

    #[test]
    fn five_vertex_survey_counts_grow_with_genus() {
        let rows = torsion_survey(5, 8, 2).unwrap();
        let genera: Vec<usize> = rows.iter().map(|r| r.genus).collect();
        assert_eq!(genera, vec![0, 1, 2]);
        assert!(rows.windows(2).all(|w| w[0].graphs < w[1].graphs));
    }

    #[test]
    fn rejects_large_bounds() {
        assert_eq!(torsion_survey(6, 3, 0).unwrap_err(), SurveyError::BoundsTooLarge);
    }
}
