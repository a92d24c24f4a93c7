//! Integral homology of chain complexes and simplicial complexes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use rayon::prelude::*;

use crate::complex::SimplicialComplex;
use crate::snf::{smith_normal_form, IntMatrix, Snf};

/// A bounded chain complex of free abelian groups.
///
/// `boundaries[i]` is `∂` out of degree `degree_offset + i`; its row count is
/// the rank one degree lower (zero for the lowest degree).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplexZ {
    pub degree_offset: isize,
    pub ranks: Vec<usize>,
    pub boundaries: Vec<IntMatrix>,
}

impl ChainComplexZ {
    pub fn new(degree_offset: isize, boundaries: Vec<IntMatrix>) -> Self {
        let ranks = boundaries.iter().map(IntMatrix::cols).collect();
        let cc = ChainComplexZ { degree_offset, ranks, boundaries };
        debug_assert!(cc.dimensions_match());
        cc
    }

    pub fn degrees(&self) -> impl Iterator<Item = isize> + '_ {
        (0..self.ranks.len()).map(move |i| self.degree_offset + i as isize)
    }

    pub fn rank(&self, degree: isize) -> usize {
        self.slot(degree).map_or(0, |i| self.ranks[i])
    }

    /// `∂_k : C_k → C_{k-1}`.
    pub fn boundary(&self, degree: isize) -> Option<&IntMatrix> {
        self.slot(degree).map(|i| &self.boundaries[i])
    }

    fn slot(&self, degree: isize) -> Option<usize> {
        let i = degree - self.degree_offset;
        (i >= 0 && (i as usize) < self.ranks.len()).then_some(i as usize)
    }

    pub fn dimensions_match(&self) -> bool {
        self.boundaries.iter().enumerate().all(|(i, d)| {
            d.cols() == self.ranks[i] && d.rows() == if i == 0 { 0 } else { self.ranks[i - 1] }
        })
    }

    /// `∂_{k-1} ∘ ∂_k = 0` in every degree.
    pub fn is_complex(&self) -> bool {
        self.boundaries.windows(2).all(|w| w[0].mul(&w[1]).is_zero())
    }

    /// Alternating sum of ranks, degrees counted from zero.
    pub fn euler_characteristic(&self) -> i64 {
        self.degrees().map(|k| sign(k) * self.rank(k) as i64).sum()
    }
}

fn sign(k: isize) -> i64 {
    if k.rem_euclid(2) == 0 { 1 } else { -1 }
}

/// Simplicial chain complex on the faces of `c` in canonical order. With
/// `reduced`, the empty face sits in degree `-1`.
pub fn chain_complex(c: &SimplicialComplex, reduced: bool) -> ChainComplexZ {
    let lowest: isize = if reduced { -1 } else { 0 };
    let top = c.dim().max(lowest - 1);
    let mut boundaries = Vec::new();
    for d in lowest..=top {
        let faces = c.faces_of_dim(d);
        let rows = if d == lowest { 0 } else { c.faces_of_dim(d - 1).len() };
        let mut m = IntMatrix::zeros(rows, faces.len());
        if d > lowest {
            for (j, f) in faces.iter().enumerate() {
                for i in 0..f.len() {
                    let mut sub = f.clone();
                    sub.remove(i);
                    let row = c.position(&sub).expect("complex is downward closed");
                    m.set(row, j, if i % 2 == 0 { 1 } else { -1 });
                }
            }
        }
        boundaries.push(m);
    }
    ChainComplexZ::new(lowest, boundaries)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyRecord {
    pub degree: isize,
    pub betti: usize,
    /// Invariant factors above one, each dividing the next.
    pub torsion: Vec<BigInt>,
}

impl HomologyRecord {
    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyProfile {
    pub reduced: bool,
    pub records: Vec<HomologyRecord>,
}

impl HomologyProfile {
    pub fn degree(&self, k: isize) -> Option<&HomologyRecord> {
        self.records.iter().find(|r| r.degree == k)
    }

    pub fn betti(&self, k: isize) -> usize {
        self.degree(k).map_or(0, |r| r.betti)
    }

    pub fn is_torsion_free(&self) -> bool {
        self.records.iter().all(|r| r.torsion.is_empty())
    }

    /// True if every group vanishes.
    pub fn is_trivial(&self) -> bool {
        self.records.iter().all(HomologyRecord::is_zero)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.records.iter().map(|r| sign(r.degree) * r.betti as i64).sum()
    }

    /// Degrees with nonzero homology.
    pub fn support(&self) -> Vec<isize> {
        self.records.iter().filter(|r| !r.is_zero()).map(|r| r.degree).collect()
    }
}

/// Homology of an arbitrary chain complex, every degree reported.
pub fn chain_homology(cc: &ChainComplexZ) -> Vec<HomologyRecord> {
    let snfs: Vec<Snf> = cc.boundaries.par_iter().map(smith_normal_form).collect();
    (0..cc.ranks.len())
        .map(|i| {
            let rank_out = snfs[i].rank();
            let rank_in = snfs.get(i + 1).map_or(0, Snf::rank);
            HomologyRecord {
                degree: cc.degree_offset + i as isize,
                betti: cc.ranks[i] - rank_out - rank_in,
                torsion: snfs.get(i + 1).map_or_else(Vec::new, Snf::torsion),
            }
        })
        .collect()
}

/// Cohomology of the dual cochain complex, computed from the transposed
/// boundary matrices.
pub fn chain_cohomology(cc: &ChainComplexZ) -> Vec<HomologyRecord> {
    // δ^{k} = ∂_{k+1}^T : C^k → C^{k+1}
    let snfs: Vec<Snf> = cc.boundaries.par_iter().map(|d| smith_normal_form(&d.transpose())).collect();
    (0..cc.ranks.len())
        .map(|i| {
            let rank_out = snfs.get(i + 1).map_or(0, Snf::rank);
            let rank_in = snfs[i].rank();
            HomologyRecord {
                degree: cc.degree_offset + i as isize,
                betti: cc.ranks[i] - rank_out - rank_in,
                torsion: snfs[i].torsion(),
            }
        })
        .collect()
}

/// Integral homology of a simplicial complex. Reduced profiles list degrees
/// from 0 up to the dimension, plus degree -1 for the complex `{∅}`.
pub fn homology(c: &SimplicialComplex, reduced: bool) -> HomologyProfile {
    let cc = chain_complex(c, reduced);
    let mut records = chain_homology(&cc);
    if reduced && c.dim() >= 0 {
        records.retain(|r| r.degree >= 0);
    }
    HomologyProfile { reduced, records }
}

/// Least common multiple of all torsion coefficients; one if there are none.
pub fn torsion_exponent(p: &HomologyProfile) -> BigInt {
    p.records
        .iter()
        .flat_map(|r| &r.torsion)
        .fold(BigInt::one(), |acc, d| acc.lcm(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::multipath_complex;
    use crate::family::Family;

    fn triangle_boundary() -> SimplicialComplex {
        SimplicialComplex::from_faces(&[vec!["a", "b"], vec!["b", "c"], vec!["a", "c"]])
    }

    #[test]
    fn triangle_chain_complex() {
        let cc = chain_complex(&triangle_boundary(), true);
        assert_eq!(cc.ranks, vec![1, 3, 3]);
        assert!(cc.is_complex());
        let full = SimplicialComplex::from_faces(&[vec!["a", "b", "c"]]);
        let cc = chain_complex(&full, true);
        assert_eq!(cc.ranks, vec![1, 3, 3, 1]);
        assert!(cc.is_complex());
    }

    #[test]
    fn circle_homology() {
        let h = homology(&triangle_boundary(), true);
        assert_eq!(h.support(), vec![1]);
        let h = homology(&triangle_boundary(), false);
        assert_eq!(h.betti(0), 1);
        assert_eq!(h.betti(1), 1);
        let d1 = chain_complex(&triangle_boundary(), false).boundaries[1].clone();
        let snf = smith_normal_form(&d1);
        assert_eq!(snf.rank(), 2);
        assert!(snf.torsion().is_empty());
    }

    #[test]
    fn cycle_complex_ranks() {
        let x = multipath_complex(&Family::P(4).build().unwrap()).unwrap();
        let cc = chain_complex(&x, true);
        assert_eq!(cc.ranks, vec![1, 4, 6, 4]);
        assert_eq!(homology(&x, true).support(), vec![2]);
    }

    #[test]
    fn empty_complex() {
        let h = homology(&SimplicialComplex::empty(), true);
        assert_eq!(h.records.len(), 1);
        assert_eq!(h.records[0].degree, -1);
        assert_eq!(h.records[0].betti, 1);
        let h = homology(&SimplicialComplex::empty(), false);
        assert!(h.records.is_empty());
    }

    #[test]
    fn projective_plane_has_two_torsion() {
        // minimal 6-vertex triangulation of RP^2
        let tri = [
            [1, 2, 4], [2, 3, 4], [1, 3, 5], [2, 3, 5], [1, 4, 5],
            [2, 5, 6], [1, 2, 6], [1, 3, 6], [3, 4, 6], [4, 5, 6],
        ];
        let faces: Vec<Vec<String>> = tri.iter().map(|t| t.iter().map(|v| format!("x{v}")).collect()).collect();
        let c = SimplicialComplex::from_faces(&faces);
        let h = homology(&c, false);
        assert_eq!(h.betti(0), 1);
        assert_eq!(h.betti(1), 0);
        assert_eq!(h.degree(1).unwrap().torsion, vec![BigInt::from(2)]);
        assert_eq!(h.betti(2), 0);
        assert_eq!(torsion_exponent(&h), BigInt::from(2));
        let cc = chain_complex(&c, false);
        assert_eq!(cc.euler_characteristic(), h.euler_characteristic());
        // universal coefficients: H^2 carries the torsion of H_1
        let co = chain_cohomology(&cc);
        assert_eq!(co[2].torsion, vec![BigInt::from(2)]);
        assert!(co[1].torsion.is_empty());
    }

    #[test]
    fn exponents() {
        let rec = |degree, torsion: &[i64]| HomologyRecord {
            degree,
            betti: 0,
            torsion: torsion.iter().map(|&t| BigInt::from(t)).collect(),
        };
        let p = HomologyProfile { reduced: true, records: vec![rec(0, &[]), rec(1, &[])] };
        assert_eq!(torsion_exponent(&p), BigInt::one());
        let p = HomologyProfile { reduced: true, records: vec![rec(0, &[3])] };
        assert_eq!(torsion_exponent(&p), BigInt::from(3));
        let p = HomologyProfile { reduced: true, records: vec![rec(0, &[2]), rec(3, &[3])] };
        assert_eq!(torsion_exponent(&p), BigInt::from(6));
    }
}
