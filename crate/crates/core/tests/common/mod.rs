//! Independent oracles shared by the integration tests. Each one follows a
//! definition literally and avoids the library's own algorithms.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet};

use qhx_core::homology::{chain_homology, ChainComplexZ, HomologyRecord};
use qhx_core::snf::IntMatrix;
use qhx_core::{Kind, Quiver};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Components of the spanning subgraph on `edges`, as (vertices, edges).
fn components(n: usize, g: &Quiver, edges: &[usize]) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for &e in edges {
        let edge = &g.edges()[e];
        adj[edge.source].push((edge.target, e));
        adj[edge.target].push((edge.source, e));
    }
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let (mut vs, mut es) = (Vec::new(), BTreeSet::new());
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            vs.push(v);
            for &(w, e) in &adj[v] {
                es.insert(e);
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        out.push((vs, es.into_iter().collect()));
    }
    out
}

/// A multipath: every component of the spanning subgraph is a lone vertex or
/// a simple directed path.
pub fn multipath_by_components(g: &Quiver, edges: &[usize]) -> bool {
    components(g.vertex_count(), g, edges).into_iter().all(|(vs, es)| {
        if es.is_empty() {
            return true;
        }
        // a simple path v_0 -> ... -> v_m: walk from the unique start
        if es.len() + 1 != vs.len() {
            return false;
        }
        let targets: HashSet<usize> = es.iter().map(|&e| g.edges()[e].target).collect();
        let starts: Vec<usize> = vs.iter().copied().filter(|v| !targets.contains(v)).collect();
        let [mut at] = starts[..] else { return false };
        let mut used = HashSet::new();
        loop {
            let next: Vec<usize> = es.iter().copied().filter(|&e| g.edges()[e].source == at && !used.contains(&e)).collect();
            match next[..] {
                [] => break,
                [e] => {
                    used.insert(e);
                    at = g.edges()[e].target;
                }
                _ => return false,
            }
        }
        used.len() == es.len()
    })
}

fn stable_in(g: &Quiver, edges: &[usize], v: usize) -> bool {
    let src = edges.iter().any(|&e| g.edges()[e].source == v);
    let tgt = edges.iter().any(|&e| g.edges()[e].target == v);
    !(src && tgt)
}

fn touches(g: &Quiver, edges: &[usize]) -> HashSet<usize> {
    edges.iter().flat_map(|&e| [g.edges()[e].source, g.edges()[e].target]).collect()
}

fn is_connected_edge_set(g: &Quiver, edges: &[usize]) -> bool {
    let vs = touches(g, edges);
    components(g.vertex_count(), g, edges).iter().filter(|(c, _)| vs.contains(&c[0])).count() == 1
}

/// Dynamical regions by their definition, for digraphs without oriented
/// cycles (so the cycle condition holds vacuously). Returns the minimal
/// regions as sorted edge sets.
pub fn dynamical_modules_by_regions(g: &Quiver) -> Vec<Vec<usize>> {
    let m = g.edge_count();
    assert!(m <= 12, "exponential search");
    let all: Vec<usize> = (0..m).collect();
    let mut regions: Vec<Vec<usize>> = Vec::new();
    for mask in 1u32..(1 << m) {
        let r: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
        if !is_connected_edge_set(g, &r) {
            continue;
        }
        let rest: Vec<usize> = all.iter().copied().filter(|e| !r.contains(e)).collect();
        let (in_r, in_c) = (touches(g, &r), touches(g, &rest));
        let ok = in_r.intersection(&in_c).all(|&v| {
            !stable_in(g, &all, v) && stable_in(g, &r, v) && stable_in(g, &rest, v)
        });
        if ok {
            regions.push(r);
        }
    }
    let minimal: Vec<Vec<usize>> = regions
        .iter()
        .filter(|r| !regions.iter().any(|s| s.len() < r.len() && s.iter().all(|e| r.contains(e))))
        .cloned()
        .collect();
    minimal
}

/// All-pairs distances of an undirected graph by Floyd–Warshall; `None`
/// is infinite.
fn undirected_distances(g: &Quiver) -> Vec<Vec<Option<usize>>> {
    let n = g.vertex_count();
    let mut d = vec![vec![None; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = Some(0);
    }
    for e in g.edges() {
        if e.source != e.target {
            d[e.source][e.target] = Some(1);
            d[e.target][e.source] = Some(1);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

fn all_tuples(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..size {
        out = out
            .into_iter()
            .flat_map(|t| (0..n).map(move |v| {
                let mut t = t.clone();
                t.push(v);
                t
            }))
            .collect();
    }
    out
}

/// Magnitude homology of an undirected graph read off the quotient
/// `Λ_k / I_k`: all vertex tuples are enumerated, degenerate ones are
/// identified with zero, and each face `δ_i` is kept only if it still has
/// length `l`. Distances come from Floyd–Warshall on the undirected graph.
/// Returns `slices[l][k]`.
pub fn literal_magnitude_homology(g: &Quiver, max_l: usize) -> Vec<Vec<HomologyRecord>> {
    assert_eq!(g.kind(), Kind::Undirected);
    let n = g.vertex_count();
    let d = undirected_distances(g);
    let length = |t: &[usize]| -> Option<usize> {
        t.windows(2).try_fold(0, |acc, w| d[w[0]][w[1]].map(|x| acc + x))
    };
    let degenerate = |t: &[usize]| t.windows(2).any(|w| w[0] == w[1]);
    (0..=max_l)
        .map(|l| {
            // generators of MC_{k,l}: classes of non-degenerate tuples of length l
            let gens: Vec<Vec<Vec<usize>>> = (0..=l)
                .map(|k| {
                    all_tuples(n, k + 1)
                        .into_iter()
                        .filter(|t| !degenerate(t) && length(t) == Some(l))
                        .collect()
                })
                .collect();
            let boundaries = (0..=l)
                .map(|k| {
                    if k == 0 {
                        return IntMatrix::zeros(0, gens[0].len());
                    }
                    let row: HashMap<&Vec<usize>, usize> = gens[k - 1].iter().enumerate().map(|(i, t)| (t, i)).collect();
                    let mut m = IntMatrix::zeros(gens[k - 1].len(), gens[k].len());
                    for (j, t) in gens[k].iter().enumerate() {
                        for i in 1..k {
                            let mut face = t.clone();
                            face.remove(i);
                            if length(&face) != Some(l) {
                                continue;
                            }
                            // faces in I_{k-1} vanish in the quotient
                            if let Some(&r) = row.get(&face) {
                                m.add(r, j, if i % 2 == 0 { 1 } else { -1 });
                            } else {
                                assert!(degenerate(&face));
                            }
                        }
                    }
                    m
                })
                .collect();
            chain_homology(&ChainComplexZ::new(0, boundaries))
        })
        .collect()
}

/// Connected simple undirected graphs on `n` vertices, one per isomorphism
/// class.
pub fn connected_graphs(n: usize) -> Vec<Quiver> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let perms = permutations(n);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let chosen: Vec<(usize, usize)> = (0..pairs.len()).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
        let canon = perms
            .iter()
            .map(|p| {
                let mut es: Vec<(usize, usize)> =
                    chosen.iter().map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v]))).collect();
                es.sort();
                es
            })
            .min()
            .unwrap();
        if !seen.insert(canon) {
            continue;
        }
        let vs: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let es: Vec<(String, String, String)> = chosen
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| (format!("e{i}"), vs[u].clone(), vs[v].clone()))
            .collect();
        let g = Quiver::new(Kind::Undirected, &format!("g{n}_{mask}"), &vs, &es).unwrap();
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}
