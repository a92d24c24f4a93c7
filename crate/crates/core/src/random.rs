//! Seedable random generators for fuzzing and experiments.
//!
//! Vertices are `v0, v1, ...` and edges `e0, e1, ...`, like the family
//! generators.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::minor::{compose_minor, contract_edge, MinorMorphism};
use crate::quiver::{Edge, Kind, Quiver, UnionFind};

fn names(prefix: char, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

fn assemble(kind: Kind, name: &str, n: usize, pairs: &[(usize, usize)]) -> Quiver {
    let edges = pairs
        .iter()
        .enumerate()
        .map(|(i, &(source, target))| Edge { id: format!("e{i}"), source, target })
        .collect();
    Quiver::from_parts(kind, name, names('v', n), edges, None).expect("generated structure is valid")
}

/// Digraph with `n` vertices and `min(m, n(n-1))` distinct non-loop edges.
pub fn random_digraph<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize) -> Quiver {
    let mut all: Vec<(usize, usize)> = (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))).collect();
    all.shuffle(rng);
    all.truncate(m);
    assemble(Kind::Digraph, "random", n, &all)
}

/// Digraph without oriented cycles: edges respect a random vertex order.
pub fn random_dag<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize) -> Quiver {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut all: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    all.shuffle(rng);
    all.truncate(m);
    let pairs: Vec<(usize, usize)> = all.into_iter().map(|(i, j)| (order[i], order[j])).collect();
    assemble(Kind::Digraph, "dag", n, &pairs)
}

/// Connected directed tree with `edges` edges and random orientations.
pub fn random_directed_tree<R: Rng + ?Sized>(rng: &mut R, edges: usize) -> Quiver {
    let n = edges + 1;
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let pairs: Vec<(usize, usize)> = (1..n)
        .map(|i| {
            let (a, b) = (order[rng.gen_range(0..i)], order[i]);
            if rng.gen_bool(0.5) { (a, b) } else { (b, a) }
        })
        .collect();
    assemble(Kind::Digraph, "tree", n, &pairs)
}

/// Directed forest on `n` vertices with `min(edges, n - 1)` edges.
pub fn random_directed_forest<R: Rng + ?Sized>(rng: &mut R, n: usize, edges: usize) -> Quiver {
    let mut uf = UnionFind::new(n);
    let mut pairs = Vec::new();
    let mut candidates: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    candidates.shuffle(rng);
    for (u, v) in candidates {
        if pairs.len() == edges {
            break;
        }
        if uf.union(u, v) {
            pairs.push(if rng.gen_bool(0.5) { (u, v) } else { (v, u) });
        }
    }
    assemble(Kind::Digraph, "forest", n, &pairs)
}

/// Quiver with `m` edges; loops and parallel edges allowed.
pub fn random_quiver<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize) -> Quiver {
    assert!(n > 0 || m == 0, "edges need vertices");
    let pairs: Vec<(usize, usize)> = (0..m).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect();
    assemble(Kind::Quiver, "quiver", n, &pairs)
}

/// Simple undirected graph with `min(m, n(n-1)/2)` edges.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize) -> Quiver {
    let mut all: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    all.shuffle(rng);
    all.truncate(m);
    let vs = names('v', n);
    let edges: Vec<(String, String, String)> = all
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| (format!("e{i}"), vs[u].clone(), vs[v].clone()))
        .collect();
    Quiver::new(Kind::Undirected, "graph", &vs, &edges).expect("generated structure is valid")
}

/// Composite of up to `steps` random edge contractions, skipping loops.
/// Returns the identity when nothing can be contracted.
pub fn random_contraction<R: Rng + ?Sized>(rng: &mut R, g: &Quiver, steps: usize) -> MinorMorphism {
    let mut total = MinorMorphism::identity(g);
    let mut current = g.clone();
    for _ in 0..steps {
        let candidates: Vec<&Edge> = current.edges().iter().filter(|e| !e.is_loop()).collect();
        let Some(edge) = candidates.choose(rng) else { break };
        let id = edge.id.clone();
        let (next, step) = contract_edge(&current, &id).expect("candidate is a non-loop edge");
        total = compose_minor(&total, &step).expect("codomain matches");
        current = next;
    }
    total
}
