//! Generators for the standard graph families.
//!
//! Vertices are named `v0..vn` for the path, cycle, alternating and
//! tournament families, `v0, w1..wn, x1..xm` for the dandelion `D(n, m)`,
//! and `p1..pn, q1..qm` for the bipartite families. Edges are `e0, e1, ...`
//! in construction order.

use std::fmt;
use std::str::FromStr;

use crate::quiver::{Kind, Quiver, QuiverError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Coherently oriented path with `n` edges.
    I(usize),
    /// Coherently oriented cycle with `n` edges.
    P(usize),
    /// Alternating path with `n` edges; `v0` is a source.
    A(usize),
    /// Transitive tournament on `n + 1` vertices, edges `(i, j)` for `i < j`.
    T(usize),
    /// `n` edges into `v0` followed by `m` edges out of it.
    D(usize, usize),
    /// Undirected half-graph: edges `{p_i, q_j}` for `i <= j`.
    B(usize),
    /// Complete bipartite digraph with every edge `p_i -> q_j`.
    K(usize, usize),
}

impl Family {
    /// Parses `name` and its integer parameters, e.g. `("D", [3, 2])`.
    pub fn from_name(name: &str, params: &[usize]) -> Result<Family> {
        let one = |ctor: fn(usize) -> Family| match params {
            [n] => Ok(ctor(*n)),
            _ => Err(QuiverError::BadParams(format!("{name} takes one parameter"))),
        };
        let two = |ctor: fn(usize, usize) -> Family| match params {
            [n, m] => Ok(ctor(*n, *m)),
            _ => Err(QuiverError::BadParams(format!("{name} takes two parameters"))),
        };
        match name {
            "I" => one(Family::I),
            "P" => one(Family::P),
            "A" => one(Family::A),
            "T" => one(Family::T),
            "B" => one(Family::B),
            "D" => two(Family::D),
            "K" => two(Family::K),
            _ => Err(QuiverError::BadParams(format!("unknown family `{name}`"))),
        }
    }

    pub fn build(self) -> Result<Quiver> {
        let bad = |msg: &str| Err(QuiverError::BadParams(format!("{self}: {msg}")));
        let path_vertices = |n: usize| (0..=n).map(|i| format!("v{i}")).collect::<Vec<_>>();
        let mut edges: Vec<(String, String)> = Vec::new();
        let (kind, vertices) = match self {
            Family::I(n) => {
                if n < 1 {
                    return bad("n >= 1 required");
                }
                edges.extend((0..n).map(|i| (format!("v{i}"), format!("v{}", i + 1))));
                (Kind::Digraph, path_vertices(n))
            }
            Family::P(n) => {
                if n < 1 {
                    return bad("n >= 1 required");
                }
                edges.extend((0..n).map(|i| (format!("v{i}"), format!("v{}", (i + 1) % n))));
                (Kind::Digraph, path_vertices(n - 1))
            }
            Family::A(n) => {
                if n < 1 {
                    return bad("n >= 1 required");
                }
                edges.extend((0..n).map(|i| {
                    let (a, b) = (format!("v{i}"), format!("v{}", i + 1));
                    if i % 2 == 0 { (a, b) } else { (b, a) }
                }));
                (Kind::Digraph, path_vertices(n))
            }
            Family::T(n) => {
                if n < 1 {
                    return bad("n >= 1 required");
                }
                for i in 0..=n {
                    edges.extend((i + 1..=n).map(|j| (format!("v{i}"), format!("v{j}"))));
                }
                (Kind::Digraph, path_vertices(n))
            }
            Family::D(n, m) => {
                let mut vs = vec!["v0".to_string()];
                vs.extend((1..=n).map(|i| format!("w{i}")));
                vs.extend((1..=m).map(|j| format!("x{j}")));
                edges.extend((1..=n).map(|i| (format!("w{i}"), "v0".to_string())));
                edges.extend((1..=m).map(|j| ("v0".to_string(), format!("x{j}"))));
                (Kind::Digraph, vs)
            }
            Family::B(n) => {
                if n < 1 {
                    return bad("n >= 1 required");
                }
                for i in 1..=n {
                    edges.extend((i..=n).map(|j| (format!("p{i}"), format!("q{j}"))));
                }
                (Kind::Undirected, bipartite_vertices(n, n))
            }
            Family::K(n, m) => {
                if n < 1 || m < 1 {
                    return bad("n, m >= 1 required");
                }
                for i in 1..=n {
                    edges.extend((1..=m).map(|j| (format!("p{i}"), format!("q{j}"))));
                }
                (Kind::Digraph, bipartite_vertices(n, m))
            }
        };
        let edges: Vec<(String, String, String)> = edges
            .into_iter()
            .enumerate()
            .map(|(i, (s, t))| (format!("e{i}"), s, t))
            .collect();
        Quiver::new(kind, &self.to_string(), &vertices, &edges)
    }
}

fn bipartite_vertices(n: usize, m: usize) -> Vec<String> {
    (1..=n).map(|i| format!("p{i}")).chain((1..=m).map(|j| format!("q{j}"))).collect()
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::I(n) => write!(f, "I{n}"),
            Family::P(n) => write!(f, "P{n}"),
            Family::A(n) => write!(f, "A{n}"),
            Family::T(n) => write!(f, "T{n}"),
            Family::D(n, m) => write!(f, "D{n},{m}"),
            Family::B(n) => write!(f, "B{n}"),
            Family::K(n, m) => write!(f, "K{n},{m}"),
        }
    }
}

impl FromStr for Family {
    type Err = QuiverError;

    /// Accepts `NAME` followed by comma- or space-separated parameters, e.g.
    /// `D3,2` or `K 5 5`.
    fn from_str(s: &str) -> Result<Family> {
        let s = s.trim();
        let split = s.find(|c: char| !c.is_ascii_alphabetic()).unwrap_or(s.len());
        let (name, rest) = s.split_at(split);
        let params = rest
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|p| !p.is_empty())
            .map(|p| p.parse::<usize>().map_err(|_| QuiverError::BadParams(format!("bad integer `{p}`"))))
            .collect::<Result<Vec<_>>>()?;
        Family::from_name(name, &params)
    }
}
