//! Text formats: graphs, complexes and TSV tables.
//!
//! Graphs are line based. The first non-comment line is a header
//! `quiver <name>`, `digraph <name>` or `graph <name>`, followed by
//! `v <id>` and `e <id> <source> <target>` lines. Under `graph` each `e`
//! line declares one undirected edge. `#` starts a comment.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use num_bigint::BigInt;
use thiserror::Error;

use crate::complex::SimplicialComplex;
use crate::homology::{HomologyProfile, HomologyRecord};
use crate::magnitude::MagnitudeTable;
use crate::quiver::{Kind, Quiver, QuiverError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: {message}")]
    KindViolation { line: usize, message: String },
}

impl FormatError {
    pub fn line(&self) -> usize {
        match self {
            FormatError::Parse { line, .. } | FormatError::KindViolation { line, .. } => *line,
        }
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse { line, message: message.into() }
}

/// Non-empty, comment-stripped lines with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let words: Vec<&str> = body.split_whitespace().collect();
        (!words.is_empty()).then_some((i + 1, words))
    })
}

pub fn parse_graph(text: &str) -> Result<Quiver, FormatError> {
    let mut lines = content_lines(text);
    let Some((header_line, header)) = lines.next() else {
        return Err(parse_err(1, "missing header"));
    };
    let kind = match header[0] {
        "quiver" => Kind::Quiver,
        "digraph" => Kind::Digraph,
        "graph" => Kind::Undirected,
        other => return Err(parse_err(header_line, format!("expected a header, found `{other}`"))),
    };
    if header.len() > 2 {
        return Err(parse_err(header_line, "header takes a single name"));
    }
    let name = header.get(1).copied().unwrap_or("g");

    let mut vertices: Vec<&str> = Vec::new();
    let mut vertex_seen: HashSet<&str> = HashSet::new();
    let mut edges: Vec<(&str, &str, &str)> = Vec::new();
    let mut edge_seen: HashSet<&str> = HashSet::new();
    let mut pairs: HashMap<(&str, &str), &str> = HashMap::new();
    for (line, words) in lines {
        match words.as_slice() {
            ["v", id] => {
                if !vertex_seen.insert(id) {
                    return Err(parse_err(line, format!("duplicate vertex `{id}`")));
                }
                vertices.push(id);
            }
            ["e", id, s, t] => {
                for v in [s, t] {
                    if !vertex_seen.contains(v) {
                        return Err(parse_err(line, format!("unknown vertex `{v}`")));
                    }
                }
                if !edge_seen.insert(id) {
                    return Err(parse_err(line, format!("duplicate edge `{id}`")));
                }
                if kind == Kind::Digraph {
                    if let Some(prev) = pairs.insert((s, t), id) {
                        return Err(FormatError::KindViolation {
                            line,
                            message: format!("digraph has parallel edges `{prev}` and `{id}` from `{s}` to `{t}`"),
                        });
                    }
                }
                edges.push((id, s, t));
            }
            ["v", ..] => return Err(parse_err(line, "expected `v <id>`")),
            ["e", ..] => return Err(parse_err(line, "expected `e <id> <source> <target>`")),
            [other, ..] => return Err(parse_err(line, format!("unknown record `{other}`"))),
            [] => unreachable!("blank lines are skipped"),
        }
    }
    Quiver::new(kind, name, &vertices, &edges).map_err(|e| match e {
        QuiverError::ParallelEdge(..) => FormatError::KindViolation { line: header_line, message: e.to_string() },
        other => parse_err(header_line, other.to_string()),
    })
}

/// Serializes a graph; undirected graphs emit one `e` line per edge, using
/// the orbit label as id.
pub fn write_graph(g: &Quiver) -> String {
    let mut out = format!("{} {}\n", g.kind().keyword(), g.name());
    for v in g.vertices() {
        writeln!(out, "v {v}").unwrap();
    }
    let edges: Vec<usize> = if g.kind() == Kind::Undirected {
        g.orbit_representatives()
    } else {
        (0..g.edge_count()).collect()
    };
    for e in edges {
        let edge = &g.edges()[e];
        writeln!(out, "e {} {} {}", g.orbit_label(e), g.vertices()[edge.source], g.vertices()[edge.target]).unwrap();
    }
    out
}

/// Parses the `dim <d>` complex format. The empty face is implicit.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex, FormatError> {
    let mut lines = content_lines(text);
    let Some((header_line, header)) = lines.next() else {
        return Err(parse_err(1, "missing `dim` header"));
    };
    let dim: isize = match header.as_slice() {
        ["dim", d] => d.parse().map_err(|_| parse_err(header_line, format!("bad dimension `{d}`")))?,
        _ => return Err(parse_err(header_line, "expected `dim <d>`")),
    };
    let mut faces: Vec<Vec<&str>> = Vec::new();
    let mut last_line = header_line;
    for (line, words) in lines {
        let mut seen = HashSet::new();
        if let Some(w) = words.iter().find(|w| !seen.insert(**w)) {
            return Err(parse_err(line, format!("repeated label `{w}`")));
        }
        faces.push(words);
        last_line = line;
    }
    let c = SimplicialComplex::from_all_faces(&faces).map_err(|e| parse_err(last_line, e.to_string()))?;
    if c.dim() != dim {
        return Err(parse_err(header_line, format!("header says dim {dim}, faces give {}", c.dim())));
    }
    Ok(c)
}

pub fn write_complex(c: &SimplicialComplex) -> String {
    c.to_string()
}

/// Torsion column: comma-separated divisor chain, or `-`.
pub fn torsion_cell(torsion: &[BigInt]) -> String {
    if torsion.is_empty() {
        "-".to_string()
    } else {
        torsion.iter().map(BigInt::to_string).collect::<Vec<_>>().join(",")
    }
}

/// Renders a table as TSV, or as space-aligned columns when `pretty`.
pub fn render_table(header: &[&str], rows: &[Vec<String>], pretty: bool) -> String {
    let mut out = String::new();
    let all = std::iter::once(header.iter().map(|h| h.to_string()).collect::<Vec<_>>()).chain(rows.iter().cloned());
    if !pretty {
        for row in all {
            writeln!(out, "{}", row.join("\t")).unwrap();
        }
        return out;
    }
    let all: Vec<Vec<String>> = all.collect();
    let widths: Vec<usize> = (0..header.len())
        .map(|c| all.iter().map(|r| r.get(c).map_or(0, |s| s.chars().count())).max().unwrap_or(0))
        .collect();
    for row in &all {
        let cells: Vec<String> = row.iter().zip(&widths).map(|(s, w)| format!("{s:<w$}")).collect();
        writeln!(out, "{}", cells.join("  ").trim_end()).unwrap();
    }
    out
}

fn homology_row(r: &HomologyRecord) -> Vec<String> {
    vec![r.degree.to_string(), r.betti.to_string(), torsion_cell(&r.torsion)]
}

pub fn write_homology(p: &HomologyProfile, pretty: bool) -> String {
    let rows: Vec<Vec<String>> = p.records.iter().map(homology_row).collect();
    render_table(&["degree", "betti", "torsion"], &rows, pretty)
}

pub fn write_magnitude(t: &MagnitudeTable, pretty: bool) -> String {
    let rows: Vec<Vec<String>> = t
        .rows()
        .map(|(k, l, r)| vec![k.to_string(), l.to_string(), r.betti.to_string(), torsion_cell(&r.torsion)])
        .collect();
    render_table(&["k", "l", "betti", "torsion"], &rows, pretty)
}
