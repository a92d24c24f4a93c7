//! Structural predicates: alternation, stability, oriented and alternating
//! cycles.

use thiserror::Error;

use crate::quiver::Quiver;

/// Simple-cycle enumeration aborts past this many cycles.
pub const CYCLE_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PredicateError {
    #[error("more than {CYCLE_CAP} simple cycles; alternating-cycle search aborted")]
    CycleCapExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralPredicates {
    pub is_alternating: bool,
    pub has_oriented_cycle: bool,
    pub stable_vertices: Vec<String>,
    pub unstable_vertices: Vec<String>,
    pub has_alternating_cycle: bool,
}

pub fn structural_predicates(g: &Quiver) -> Result<StructuralPredicates, PredicateError> {
    let unstable = unstable_mask(g);
    let (stable_vertices, unstable_vertices) = g
        .vertices()
        .iter()
        .zip(&unstable)
        .fold((Vec::new(), Vec::new()), |(mut s, mut u), (v, &bad)| {
            if bad { u.push(v.clone()) } else { s.push(v.clone()) }
            (s, u)
        });
    Ok(StructuralPredicates {
        is_alternating: unstable_vertices.is_empty(),
        has_oriented_cycle: has_oriented_cycle(g),
        stable_vertices,
        unstable_vertices,
        has_alternating_cycle: has_alternating_cycle(g)?,
    })
}

/// `true` at vertices that are both a source and a target of some edge.
pub fn unstable_mask(g: &Quiver) -> Vec<bool> {
    let n = g.vertex_count();
    let (mut src, mut tgt) = (vec![false; n], vec![false; n]);
    for e in g.edges() {
        src[e.source] = true;
        tgt[e.target] = true;
    }
    src.iter().zip(&tgt).map(|(a, b)| *a && *b).collect()
}

pub fn is_alternating(g: &Quiver) -> bool {
    !unstable_mask(g).contains(&true)
}

/// Directed cycle search by iterative DFS colouring; self-loops count.
pub fn has_oriented_cycle(g: &Quiver) -> bool {
    let n = g.vertex_count();
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in g.edges() {
        out[e.source].push(e.target);
    }
    // 0 = new, 1 = on stack, 2 = done
    let mut colour = vec![0u8; n];
    for root in 0..n {
        if colour[root] != 0 {
            continue;
        }
        let mut stack = vec![(root, 0usize)];
        colour[root] = 1;
        while let Some(&mut (v, ref mut i)) = stack.last_mut() {
            if *i < out[v].len() {
                let w = out[v][*i];
                *i += 1;
                match colour[w] {
                    1 => return true,
                    0 => {
                        colour[w] = 1;
                        stack.push((w, 0));
                    }
                    _ => {}
                }
            } else {
                colour[v] = 2;
                stack.pop();
            }
        }
    }
    false
}

/// True if some embedded cycle of the underlying graph is alternating: every
/// vertex on it is the source of both or the target of both of its cycle
/// edges.
pub fn has_alternating_cycle(g: &Quiver) -> Result<bool, PredicateError> {
    let mut found = false;
    for_each_simple_cycle(g, |cycle| {
        let k = cycle.len();
        found = k % 2 == 0 && (0..k).all(|i| cycle[i].1 != cycle[(i + 1) % k].1);
        !found
    })?;
    Ok(found)
}

/// Visits every simple cycle of the underlying undirected multigraph as a
/// list of `(edge index, traversed along its orientation)`. Undirected inputs
/// use one dart per undirected edge. The visitor returns `false` to stop.
pub fn for_each_simple_cycle<F>(g: &Quiver, mut visit: F) -> Result<(), PredicateError>
where
    F: FnMut(&[(usize, bool)]) -> bool,
{
    let n = g.vertex_count();
    let mut adj: Vec<Vec<(usize, usize, bool)>> = vec![Vec::new(); n];
    let mut count = 0usize;
    for e in g.orbit_representatives() {
        let edge = &g.edges()[e];
        if edge.is_loop() {
            count += 1;
            if count > CYCLE_CAP {
                return Err(PredicateError::CycleCapExceeded);
            }
            if !visit(&[(e, true)]) {
                return Ok(());
            }
        } else {
            adj[edge.source].push((edge.target, e, true));
            adj[edge.target].push((edge.source, e, false));
        }
    }

    struct Search<'a, F> {
        adj: &'a [Vec<(usize, usize, bool)>],
        on_path: Vec<bool>,
        path: Vec<(usize, bool)>,
        root: usize,
        count: usize,
        visit: F,
    }

    impl<F: FnMut(&[(usize, bool)]) -> bool> Search<'_, F> {
        // Ok(false) stops the search
        fn extend(&mut self, v: usize) -> Result<bool, PredicateError> {
            for &(w, e, forward) in &self.adj[v] {
                if w == self.root {
                    // each cycle is met in both directions; keep the one
                    // whose first edge is smaller than its closing edge
                    let Some(&(first, _)) = self.path.first() else { continue };
                    if self.path.last().map(|p| p.0) == Some(e) || first >= e {
                        continue;
                    }
                    self.count += 1;
                    if self.count > CYCLE_CAP {
                        return Err(PredicateError::CycleCapExceeded);
                    }
                    self.path.push((e, forward));
                    let go_on = (self.visit)(&self.path);
                    self.path.pop();
                    if !go_on {
                        return Ok(false);
                    }
                } else if w > self.root && !self.on_path[w] {
                    self.on_path[w] = true;
                    self.path.push((e, forward));
                    let go_on = self.extend(w)?;
                    self.path.pop();
                    self.on_path[w] = false;
                    if !go_on {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }
    }

    let mut search = Search { adj: &adj, on_path: vec![false; n], path: Vec::new(), root: 0, count, visit: &mut visit };
    for root in 0..n {
        search.root = root;
        search.on_path[root] = true;
        let go_on = search.extend(root)?;
        search.on_path[root] = false;
        if !go_on {
            break;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::Family;
    use crate::quiver::Kind;

    #[test]
    fn alternating_path_predicates() {
        let p = structural_predicates(&Family::A(6).build().unwrap()).unwrap();
        assert!(p.is_alternating);
        assert!(p.unstable_vertices.is_empty());
        assert_eq!(p.stable_vertices.len(), 7);
        assert!(!p.has_oriented_cycle);
        assert!(!p.has_alternating_cycle);
    }

    #[test]
    fn tournament_predicates() {
        let p = structural_predicates(&Family::T(3).build().unwrap()).unwrap();
        assert!(!p.is_alternating);
        assert_eq!(p.unstable_vertices, vec!["v1", "v2"]);
        assert!(!p.has_oriented_cycle);
    }

    #[test]
    fn cycle_has_oriented_cycle() {
        assert!(has_oriented_cycle(&Family::P(3).build().unwrap()));
        assert!(has_oriented_cycle(&Family::P(1).build().unwrap()));
        assert!(!has_oriented_cycle(&Family::T(4).build().unwrap()));
    }

    #[test]
    fn counts_simple_cycles() {
        let count = |g: &Quiver| {
            let mut c = 0;
            for_each_simple_cycle(g, |_| {
                c += 1;
                true
            })
            .unwrap();
            c
        };
        // K4 has 7 simple cycles
        assert_eq!(count(&Family::T(3).build().unwrap()), 7);
        assert_eq!(count(&Family::P(5).build().unwrap()), 1);
        assert_eq!(count(&Family::P(2).build().unwrap()), 1);
        assert_eq!(count(&Family::P(1).build().unwrap()), 1);
        assert_eq!(count(&Family::I(5).build().unwrap()), 0);
        // K_{3,3}: 9 four-cycles + 6 six-cycles
        assert_eq!(count(&Family::K(3, 3).build().unwrap()), 15);
    }

    #[test]
    fn alternating_cycles() {
        // a -> b <- c -> d <- a
        let g = Quiver::digraph(
            "sq",
            &["a", "b", "c", "d"],
            &[("e0", "a", "b"), ("e1", "c", "b"), ("e2", "c", "d"), ("e3", "a", "d")],
        )
        .unwrap();
        assert!(has_alternating_cycle(&g).unwrap());
        assert!(!has_alternating_cycle(&Family::P(4).build().unwrap()).unwrap());
        // v0 -> v3 <- v1 -> v2 <- v0
        assert!(has_alternating_cycle(&Family::T(3).build().unwrap()).unwrap());
        assert!(!has_alternating_cycle(&Family::T(2).build().unwrap()).unwrap());
        assert!(has_alternating_cycle(&Family::K(2, 2).build().unwrap()).unwrap());
        let parallel = Quiver::new(Kind::Quiver, "pp", &["a", "b"], &[("x", "a", "b"), ("y", "a", "b")]).unwrap();
        assert!(has_alternating_cycle(&parallel).unwrap());
    }
}
