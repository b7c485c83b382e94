//! Brute-force reference solvers.
//!
//! Subsets are enumerated by ascending cardinality, and within one size in
//! lexicographic order of their member lists, using plain `u32` masks. No
//! pruning beyond cardinality. These exist to cross-check the main solvers.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

use super::SolveResult;

pub const MAX_NAIVE_VERTICES: usize = 24;

fn masks(g: &Graph, closed: bool) -> Result<Vec<u32>> {
    if g.n() > MAX_NAIVE_VERTICES {
        return Err(Error::TooLarge { n: g.n(), max: MAX_NAIVE_VERTICES });
    }
    Ok((0..g.n())
        .map(|v| {
            let mut m = 0u32;
            for u in 0..g.n() {
                if g.has_edge(v, u) || (closed && u == v) {
                    m |= 1 << u;
                }
            }
            m
        })
        .collect())
}

fn result(n: usize, members: &[usize]) -> SolveResult {
    SolveResult {
        value: members.len(),
        certificate: VertexSet::from_vertices(n, members.iter().copied()).expect("in range"),
    }
}

fn min_cover(n: usize, masks: &[u32]) -> SolveResult {
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    for k in 0..=n {
        for combo in (0..n).combinations(k) {
            let covered = combo.iter().fold(0u32, |acc, &v| acc | masks[v]);
            if covered == full {
                return result(n, &combo);
            }
        }
    }
    unreachable!("the full vertex set covers whenever a cover exists")
}

pub fn gamma_t_naive(g: &Graph) -> Result<SolveResult> {
    let m = masks(g, false)?;
    if let Some(v) = m.iter().position(|&x| x == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    Ok(min_cover(g.n(), &m))
}

pub fn gamma_naive(g: &Graph) -> Result<SolveResult> {
    let m = masks(g, true)?;
    Ok(min_cover(g.n(), &m))
}

pub fn rho2_naive(g: &Graph) -> Result<SolveResult> {
    let m = masks(g, true)?;
    let n = g.n();
    let mut best = vec![0];
    for k in 2..=n {
        let found = (0..n).combinations(k).find(|combo| {
            let mut seen = 0u32;
            combo.iter().all(|&v| {
                let ok = seen & m[v] == 0;
                seen |= m[v];
                ok
            })
        });
        match found {
            Some(combo) => best = combo,
            None => break,
        }
    }
    Ok(result(n, &best))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_graphs() {
        assert_eq!(gamma_t_naive(&Graph::k2()).unwrap().value, 2);
        assert_eq!(gamma_t_naive(&Graph::path(3).unwrap()).unwrap().value, 2);
        assert_eq!(gamma_naive(&Graph::path(6).unwrap()).unwrap().value, 2);
        assert_eq!(rho2_naive(&Graph::path(6).unwrap()).unwrap().value, 2);
        assert_eq!(rho2_naive(&Graph::cycle(6).unwrap()).unwrap().value, 2);
        assert_eq!(rho2_naive(&Graph::complete(4).unwrap()).unwrap().value, 1);
        assert_eq!(gamma_t_naive(&Graph::cycle(6).unwrap()).unwrap().value, 4);
    }

    #[test]
    fn guards() {
        let big = Graph::path(25).unwrap();
        assert!(matches!(gamma_t_naive(&big), Err(Error::TooLarge { .. })));
        assert!(matches!(gamma_t_naive(&Graph::empty(2).unwrap()), Err(Error::IsolatedVertex(0))));
    }
}
