//! Maximum 2-packings: independent sets in the square graph.
//!
//! Branching takes vertices in increasing order, including before excluding,
//! so the first maximum set reached is the bitmap-least one.

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

use super::SolveResult;

struct Search {
    conflicts: Vec<VertexSet>,
    best: Vec<usize>,
}

impl Search {
    fn go(&mut self, candidates: VertexSet, chosen: &mut Vec<usize>) {
        if chosen.len() > self.best.len() {
            self.best = chosen.clone();
        }
        if chosen.len() + candidates.len() <= self.best.len() {
            return;
        }
        let Some(v) = candidates.first() else {
            return;
        };
        let mut rest = candidates;
        rest.remove(v);
        chosen.push(v);
        self.go(rest.difference(&self.conflicts[v]), chosen);
        chosen.pop();
        self.go(rest, chosen);
    }
}

pub(super) fn max_two_packing(g: &Graph) -> SolveResult {
    let square = g.square();
    let mut search = Search {
        conflicts: (0..g.n()).map(|v| square.neighbors(v).clone()).collect(),
        best: Vec::new(),
    };
    search.go(VertexSet::full(g.n()), &mut Vec::new());
    let certificate = VertexSet::from_vertices(g.n(), search.best.iter().copied()).expect("in range");
    SolveResult {
        value: certificate.len(),
        certificate,
    }
}
