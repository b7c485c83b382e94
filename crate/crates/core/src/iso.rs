//! Canonical forms and isomorphism testing for small graphs.
//!
//! The canonical code of a graph is the maximum, over a set of candidate
//! relabelings, of its upper-triangle adjacency bitstring in graph6 order
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`, first bit most significant).
//! Candidate relabelings are the leaves of an individualization/refinement
//! tree started from the degree partition, so every candidate is derived from
//! isomorphism-invariant data only and isomorphic graphs get equal codes.

use std::cmp::Ordering;

use crate::graph::Graph;

/// Canonical code plus the relabeling that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub n: usize,
    /// Adjacency bits packed most-significant-first.
    pub code: Vec<u64>,
    /// `labeling[new] = old`.
    pub labeling: Vec<usize>,
}

impl CanonicalForm {
    /// The graph relabelled so that its adjacency code is `code`.
    pub fn graph(&self, g: &Graph) -> Graph {
        let mut out = Graph::empty(self.n).expect("n >= 1");
        for j in 1..self.n {
            for i in 0..j {
                if g.has_edge(self.labeling[i], self.labeling[j]) {
                    out.add_edge(i, j).expect("in range");
                }
            }
        }
        out
    }
}

impl PartialOrd for CanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalForm {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, &self.code).cmp(&(other.n, &other.code))
    }
}

fn code_for(g: &Graph, labeling: &[usize]) -> Vec<u64> {
    let n = labeling.len();
    let bits = n * n.saturating_sub(1) / 2;
    let mut code = vec![0u64; bits.div_ceil(64).max(1)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(labeling[i], labeling[j]) {
                code[k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    code
}

/// Refines `colors` to the coarsest equitable partition finer than it.
/// Colors are renumbered `0..cells` by sorted signature.
fn refine(g: &Graph, colors: &mut [usize]) {
    let n = colors.len();
    let mut cells = count_cells(colors);
    loop {
        let mut sigs: Vec<(usize, Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb, v)
            })
            .collect();
        sigs.sort_unstable();
        let mut rank = 0;
        for i in 0..n {
            if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                rank += 1;
            }
            colors[sigs[i].2] = rank;
        }
        let new_cells = rank + 1;
        if new_cells == cells {
            return;
        }
        cells = new_cells;
    }
}

fn count_cells(colors: &[usize]) -> usize {
    let mut seen: Vec<usize> = colors.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, colors: Vec<usize>) {
        let n = colors.len();
        let mut sizes = vec![0usize; n];
        for &c in &colors {
            sizes[c] += 1;
        }
        let target = (0..n).find(|&c| sizes[c] > 1);
        let Some(target) = target else {
            let mut labeling = vec![0; n];
            for (v, &c) in colors.iter().enumerate() {
                labeling[c] = v;
            }
            let code = code_for(self.g, &labeling);
            if self.best.as_ref().is_none_or(|(b, _)| code > *b) {
                self.best = Some((code, labeling));
            }
            return;
        };
        for v in (0..n).filter(|&v| colors[v] == target) {
            let mut next: Vec<usize> = colors.iter().map(|&c| 2 * c).collect();
            next[v] += 1;
            refine(self.g, &mut next);
            self.descend(next);
        }
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.n();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    refine(g, &mut colors);
    let mut search = Search { g, best: None };
    search.descend(colors);
    let (code, labeling) = search.best.expect("at least one leaf");
    CanonicalForm { n, code, labeling }
}

pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_form(g).graph(g)
}

fn degree_sequence(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    d.sort_unstable();
    d
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    if degree_sequence(a) != degree_sequence(b) {
        return false;
    }
    canonical_form(a).code == canonical_form(b).code
}
