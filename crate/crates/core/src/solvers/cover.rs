//! Exact minimum set cover over vertex bitsets.
//!
//! Elements and candidates are both vertices of one host graph. Candidate `c`
//! covers `covers[c]`; element `e` is covered by `coverers[e]`. Total
//! domination uses open neighborhoods for both, plain domination uses closed
//! ones.
//!
//! The search branches on the uncovered element with the fewest available
//! coverers. A branch that chooses candidate `c` is followed by siblings in
//! which `c` is forbidden, so every cover is reached along exactly one path.
//! Bounds: a greedy packing of uncovered elements with pairwise disjoint
//! coverer sets, and `ceil(uncovered / max gain)`.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub(crate) struct CoverProblem {
    n: usize,
    universe: VertexSet,
    allowed: VertexSet,
    covers: Vec<VertexSet>,
    coverers: Vec<VertexSet>,
    /// Universe elements by ascending coverer count, then index.
    order: Vec<usize>,
}

impl CoverProblem {
    /// Cover `universe` with open neighborhoods of vertices from `allowed`.
    pub fn total(g: &Graph, universe: VertexSet, allowed: VertexSet) -> Self {
        let nb: Vec<VertexSet> = (0..g.n()).map(|v| g.neighbors(v).clone()).collect();
        Self::build(nb, universe, allowed)
    }

    /// Cover `universe` with closed neighborhoods of vertices from `allowed`.
    pub fn closed(g: &Graph, universe: VertexSet, allowed: VertexSet) -> Self {
        let nb: Vec<VertexSet> = (0..g.n())
            .map(|v| {
                let mut s = g.neighbors(v).clone();
                s.insert(v);
                s
            })
            .collect();
        Self::build(nb, universe, allowed)
    }

    // Neighborhood relations are symmetric, so one table serves both roles.
    fn build(nb: Vec<VertexSet>, universe: VertexSet, allowed: VertexSet) -> Self {
        let n = nb.len();
        let covers: Vec<VertexSet> = nb.iter().map(|s| s.intersection(&universe)).collect();
        let coverers: Vec<VertexSet> = nb.iter().map(|s| s.intersection(&allowed)).collect();
        let mut order: Vec<usize> = universe.to_vec();
        order.sort_by_key(|&e| (coverers[e].len(), e));
        Self {
            n,
            universe,
            allowed,
            covers,
            coverers,
            order,
        }
    }

    /// Greedy cover: repeatedly take the candidate covering most uncovered
    /// elements (lowest index on ties). `None` if some element is uncoverable.
    fn greedy(&self) -> Option<Vec<usize>> {
        let mut uncovered = self.universe.clone();
        let mut chosen = Vec::new();
        while !uncovered.is_empty() {
            let (gain, c) = self
                .allowed
                .iter()
                .map(|c| (self.covers[c].intersection_len(&uncovered), c))
                .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))?;
            if gain == 0 {
                return None;
            }
            chosen.push(c);
            uncovered.difference_with(&self.covers[c]);
        }
        Some(chosen)
    }

    fn to_set(&self, members: &[usize]) -> VertexSet {
        let mut s = VertexSet::new(self.n);
        for &v in members {
            s.insert(v);
        }
        s
    }

    /// Minimum cover size and one optimal cover, or `None` if infeasible.
    pub fn minimize(&self) -> Option<(usize, VertexSet)> {
        let seed = self.greedy()?;
        let mut search = Search::new(self, Mode::Minimize, seed.len());
        search.best = Some(self.to_set(&seed));
        search.run(&VertexSet::new(self.n), &VertexSet::new(self.n));
        let best = search.best.expect("seeded");
        Some((best.len(), best))
    }

    /// A cover of size at most `k` containing `forced_in` and avoiding
    /// `forced_out`, if one exists.
    pub fn feasible(&self, k: usize, forced_in: &VertexSet, forced_out: &VertexSet) -> Option<VertexSet> {
        let mut search = Search::new(self, Mode::Feasible, k + 1);
        search.run(forced_in, forced_out);
        search.best
    }

    /// The least optimal cover in bitmap order, given the optimum `k` and any
    /// optimal cover `witness`.
    pub fn lex_least(&self, k: usize, witness: VertexSet) -> VertexSet {
        let mut forced_in = VertexSet::new(self.n);
        let mut forced_out = self.allowed.complement();
        let mut witness = witness;
        for v in 0..self.n {
            if forced_in.len() == k {
                break;
            }
            if forced_out.contains(v) {
                continue;
            }
            if witness.contains(v) {
                forced_in.insert(v);
                continue;
            }
            forced_in.insert(v);
            let found = if self.covers[v].is_empty() {
                None
            } else {
                self.feasible(k, &forced_in, &forced_out)
            };
            match found {
                Some(w) => witness = w,
                None => {
                    forced_in.remove(v);
                    forced_out.insert(v);
                }
            }
        }
        debug_assert_eq!(forced_in, witness);
        forced_in
    }

    /// Every cover of size exactly `k`, where `k` is the optimum, in bitmap
    /// order. Fails with `LimitExceeded` once more than `limit` are found.
    pub fn all_optimal(&self, k: usize, limit: usize) -> Result<Vec<VertexSet>> {
        let mut search = Search::new(self, Mode::Enumerate { limit }, k + 1);
        search.run(&VertexSet::new(self.n), &VertexSet::new(self.n));
        if search.exceeded {
            return Err(Error::LimitExceeded { limit });
        }
        let mut found = search.found;
        found.sort();
        Ok(found)
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Minimize,
    Feasible,
    Enumerate { limit: usize },
}

struct Search<'a> {
    p: &'a CoverProblem,
    mode: Mode,
    /// Prune any node with `chosen + lower_bound >= bound`.
    bound: usize,
    best: Option<VertexSet>,
    found: Vec<VertexSet>,
    exceeded: bool,
    stop: bool,
}

impl<'a> Search<'a> {
    fn new(p: &'a CoverProblem, mode: Mode, bound: usize) -> Self {
        Self {
            p,
            mode,
            bound,
            best: None,
            found: Vec::new(),
            exceeded: false,
            stop: false,
        }
    }

    fn run(&mut self, forced_in: &VertexSet, forced_out: &VertexSet) {
        let mut uncovered = self.p.universe.clone();
        for c in forced_in {
            uncovered.difference_with(&self.p.covers[c]);
        }
        let mut available = self.p.allowed.difference(forced_out);
        available.difference_with(forced_in);
        let mut chosen = forced_in.to_vec();
        self.go(uncovered, available, &mut chosen);
    }

    fn lower_bound(&self, uncovered: &VertexSet, available: &VertexSet) -> Option<usize> {
        let words = available.words().len();
        let mut used = vec![0u64; words];
        let mut packing = 0;
        for &e in &self.p.order {
            if !uncovered.contains(e) {
                continue;
            }
            let cand = self.p.coverers[e].words();
            let av = available.words();
            let mut empty = true;
            let mut disjoint = true;
            for i in 0..words {
                let w = cand[i] & av[i];
                if w != 0 {
                    empty = false;
                    if w & used[i] != 0 {
                        disjoint = false;
                    }
                }
            }
            if empty {
                return None;
            }
            if disjoint {
                packing += 1;
                for i in 0..words {
                    used[i] |= cand[i] & av[i];
                }
            }
        }
        let remaining = uncovered.len();
        let max_gain = available
            .iter()
            .map(|c| self.p.covers[c].intersection_len(uncovered))
            .max()
            .unwrap_or(0);
        if max_gain == 0 {
            return None;
        }
        Some(packing.max(remaining.div_ceil(max_gain)))
    }

    fn record(&mut self, chosen: &[usize]) {
        let set = self.p.to_set(chosen);
        match self.mode {
            Mode::Minimize => {
                self.bound = chosen.len();
                self.best = Some(set);
            }
            Mode::Feasible => {
                self.best = Some(set);
                self.stop = true;
            }
            Mode::Enumerate { limit } => {
                self.found.push(set);
                if self.found.len() > limit {
                    self.exceeded = true;
                    self.stop = true;
                }
            }
        }
    }

    fn go(&mut self, uncovered: VertexSet, mut available: VertexSet, chosen: &mut Vec<usize>) {
        if self.stop {
            return;
        }
        if uncovered.is_empty() {
            if chosen.len() < self.bound {
                self.record(chosen);
            }
            return;
        }
        let Some(lb) = self.lower_bound(&uncovered, &available) else {
            return;
        };
        if chosen.len() + lb >= self.bound {
            return;
        }
        // Branch element: fewest available coverers, lowest index on ties.
        let mut pick = usize::MAX;
        let mut pick_count = usize::MAX;
        for e in uncovered.iter() {
            let count = self.p.coverers[e].intersection_len(&available);
            if count < pick_count {
                pick = e;
                pick_count = count;
                if count <= 1 {
                    break;
                }
            }
        }
        let mut candidates: Vec<(usize, usize)> = self.p.coverers[pick]
            .intersection(&available)
            .iter()
            .map(|c| (self.p.covers[c].intersection_len(&uncovered), c))
            .collect();
        candidates.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        for (_, c) in candidates {
            available.remove(c);
            chosen.push(c);
            self.go(uncovered.difference(&self.p.covers[c]), available.clone(), chosen);
            chosen.pop();
            if self.stop || chosen.len() + 1 >= self.bound {
                return;
            }
        }
    }
}
