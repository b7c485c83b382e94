//! Simple undirected graphs on vertices `0..n` and the neighborhood algebra
//! used by every other module.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A finite simple undirected graph with at least one vertex.
///
/// Adjacency is stored as one [`VertexSet`] per vertex and is always
/// symmetric and irreflexive.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("a graph needs at least one vertex".into()));
        }
        Ok(Self {
            adj: vec![VertexSet::new(n); n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds the edge `uv`. Loops are rejected; repeated edges are no-ops.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for v in 1..n {
            g.add_edge(v - 1, v)?;
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
        }
        let mut g = Self::path(n)?;
        g.add_edge(n - 1, 0)?;
        Ok(g)
    }

    /// Shorthand for the single edge.
    pub fn k2() -> Self {
        Self::complete(2).expect("K2 is valid")
    }

    /// `k` disjoint edges; edge `i` joins `i` and `i + k`.
    pub fn k_copies_k2(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("kK2 needs k >= 1".into()));
        }
        let mut g = Self::empty(2 * k)?;
        for i in 0..k {
            g.add_edge(i, i + k)?;
        }
        Ok(g)
    }

    /// Vertices of `self` keep their labels; vertices of `other` are shifted
    /// by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n() + other.n();
        let mut g = Graph::empty(n).expect("n >= 2");
        let shift = self.n();
        for (u, v) in self.edges() {
            g.add_edge(u, v).expect("in range");
        }
        for (u, v) in other.edges() {
            g.add_edge(u + shift, v + shift).expect("in range");
        }
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Borrowed open neighborhood. Panics if `v` is out of range.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    fn check_set(&self, x: &VertexSet) -> Result<()> {
        if x.capacity() == self.n() {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!(
                "vertex set over {} vertices used with graph on {}",
                x.capacity(),
                self.n()
            )))
        }
    }

    /// `N(v)`.
    pub fn neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adj[v].clone())
    }

    /// `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        let mut s = self.adj[v].clone();
        s.insert(v);
        Ok(s)
    }

    /// `N(X)`, the union of the open neighborhoods of the members of `X`.
    pub fn set_neighborhood(&self, x: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.n());
        for v in x {
            out.union_with(&self.adj[v]);
        }
        out
    }

    pub fn is_dominating(&self, s: &VertexSet) -> bool {
        let mut covered = self.set_neighborhood(s);
        covered.union_with(s);
        covered.len() == self.n()
    }

    pub fn is_total_dominating(&self, s: &VertexSet) -> bool {
        self.set_neighborhood(s).len() == self.n()
    }

    /// Whether `x` totally dominates `y`, i.e. `y ⊆ N(x)`.
    pub fn totally_dominates(&self, x: &VertexSet, y: &VertexSet) -> bool {
        y.is_subset(&self.set_neighborhood(x))
    }

    /// `pn(u, X) = {w : N(w) ∩ X = {u}}`.
    pub fn private_neighbors(&self, u: usize, x: &VertexSet) -> Result<VertexSet> {
        self.check_vertex(u)?;
        self.check_set(x)?;
        if !x.contains(u) {
            return Err(Error::InvalidParameter(format!("vertex {u} is not in X")));
        }
        let mut out = VertexSet::new(self.n());
        for w in self.adj[u].iter() {
            if self.adj[w].intersection_len(x) == 1 {
                out.insert(w);
            }
        }
        Ok(out)
    }

    /// The subgraph induced by `x`, relabelled `0..|x|` in increasing order of
    /// the original labels, together with the new-to-old vertex map.
    pub fn induced_subgraph(&self, x: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(x)?;
        let old: Vec<usize> = x.to_vec();
        if old.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut new_of = vec![usize::MAX; self.n()];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let mut g = Graph::empty(old.len())?;
        for (i, &v) in old.iter().enumerate() {
            for w in self.adj[v].intersection(x).iter() {
                if new_of[w] > i {
                    g.add_edge(i, new_of[w])?;
                }
            }
        }
        Ok((g, old))
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.isolated_vertex().is_some()
    }

    pub fn isolated_vertex(&self) -> Option<usize> {
        self.adj.iter().position(VertexSet::is_empty)
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = VertexSet::new(n);
        let mut out = Vec::new();
        for start in 0..n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::new(n);
            let mut queue = VecDeque::from([start]);
            seen.insert(start);
            while let Some(v) = queue.pop_front() {
                comp.insert(v);
                for w in self.adj[v].iter() {
                    if !seen.contains(w) {
                        seen.insert(w);
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Whether the graph is exactly the single edge `K2`.
    pub fn is_k2(&self) -> bool {
        self.n() == 2 && self.has_edge(0, 1)
    }

    /// The square graph: `uv` is an edge iff `0 < dist(u, v) <= 2`.
    pub fn square(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::empty(n).expect("n >= 1");
        for v in 0..n {
            let mut reach = self.set_neighborhood(&self.adj[v]);
            reach.union_with(&self.adj[v]);
            reach.remove(v);
            g.adj[v] = reach;
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, v.iter().copied()).unwrap()
    }

    #[test]
    fn neighborhoods() {
        let k2 = Graph::k2();
        assert_eq!(k2.neighborhood(0).unwrap().to_vec(), vec![1]);
        assert_eq!(k2.closed_neighborhood(0).unwrap().to_vec(), vec![0, 1]);
        let p3 = Graph::path(3).unwrap();
        assert_eq!(p3.neighborhood(1).unwrap().to_vec(), vec![0, 2]);
        assert_eq!(p3.closed_neighborhood(1).unwrap().to_vec(), vec![0, 1, 2]);
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(c6.closed_neighborhood(2).unwrap().to_vec(), vec![1, 2, 3]);
        assert!(matches!(p3.neighborhood(3), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn set_neighborhoods() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(p3.set_neighborhood(&set(3, &[1])).to_vec(), vec![0, 2]);
        assert_eq!(p3.set_neighborhood(&set(3, &[0, 2])).to_vec(), vec![1]);
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(c6.set_neighborhood(&set(6, &[0, 1, 3, 4])).len(), 6);
    }

    #[test]
    fn domination_predicates() {
        let p3 = Graph::path(3).unwrap();
        assert!(p3.is_dominating(&set(3, &[1])));
        assert!(!p3.is_total_dominating(&set(3, &[1])));
        let p4 = Graph::path(4).unwrap();
        assert!(p4.is_total_dominating(&set(4, &[1, 2])));
        let c6 = Graph::cycle(6).unwrap();
        assert!(c6.is_total_dominating(&set(6, &[0, 1, 3, 4])));
    }

    #[test]
    fn private_neighbor_sets() {
        let p4 = Graph::path(4).unwrap();
        // N(2) ∩ {1, 2} = {1}: a member of X can be private to another member.
        assert_eq!(p4.private_neighbors(1, &set(4, &[1, 2])).unwrap().to_vec(), vec![0, 2]);
        let k3 = Graph::complete(3).unwrap();
        // Vertex 2 sees both members; vertex 1 sees only 0.
        assert_eq!(k3.private_neighbors(0, &set(3, &[0, 1])).unwrap().to_vec(), vec![1]);
        assert!(k3.private_neighbors(0, &VertexSet::full(3)).unwrap().is_empty());
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            two_k2.private_neighbors(0, &VertexSet::full(4)).unwrap().to_vec(),
            vec![1]
        );
        assert!(p4.private_neighbors(0, &set(4, &[1, 2])).is_err());
    }

    #[test]
    fn induced_subgraphs() {
        let p3 = Graph::path(3).unwrap();
        let (g, map) = p3.induced_subgraph(&set(3, &[0, 2])).unwrap();
        assert_eq!((g.n(), g.edge_count()), (2, 0));
        assert_eq!(map, vec![0, 2]);
        let c6 = Graph::cycle(6).unwrap();
        let (g, _) = c6.induced_subgraph(&set(6, &[0, 1, 2])).unwrap();
        assert_eq!(g, Graph::path(3).unwrap());
        assert!(matches!(c6.induced_subgraph(&VertexSet::new(6)), Err(Error::EmptySet)));
    }

    #[test]
    fn k2_copies() {
        assert_eq!(Graph::k_copies_k2(1).unwrap(), Graph::k2());
        let g = Graph::k_copies_k2(2).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 3)]);
        assert!(Graph::k_copies_k2(0).is_err());
    }

    #[test]
    fn connectivity() {
        assert!(Graph::k2().is_connected());
        assert!(!Graph::k2().has_isolated_vertex());
        let two_k2 = Graph::k_copies_k2(2).unwrap();
        assert!(!two_k2.is_connected());
        assert_eq!(two_k2.components().len(), 2);
        let k1 = Graph::empty(1).unwrap();
        assert!(k1.has_isolated_vertex());
        assert!(k1.is_connected());
    }

    #[test]
    fn disjoint_union_shifts_labels() {
        let g = Graph::k2().disjoint_union(&Graph::path(3).unwrap());
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3), (3, 4)]);
    }

    #[test]
    fn square_of_path() {
        let sq = Graph::path(4).unwrap().square();
        assert_eq!(sq.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn rejects_bad_edges() {
        let mut g = Graph::empty(2).unwrap();
        assert!(g.add_edge(0, 0).is_err());
        assert!(g.add_edge(0, 2).is_err());
        assert!(Graph::empty(0).is_err());
    }
}
