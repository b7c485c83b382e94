//! Cartesian products with their fiber and projection maps.
//!
//! The product vertex `(g, h)` always has index `g * |V(H)| + h`.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug)]
pub struct ProductGraph {
    product: Graph,
    factor_g: Graph,
    factor_h: Graph,
}

/// Builds `G □ H`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> ProductGraph {
    let (ng, nh) = (g.n(), h.n());
    let mut product = Graph::empty(ng * nh).expect("factors are nonempty");
    for a in 0..ng {
        for (u, v) in h.edges() {
            product.add_edge(a * nh + u, a * nh + v).expect("in range");
        }
    }
    for (u, v) in g.edges() {
        for b in 0..nh {
            product.add_edge(u * nh + b, v * nh + b).expect("in range");
        }
    }
    ProductGraph {
        product,
        factor_g: g.clone(),
        factor_h: h.clone(),
    }
}

impl ProductGraph {
    pub fn graph(&self) -> &Graph {
        &self.product
    }

    pub fn into_graph(self) -> Graph {
        self.product
    }

    pub fn factor_g(&self) -> &Graph {
        &self.factor_g
    }

    pub fn factor_h(&self) -> &Graph {
        &self.factor_h
    }

    #[inline]
    pub fn index(&self, g: usize, h: usize) -> usize {
        g * self.factor_h.n() + h
    }

    #[inline]
    pub fn coords(&self, v: usize) -> (usize, usize) {
        (v / self.factor_h.n(), v % self.factor_h.n())
    }

    /// Builds a product vertex set from `(g, h)` pairs.
    pub fn set_from_pairs<I>(&self, pairs: I) -> Result<VertexSet>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut s = VertexSet::new(self.product.n());
        for (g, h) in pairs {
            self.check_g(g)?;
            self.check_h(h)?;
            s.insert(self.index(g, h));
        }
        Ok(s)
    }

    fn check_g(&self, g: usize) -> Result<()> {
        if g < self.factor_g.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: g, n: self.factor_g.n() })
        }
    }

    fn check_h(&self, h: usize) -> Result<()> {
        if h < self.factor_h.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: h, n: self.factor_h.n() })
        }
    }

    /// The `G`-fiber `G^h = {(g, h) : g ∈ V(G)}`.
    pub fn g_fiber(&self, h: usize) -> Result<VertexSet> {
        self.check_h(h)?;
        self.set_from_pairs((0..self.factor_g.n()).map(|g| (g, h)))
    }

    /// The `H`-fiber `gH = {(g, h) : h ∈ V(H)}`.
    pub fn h_fiber(&self, g: usize) -> Result<VertexSet> {
        self.check_g(g)?;
        self.set_from_pairs((0..self.factor_h.n()).map(|h| (g, h)))
    }

    fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.capacity() == self.product.n() {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!(
                "set over {} vertices used with product on {}",
                s.capacity(),
                self.product.n()
            )))
        }
    }

    /// `p_G(S)`.
    pub fn project_g(&self, s: &VertexSet) -> Result<VertexSet> {
        self.check_set(s)?;
        let mut out = VertexSet::new(self.factor_g.n());
        for v in s {
            out.insert(self.coords(v).0);
        }
        Ok(out)
    }

    /// `p_H(S)`.
    pub fn project_h(&self, s: &VertexSet) -> Result<VertexSet> {
        self.check_set(s)?;
        let mut out = VertexSet::new(self.factor_h.n());
        for v in s {
            out.insert(self.coords(v).1);
        }
        Ok(out)
    }
}
