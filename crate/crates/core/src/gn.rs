//! The graphs `G_n`: an `n`-clique `a_1..a_n` with a pendant path
//! `a_i - b_i - c_i` hanging off every clique vertex.
//!
//! Labels: `a_i = i - 1`, `b_i = n + i - 1`, `c_i = 2n + i - 1` (1-based `i`).

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::product::cartesian_product;
use crate::solvers;
use crate::vertex_set::VertexSet;

/// Default guard on `k * n` for the exact product solver.
pub const DEFAULT_EXACT_CAP: usize = 16;

#[derive(Clone, Debug)]
pub struct GnGraph {
    pub n: usize,
    pub graph: Graph,
}

impl GnGraph {
    /// 1-based clique vertex `a_i`.
    pub fn a(&self, i: usize) -> usize {
        i - 1
    }

    pub fn b(&self, i: usize) -> usize {
        self.n + i - 1
    }

    pub fn c(&self, i: usize) -> usize {
        2 * self.n + i - 1
    }
}

pub fn build_gn(n: usize) -> Result<GnGraph> {
    if n == 0 {
        return Err(Error::InvalidParameter("G_n needs n >= 1".into()));
    }
    let mut graph = Graph::empty(3 * n)?;
    for i in 0..n {
        for j in i + 1..n {
            graph.add_edge(i, j)?;
        }
        graph.add_edge(i, n + i)?;
        graph.add_edge(n + i, 2 * n + i)?;
    }
    Ok(GnGraph { n, graph })
}

fn check_order(k: usize, n: usize) -> Result<()> {
    if 2 <= k && k <= n {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("need 2 <= k <= n, got k={k}, n={n}")))
    }
}

/// The TD-set of `G_k □ G_n` of size `2kn + 2k`:
/// `A×{x1,z1} ∪ B×((Y∖{y1}) ∪ (Z∖{z1})) ∪ C×{x1,y1}`, where `A, B, C` are
/// the clique, middle and leaf vertices of `G_k` and `X, Y, Z` those of `G_n`.
pub fn gn_product_tdset(k: usize, n: usize) -> Result<VertexSet> {
    check_order(k, n)?;
    let (gk, gn) = (build_gn(k)?, build_gn(n)?);
    let nh = gn.graph.n();
    let mut d = VertexSet::new(gk.graph.n() * nh);
    let mut put = |g: usize, h: usize| d.insert(g * nh + h);
    for i in 1..=k {
        put(gk.a(i), gn.a(1));
        put(gk.a(i), gn.c(1));
        for j in 2..=n {
            put(gk.b(i), gn.b(j));
            put(gk.b(i), gn.c(j));
        }
        put(gk.c(i), gn.a(1));
        put(gk.c(i), gn.b(1));
    }
    Ok(d)
}

#[derive(Clone, Debug, Serialize)]
pub struct GnBounds {
    pub k: usize,
    pub n: usize,
    pub lower: usize,
    pub exact: usize,
    pub upper: usize,
}

impl GnBounds {
    pub fn holds(&self) -> bool {
        self.lower <= self.exact && self.exact <= self.upper
    }
}

fn check_cap(k: usize, n: usize, cap: usize) -> Result<()> {
    if k * n > cap {
        return Err(Error::TooLarge { n: 9 * k * n, max: 9 * cap });
    }
    Ok(())
}

/// `2kn + k <= γ_t(G_k □ G_n) <= 2kn + 2k`, with the exact value solved.
pub fn gn_bounds_check(k: usize, n: usize, cap: usize) -> Result<GnBounds> {
    check_order(k, n)?;
    check_cap(k, n, cap)?;
    let product = cartesian_product(&build_gn(k)?.graph, &build_gn(n)?.graph);
    let exact = solvers::total_domination_number(product.graph())?;
    Ok(GnBounds {
        k,
        n,
        lower: 2 * k * n + k,
        exact,
        upper: 2 * k * n + 2 * k,
    })
}

#[derive(Clone, Debug)]
pub struct GnQuotient {
    pub bounds: GnBounds,
    pub qt: Ratio<u64>,
    pub lower: Ratio<u64>,
    pub upper: Ratio<u64>,
}

impl GnQuotient {
    pub fn within(&self) -> bool {
        self.lower <= self.qt && self.qt <= self.upper
    }
}

/// Corollary interval for `q_t(G_k, G_n)`: `[1/2 + 1/(4n), 1/2 + 1/(2n)]`.
pub fn corollary_interval(n: usize) -> (Ratio<u64>, Ratio<u64>) {
    let half = Ratio::new(1, 2);
    let n = n as u64;
    (half + Ratio::new(1, 4 * n), half + Ratio::new(1, 2 * n))
}

/// Exact `q_t(G_k, G_n) = γ_t(G_k □ G_n) / (2k · 2n)` and the corollary bounds.
pub fn gn_quotient_check(k: usize, n: usize, cap: usize) -> Result<GnQuotient> {
    let bounds = gn_bounds_check(k, n, cap)?;
    let qt = Ratio::new(bounds.exact as u64, (4 * k * n) as u64);
    let (lower, upper) = corollary_interval(n);
    Ok(GnQuotient {
        bounds,
        qt,
        lower,
        upper,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::is_isomorphic;

    #[test]
    fn structure() {
        for n in 1..=6 {
            let g = build_gn(n).unwrap();
            assert_eq!(g.graph.n(), 3 * n);
            assert_eq!(g.graph.edge_count(), n * (n - 1) / 2 + 2 * n);
            for i in 1..=n {
                assert_eq!(g.graph.degree(g.c(i)), 1);
                assert_eq!(g.graph.neighbors(g.b(i)).to_vec(), vec![g.a(i), g.c(i)]);
            }
            let clique = VertexSet::from_vertices(3 * n, (1..=n).map(|i| g.a(i))).unwrap();
            let (sub, _) = g.graph.induced_subgraph(&clique).unwrap();
            assert_eq!(sub, Graph::complete(n).unwrap());
        }
        assert!(build_gn(0).is_err());
    }

    #[test]
    fn g2_is_p6_and_g3_has_nine_edges() {
        assert!(is_isomorphic(&build_gn(2).unwrap().graph, &Graph::path(6).unwrap()));
        let g3 = build_gn(3).unwrap();
        assert_eq!((g3.graph.n(), g3.graph.edge_count()), (9, 9));
        assert_eq!(g3.graph.neighbors(g3.b(1)).to_vec(), vec![g3.a(1), g3.c(1)]);
    }

    #[test]
    fn product_tdset_size_and_predicate() {
        for n in 2..=5 {
            for k in 2..=n {
                let d = gn_product_tdset(k, n).unwrap();
                assert_eq!(d.len(), 2 * k * n + 2 * k);
                let p = cartesian_product(&build_gn(k).unwrap().graph, &build_gn(n).unwrap().graph);
                assert!(p.graph().is_total_dominating(&d), "k={k} n={n}");
            }
        }
        assert!(gn_product_tdset(3, 2).is_err());
        assert!(gn_product_tdset(1, 2).is_err());
    }

    #[test]
    fn corollary_interval_values() {
        assert_eq!(corollary_interval(2), (Ratio::new(5, 8), Ratio::new(3, 4)));
        assert_eq!(corollary_interval(3), (Ratio::new(7, 12), Ratio::new(2, 3)));
    }

    #[test]
    fn guard() {
        assert!(matches!(gn_bounds_check(4, 5, 16), Err(Error::TooLarge { .. })));
    }
}
