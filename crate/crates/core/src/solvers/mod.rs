//! Exact solvers for the total domination number, the domination number and
//! the 2-packing number, each returning a certificate that is the least
//! optimal set in bitmap order.

mod cover;
pub mod naive;
mod packing;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

use cover::CoverProblem;

/// Default cap on the number of optimal sets `all_min_td_sets` may return.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub value: usize,
    pub certificate: VertexSet,
}

#[derive(Serialize)]
struct SolveResultJson {
    value: usize,
    certificate: Vec<usize>,
}

impl Serialize for SolveResult {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SolveResultJson {
            value: self.value,
            certificate: self.certificate.to_vec(),
        }
        .serialize(s)
    }
}

fn require_no_isolated(g: &Graph) -> Result<()> {
    match g.isolated_vertex() {
        Some(v) => Err(Error::IsolatedVertex(v)),
        None => Ok(()),
    }
}

enum Kind {
    Total,
    Closed,
}

fn solve_by_components(g: &Graph, kind: Kind, with_certificate: bool) -> SolveResult {
    let mut value = 0;
    let mut certificate = VertexSet::new(g.n());
    for comp in g.components() {
        let problem = match kind {
            Kind::Total => CoverProblem::total(g, comp.clone(), comp),
            Kind::Closed => CoverProblem::closed(g, comp.clone(), comp),
        };
        let (k, witness) = problem.minimize().expect("every component is coverable");
        value += k;
        let part = if with_certificate { problem.lex_least(k, witness) } else { witness };
        certificate.union_with(&part);
    }
    SolveResult { value, certificate }
}

/// `γ_t(G)` with the bitmap-least minimum TD-set.
pub fn gamma_t(g: &Graph) -> Result<SolveResult> {
    require_no_isolated(g)?;
    Ok(solve_by_components(g, Kind::Total, true))
}

/// `γ_t(G)` only; the search stops at the first proven optimum.
pub fn total_domination_number(g: &Graph) -> Result<usize> {
    require_no_isolated(g)?;
    Ok(solve_by_components(g, Kind::Total, false).value)
}

/// `γ(G)` with the bitmap-least minimum dominating set.
pub fn gamma(g: &Graph) -> SolveResult {
    solve_by_components(g, Kind::Closed, true)
}

pub fn domination_number(g: &Graph) -> usize {
    solve_by_components(g, Kind::Closed, false).value
}

/// `ρ_2(G)` with the bitmap-least maximum 2-packing.
pub fn rho_2(g: &Graph) -> SolveResult {
    packing::max_two_packing(g)
}

/// Every `γ_t(G)`-set in bitmap order.
pub fn all_min_td_sets(g: &Graph, limit: usize) -> Result<Vec<VertexSet>> {
    require_no_isolated(g)?;
    if limit == 0 {
        return Err(Error::InvalidParameter("limit must be at least 1".into()));
    }
    let all = VertexSet::full(g.n());
    let problem = CoverProblem::total(g, all.clone(), all);
    let (k, _) = problem.minimize().expect("no isolated vertices");
    problem.all_optimal(k, limit)
}

/// Minimum number of vertices of `G` that totally dominate `target`, with the
/// bitmap-least such set. `None` if some target vertex is isolated.
pub fn min_total_dominator(g: &Graph, target: &VertexSet) -> Option<SolveResult> {
    if target.is_empty() {
        return Some(SolveResult {
            value: 0,
            certificate: VertexSet::new(g.n()),
        });
    }
    let problem = CoverProblem::total(g, target.clone(), VertexSet::full(g.n()));
    let (k, witness) = problem.minimize()?;
    Some(SolveResult {
        value: k,
        certificate: problem.lex_least(k, witness),
    })
}

/// Every minimum set of vertices of `G` totally dominating `target`.
pub fn all_min_total_dominators(g: &Graph, target: &VertexSet, limit: usize) -> Result<Vec<VertexSet>> {
    if target.is_empty() {
        return Ok(vec![VertexSet::new(g.n())]);
    }
    let problem = CoverProblem::total(g, target.clone(), VertexSet::full(g.n()));
    let Some((k, _)) = problem.minimize() else {
        return Ok(Vec::new());
    };
    problem.all_optimal(k, limit)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, v.iter().copied()).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(gamma_t(&Graph::k2()).unwrap().value, 2);
        assert_eq!(gamma_t(&Graph::cycle(6).unwrap()).unwrap().value, 4);
        for n in 1..=6 {
            assert_eq!(gamma(&Graph::complete(n).unwrap()).value, 1);
            assert_eq!(rho_2(&Graph::complete(n).unwrap()).value, 1);
        }
        assert_eq!(gamma(&Graph::path(6).unwrap()).value, 2);
        assert_eq!(gamma(&Graph::k_copies_k2(2).unwrap()).value, 2);
        assert_eq!(rho_2(&Graph::path(6).unwrap()).value, 2);
        assert_eq!(rho_2(&Graph::cycle(6).unwrap()).value, 2);
    }

    #[test]
    fn kk2_needs_every_vertex() {
        for k in 1..=4 {
            let r = gamma_t(&Graph::k_copies_k2(k).unwrap()).unwrap();
            assert_eq!(r.value, 2 * k);
        }
    }

    #[test]
    fn isolated_vertex_is_an_error() {
        let g = Graph::empty(1).unwrap();
        assert!(matches!(gamma_t(&g), Err(Error::IsolatedVertex(0))));
        let g = Graph::k2().disjoint_union(&Graph::empty(1).unwrap());
        assert!(matches!(gamma_t(&g), Err(Error::IsolatedVertex(2))));
        assert!(matches!(all_min_td_sets(&g, 10), Err(Error::IsolatedVertex(2))));
        assert_eq!(gamma(&g).value, 2);
    }

    #[test]
    fn certificates_are_bitmap_least() {
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(gamma_t(&c6).unwrap().certificate, set(6, &[0, 1, 2, 3]));
        assert_eq!(gamma(&c6).certificate, set(6, &[0, 3]));
        assert_eq!(rho_2(&c6).certificate, set(6, &[0, 3]));
    }

    #[test]
    fn all_min_sets_of_paths() {
        assert_eq!(all_min_td_sets(&Graph::k2(), 10).unwrap(), vec![set(2, &[0, 1])]);
        assert_eq!(all_min_td_sets(&Graph::path(4).unwrap(), 10).unwrap(), vec![set(4, &[1, 2])]);
    }

    #[test]
    fn all_min_sets_of_c6() {
        // Complements of the 6 adjacent pairs and the 3 antipodal pairs.
        let expected: Vec<VertexSet> = vec![
            set(6, &[0, 1, 2, 3]),
            set(6, &[0, 1, 3, 4]),
            set(6, &[0, 1, 4, 5]),
            set(6, &[0, 2, 3, 5]),
            set(6, &[0, 3, 4, 5]),
            set(6, &[1, 2, 3, 4]),
            set(6, &[1, 2, 4, 5]),
            set(6, &[2, 3, 4, 5]),
            set(6, &[0, 1, 2, 5]),
        ]
        .into_iter()
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
        assert_eq!(all_min_td_sets(&Graph::cycle(6).unwrap(), 100).unwrap(), expected);
    }

    #[test]
    fn enumeration_limit_fails_loudly() {
        let c6 = Graph::cycle(6).unwrap();
        assert!(matches!(all_min_td_sets(&c6, 3), Err(Error::LimitExceeded { limit: 3 })));
        assert!(all_min_td_sets(&c6, 0).is_err());
    }

    #[test]
    fn restricted_dominators() {
        let p4 = Graph::path(4).unwrap();
        let r = min_total_dominator(&p4, &set(4, &[0, 3])).unwrap();
        assert_eq!((r.value, r.certificate), (2, set(4, &[1, 2])));
        let r = min_total_dominator(&p4, &VertexSet::new(4)).unwrap();
        assert_eq!(r.value, 0);
        let all = all_min_total_dominators(&Graph::cycle(6).unwrap(), &set(6, &[0]), 10).unwrap();
        assert_eq!(all, vec![set(6, &[1]), set(6, &[5])]);
    }
}
