//! Membership in the families `F1`, `F2`, `F3` that characterize
//! `γ_t(G) = γ_t(G □ K2)`, the equality criterion for factors with
//! `γ_t(H) = 2`, and the explicit equality construction on `G □ K2`.

mod decompose;

pub use decompose::{
    check_proposition_statements, decompose_product_tdset, Decomposer, DecompositionReport, Statement, Verdict,
};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::product::cartesian_product;
use crate::solvers::{self, DEFAULT_ENUMERATION_LIMIT};
use crate::vertex_set::VertexSet;

/// Default vertex cap for the exhaustive `F3` bipartition search.
pub const DEFAULT_F3_CAP: usize = 14;

#[derive(Clone, Copy, Debug)]
pub struct ClassifyOptions {
    pub enumeration_limit: usize,
    pub f3_cap: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        Self {
            enumeration_limit: DEFAULT_ENUMERATION_LIMIT,
            f3_cap: DEFAULT_F3_CAP,
        }
    }
}

/// `γ_t(G) = 2γ(G)`, witnessed by a minimum dominating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F1Witness {
    pub gamma: usize,
    pub gamma_t: usize,
    pub dominating_set: VertexSet,
}

/// A `γ_t(G)`-set `D = D1 ∪ D2` with `D1 = V \ N(D2)` and `D2 = V \ N(D1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F2Witness {
    pub td_set: VertexSet,
    pub d1: VertexSet,
    pub d2: VertexSet,
}

/// A bipartition `V1 ∪ V2` with `G[V1] ∈ F1`, `G[V2] ∈ F2` and additive `γ_t`.
/// Sub-witness sets use the labels of the whole graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F3Witness {
    pub v1: VertexSet,
    pub v2: VertexSet,
    pub f1: F1Witness,
    pub f2: F2Witness,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FamilyClassification {
    pub f1: Option<F1Witness>,
    pub f2: Option<F2Witness>,
    pub f3: Option<F3Witness>,
}

impl FamilyClassification {
    pub fn in_any(&self) -> bool {
        self.f1.is_some() || self.f2.is_some() || self.f3.is_some()
    }

    /// Re-checks every present witness against its family's definition.
    pub fn verify(&self, g: &Graph) -> bool {
        self.f1.as_ref().is_none_or(|w| w.verify(g))
            && self.f2.as_ref().is_none_or(|w| w.verify(g))
            && self.f3.as_ref().is_none_or(|w| w.verify(g))
    }

    pub fn labels(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.f1.is_some() {
            out.push("F1");
        }
        if self.f2.is_some() {
            out.push("F2");
        }
        if self.f3.is_some() {
            out.push("F3");
        }
        out
    }
}

#[derive(Serialize)]
struct ClassificationJson {
    f1: Option<Vec<usize>>,
    f2: Option<[Vec<usize>; 2]>,
    f3: Option<[Vec<usize>; 2]>,
}

impl Serialize for FamilyClassification {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ClassificationJson {
            f1: self.f1.as_ref().map(|w| w.dominating_set.to_vec()),
            f2: self.f2.as_ref().map(|w| [w.d1.to_vec(), w.d2.to_vec()]),
            f3: self.f3.as_ref().map(|w| [w.v1.to_vec(), w.v2.to_vec()]),
        }
        .serialize(s)
    }
}

impl F1Witness {
    pub fn verify(&self, g: &Graph) -> bool {
        self.dominating_set.capacity() == g.n()
            && g.is_dominating(&self.dominating_set)
            && self.dominating_set.len() == self.gamma
            && solvers::domination_number(g) == self.gamma
            && solvers::total_domination_number(g).ok() == Some(self.gamma_t)
            && self.gamma_t == 2 * self.gamma
    }
}

fn is_f2_split(g: &Graph, d1: &VertexSet, d2: &VertexSet) -> bool {
    !d1.is_empty()
        && !d2.is_empty()
        && *d1 == g.set_neighborhood(d2).complement()
        && *d2 == g.set_neighborhood(d1).complement()
}

impl F2Witness {
    pub fn verify(&self, g: &Graph) -> bool {
        self.td_set.capacity() == g.n()
            && g.is_total_dominating(&self.td_set)
            && solvers::total_domination_number(g).ok() == Some(self.td_set.len())
            && self.d1.is_disjoint(&self.d2)
            && self.d1.union(&self.d2) == self.td_set
            && is_f2_split(g, &self.d1, &self.d2)
    }
}

impl F3Witness {
    pub fn verify(&self, g: &Graph) -> bool {
        if self.v1.is_empty() || self.v2.is_empty() || !self.v1.is_disjoint(&self.v2) {
            return false;
        }
        if self.v1.union(&self.v2).len() != g.n() {
            return false;
        }
        let (Ok((g1, map1)), Ok((g2, map2))) = (g.induced_subgraph(&self.v1), g.induced_subgraph(&self.v2))
        else {
            return false;
        };
        let (Ok(t), Ok(t1), Ok(t2)) = (
            solvers::total_domination_number(g),
            solvers::total_domination_number(&g1),
            solvers::total_domination_number(&g2),
        ) else {
            return false;
        };
        let f1 = F1Witness {
            dominating_set: restrict(&self.f1.dominating_set, &map1),
            ..self.f1.clone()
        };
        let f2 = F2Witness {
            td_set: restrict(&self.f2.td_set, &map2),
            d1: restrict(&self.f2.d1, &map2),
            d2: restrict(&self.f2.d2, &map2),
        };
        self.f1.dominating_set.is_subset(&self.v1)
            && self.f2.td_set.is_subset(&self.v2)
            && f1.verify(&g1)
            && f2.verify(&g2)
            && t == t1 + t2
    }
}

/// Maps a set over the host graph into the labels of an induced subgraph.
fn restrict(s: &VertexSet, new_to_old: &[usize]) -> VertexSet {
    let mut out = VertexSet::new(new_to_old.len());
    for (i, &old) in new_to_old.iter().enumerate() {
        if s.contains(old) {
            out.insert(i);
        }
    }
    out
}

/// Maps a set over an induced subgraph back to host labels.
fn lift(s: &VertexSet, new_to_old: &[usize], host_n: usize) -> VertexSet {
    let mut out = VertexSet::new(host_n);
    for v in s {
        out.insert(new_to_old[v]);
    }
    out
}

fn require_no_isolated(g: &Graph) -> Result<()> {
    match g.isolated_vertex() {
        Some(v) => Err(Error::IsolatedVertex(v)),
        None => Ok(()),
    }
}

pub fn in_f1(g: &Graph) -> Result<Option<F1Witness>> {
    let gamma_t = solvers::total_domination_number(g)?;
    let dom = solvers::gamma(g);
    Ok((gamma_t == 2 * dom.value).then_some(F1Witness {
        gamma: dom.value,
        gamma_t,
        dominating_set: dom.certificate,
    }))
}

/// Searches every `γ_t(G)`-set in bitmap order. Since `D1 ∩ N(D2) = ∅`, both
/// halves are unions of components of `G[D]`; splits are tried by ascending
/// mask over those components, ordered by least member.
pub fn in_f2(g: &Graph, limit: usize) -> Result<Option<F2Witness>> {
    require_no_isolated(g)?;
    for td_set in solvers::all_min_td_sets(g, limit)? {
        let (sub, map) = g.induced_subgraph(&td_set)?;
        let parts: Vec<VertexSet> = sub.components().iter().map(|c| lift(c, &map, g.n())).collect();
        let m = parts.len();
        if m < 2 {
            continue;
        }
        if m > 63 {
            return Err(Error::TooLarge { n: m, max: 63 });
        }
        for mask in 1u64..(1u64 << m) - 1 {
            let mut d1 = VertexSet::new(g.n());
            for (i, part) in parts.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    d1.union_with(part);
                }
            }
            let d2 = td_set.difference(&d1);
            if is_f2_split(g, &d1, &d2) {
                return Ok(Some(F2Witness { td_set, d1, d2 }));
            }
        }
    }
    Ok(None)
}

/// Exhaustive over bipartitions `V1 = {v : bit v of mask}`, ascending mask.
pub fn in_f3(g: &Graph, opts: ClassifyOptions) -> Result<Option<F3Witness>> {
    require_no_isolated(g)?;
    let n = g.n();
    if n > opts.f3_cap {
        return Err(Error::TooLarge { n, max: opts.f3_cap });
    }
    let total = solvers::total_domination_number(g)?;
    for mask in 1u128..(1u128 << n) - 1 {
        let v1 = VertexSet::from_mask(n, mask);
        let v2 = v1.complement();
        let (g1, map1) = g.induced_subgraph(&v1)?;
        let (g2, map2) = g.induced_subgraph(&v2)?;
        if g1.has_isolated_vertex() || g2.has_isolated_vertex() {
            continue;
        }
        if solvers::total_domination_number(&g1)? + solvers::total_domination_number(&g2)? != total {
            continue;
        }
        let Some(f1) = in_f1(&g1)? else {
            continue;
        };
        let Some(f2) = in_f2(&g2, opts.enumeration_limit)? else {
            continue;
        };
        return Ok(Some(F3Witness {
            f1: F1Witness {
                dominating_set: lift(&f1.dominating_set, &map1, n),
                ..f1
            },
            f2: F2Witness {
                td_set: lift(&f2.td_set, &map2, n),
                d1: lift(&f2.d1, &map2, n),
                d2: lift(&f2.d2, &map2, n),
            },
            v1,
            v2,
        }));
    }
    Ok(None)
}

pub fn classify(g: &Graph) -> Result<FamilyClassification> {
    classify_with(g, ClassifyOptions::default())
}

pub fn classify_with(g: &Graph, opts: ClassifyOptions) -> Result<FamilyClassification> {
    require_no_isolated(g)?;
    Ok(FamilyClassification {
        f1: in_f1(g)?,
        f2: in_f2(g, opts.enumeration_limit)?,
        f3: in_f3(g, opts)?,
    })
}

/// `γ_t(G) = γ_t(G □ H)`.
pub fn equality_holds(g: &Graph, h: &Graph) -> Result<bool> {
    require_no_isolated(g)?;
    require_no_isolated(h)?;
    let product = cartesian_product(g, h);
    Ok(solvers::total_domination_number(g)? == solvers::total_domination_number(product.graph())?)
}

fn require_theorem3_hypotheses(g: &Graph, h: &Graph) -> Result<()> {
    for (name, x) in [("G", g), ("H", h)] {
        if x.n() < 2 || !x.is_connected() {
            return Err(Error::HypothesisViolated(format!("{name} must be nontrivial and connected")));
        }
    }
    if solvers::total_domination_number(h)? != 2 {
        return Err(Error::HypothesisViolated("γ_t(H) must be 2".into()));
    }
    Ok(())
}

/// `(G = K2 and γ(H) = 1)` or `(H = K2 and G ∈ F1 ∪ F2 ∪ F3)`.
pub fn theorem3_rhs(g: &Graph, h: &Graph) -> Result<bool> {
    theorem3_rhs_with(g, h, ClassifyOptions::default())
}

pub fn theorem3_rhs_with(g: &Graph, h: &Graph, opts: ClassifyOptions) -> Result<bool> {
    require_theorem3_hypotheses(g, h)?;
    if g.is_k2() && solvers::domination_number(h) == 1 {
        return Ok(true);
    }
    Ok(h.is_k2() && classify_with(g, opts)?.in_any())
}

/// A TD-set of `G □ K2` of size `γ_t(G)`, built from the first available
/// witness in the order F1, F2, F3. Product vertex `(g, h)` is `2g + h`.
pub fn build_equality_tdset(g: &Graph, classification: &FamilyClassification) -> Result<VertexSet> {
    let (fiber0, fiber1) = if let Some(w) = &classification.f1 {
        (w.dominating_set.clone(), w.dominating_set.clone())
    } else if let Some(w) = &classification.f2 {
        (w.d1.clone(), w.d2.clone())
    } else if let Some(w) = &classification.f3 {
        let base = &w.f1.dominating_set;
        (base.union(&w.f2.d1), base.union(&w.f2.d2))
    } else {
        return Err(Error::NotInFamilies);
    };
    let mut out = VertexSet::new(2 * g.n());
    for v in &fiber0 {
        out.insert(2 * v);
    }
    for v in &fiber1 {
        out.insert(2 * v + 1);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, v.iter().copied()).unwrap()
    }

    #[test]
    fn k2_is_f1_only() {
        let c = classify(&Graph::k2()).unwrap();
        assert_eq!(c.labels(), vec!["F1"]);
        assert_eq!(c.f1.as_ref().unwrap().dominating_set, set(2, &[0]));
        assert!(c.verify(&Graph::k2()));
    }

    #[test]
    fn c6_is_f1_and_f2_not_f3() {
        let c6 = Graph::cycle(6).unwrap();
        let c = classify(&c6).unwrap();
        // γ(C6) = 2 and γ_t(C6) = 4.
        assert!(c.f1.is_some());
        let f2 = c.f2.as_ref().unwrap();
        assert!(f2.verify(&c6));
        assert!(c.f3.is_none());
        assert!(c.verify(&c6));
        // The split quoted for C6 is a valid F2 witness too.
        let w = F2Witness {
            td_set: set(6, &[0, 1, 3, 4]),
            d1: set(6, &[0, 1]),
            d2: set(6, &[3, 4]),
        };
        assert!(w.verify(&c6));
    }

    #[test]
    fn two_k2_is_f2() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let w = in_f2(&g, 100).unwrap().unwrap();
        assert_eq!(w.td_set, VertexSet::full(4));
        assert_eq!((w.d1, w.d2), (set(4, &[0, 1]), set(4, &[2, 3])));
    }

    #[test]
    fn k2_has_no_f2_or_f3_witness() {
        assert!(in_f2(&Graph::k2(), 100).unwrap().is_none());
        assert!(in_f3(&Graph::k2(), ClassifyOptions::default()).unwrap().is_none());
    }

    #[test]
    fn k2_plus_c6_is_f3() {
        let g = Graph::k2().disjoint_union(&Graph::cycle(6).unwrap());
        let w = in_f3(&g, ClassifyOptions::default()).unwrap().unwrap();
        assert!(w.verify(&g));
        assert_eq!(solvers::total_domination_number(&g).unwrap(), 6);
    }

    #[test]
    fn f3_cap_and_isolated_vertex() {
        let opts = ClassifyOptions { f3_cap: 5, ..Default::default() };
        assert!(matches!(in_f3(&Graph::cycle(6).unwrap(), opts), Err(Error::TooLarge { .. })));
        assert!(matches!(classify(&Graph::empty(3).unwrap()), Err(Error::IsolatedVertex(0))));
    }

    #[test]
    fn theorem3_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert!(theorem3_rhs(&Graph::k2(), &k3).unwrap());
        assert!(equality_holds(&Graph::k2(), &k3).unwrap());
        let c6 = Graph::cycle(6).unwrap();
        assert!(theorem3_rhs(&c6, &Graph::k2()).unwrap());
        assert!(equality_holds(&c6, &Graph::k2()).unwrap());
        let p3 = Graph::path(3).unwrap();
        assert_eq!(
            theorem3_rhs(&p3, &Graph::k2()).unwrap(),
            equality_holds(&p3, &Graph::k2()).unwrap()
        );
        assert!(matches!(
            theorem3_rhs(&c6, &Graph::cycle(6).unwrap()),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn equality_constructions() {
        let k2 = Graph::k2();
        let d = build_equality_tdset(&k2, &classify(&k2).unwrap()).unwrap();
        assert_eq!(d, set(4, &[0, 1]));

        let c6 = Graph::cycle(6).unwrap();
        let only_f2 = FamilyClassification {
            f2: Some(F2Witness {
                td_set: set(6, &[0, 1, 3, 4]),
                d1: set(6, &[0, 1]),
                d2: set(6, &[3, 4]),
            }),
            ..Default::default()
        };
        let d = build_equality_tdset(&c6, &only_f2).unwrap();
        // (0,0), (1,0), (3,1), (4,1)
        assert_eq!(d, set(12, &[0, 2, 7, 9]));
        let product = cartesian_product(&c6, &k2);
        assert!(product.graph().is_total_dominating(&d));

        let g = k2.disjoint_union(&c6);
        let only_f3 = FamilyClassification {
            f3: in_f3(&g, ClassifyOptions::default()).unwrap(),
            ..Default::default()
        };
        let d = build_equality_tdset(&g, &only_f3).unwrap();
        assert_eq!(d.len(), 6);
        assert!(cartesian_product(&g, &k2).graph().is_total_dominating(&d));

        assert!(matches!(
            build_equality_tdset(&c6, &FamilyClassification::default()),
            Err(Error::NotInFamilies)
        ));
    }
}
