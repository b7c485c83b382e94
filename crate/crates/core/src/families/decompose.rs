//! Decomposition of a minimum TD-set `D` of `G □ H` (with `γ_t(H) = 2` and
//! `γ_t(G) = γ_t(G □ H)`) into the sets `D'`, `D''`, `D''_i` and their
//! projections `S`, `S'`, `S''`, `S''_i`, `P`, `P'`, `P''`, and the checks of
//! the fourteen structural statements these sets satisfy.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::product::{cartesian_product, ProductGraph};
use crate::solvers::{self, DEFAULT_ENUMERATION_LIMIT};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Statement {
    A,
    B,
    C,
    D,
    E,
    EPrime,
    F,
    G,
    H,
    I,
    J,
    K,
    L,
    M,
}

impl Statement {
    pub const ALL: [Statement; 14] = [
        Statement::A,
        Statement::B,
        Statement::C,
        Statement::D,
        Statement::E,
        Statement::EPrime,
        Statement::F,
        Statement::G,
        Statement::H,
        Statement::I,
        Statement::J,
        Statement::K,
        Statement::L,
        Statement::M,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Statement::A => "A",
            Statement::B => "B",
            Statement::C => "C",
            Statement::D => "D",
            Statement::E => "E",
            Statement::EPrime => "E'",
            Statement::F => "F",
            Statement::G => "G",
            Statement::H => "H",
            Statement::I => "I",
            Statement::J => "J",
            Statement::K => "K",
            Statement::L => "L",
            Statement::M => "M",
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for Statement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl Verdict {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

#[derive(Clone, Debug)]
pub struct DecompositionReport {
    /// The input `γ_t(G □ H)`-set.
    pub d: VertexSet,
    pub d_prime: VertexSet,
    pub d_double_prime: VertexSet,
    /// `D''_i` for each `h_i` in the input labeling of `H`.
    pub d_double_prime_i: Vec<VertexSet>,
    pub s: VertexSet,
    pub s_prime: VertexSet,
    pub s_double_prime: VertexSet,
    pub p: VertexSet,
    pub p_prime: VertexSet,
    pub p_double_prime: VertexSet,
    pub s_double_prime_i: Vec<VertexSet>,
    /// Bitmap-least minimum set totally dominating `S'`.
    pub t_prime: VertexSet,
    /// `S' ∪ T' ∪ S''`.
    pub x: VertexSet,
    pub gamma_t_g: usize,
    pub statements: BTreeMap<Statement, Verdict>,
}

impl DecompositionReport {
    pub fn failed(&self) -> Vec<Statement> {
        self.statements
            .iter()
            .filter(|(_, &v)| v == Verdict::Fail)
            .map(|(&s, _)| s)
            .collect()
    }

    pub fn all_pass(&self) -> bool {
        self.failed().is_empty()
    }
}

#[derive(Serialize)]
struct ReportJson<'a> {
    d: Vec<usize>,
    d_prime: Vec<usize>,
    d_double_prime: Vec<usize>,
    d_double_prime_i: Vec<Vec<usize>>,
    s: Vec<usize>,
    s_prime: Vec<usize>,
    s_double_prime: Vec<usize>,
    p: Vec<usize>,
    p_prime: Vec<usize>,
    p_double_prime: Vec<usize>,
    s_double_prime_i: Vec<Vec<usize>>,
    t_prime: Vec<usize>,
    x: Vec<usize>,
    gamma_t_g: usize,
    statements: &'a BTreeMap<Statement, Verdict>,
}

impl Serialize for DecompositionReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let list = |v: &[VertexSet]| v.iter().map(VertexSet::to_vec).collect();
        ReportJson {
            d: self.d.to_vec(),
            d_prime: self.d_prime.to_vec(),
            d_double_prime: self.d_double_prime.to_vec(),
            d_double_prime_i: list(&self.d_double_prime_i),
            s: self.s.to_vec(),
            s_prime: self.s_prime.to_vec(),
            s_double_prime: self.s_double_prime.to_vec(),
            p: self.p.to_vec(),
            p_prime: self.p_prime.to_vec(),
            p_double_prime: self.p_double_prime.to_vec(),
            s_double_prime_i: list(&self.s_double_prime_i),
            t_prime: self.t_prime.to_vec(),
            x: self.x.to_vec(),
            gamma_t_g: self.gamma_t_g,
            statements: &self.statements,
        }
        .serialize(s)
    }
}

/// A `(G, H)` pair whose hypotheses have been verified once, ready to
/// decompose any number of minimum TD-sets of `G □ H`.
pub struct Decomposer {
    g: Graph,
    h: Graph,
    product: ProductGraph,
    gamma_t_g: usize,
}

impl Decomposer {
    pub fn new(g: &Graph, h: &Graph) -> Result<Self> {
        for (name, x) in [("G", g), ("H", h)] {
            if !x.is_connected() {
                return Err(Error::HypothesisViolated(format!("{name} is not connected")));
            }
            if x.has_isolated_vertex() {
                return Err(Error::HypothesisViolated(format!("{name} has an isolated vertex")));
            }
        }
        if solvers::total_domination_number(h)? != 2 {
            return Err(Error::HypothesisViolated("γ_t(H) != 2".into()));
        }
        let product = cartesian_product(g, h);
        let gamma_t_g = solvers::total_domination_number(g)?;
        if solvers::total_domination_number(product.graph())? != gamma_t_g {
            return Err(Error::HypothesisViolated("γ_t(G) != γ_t(G □ H)".into()));
        }
        Ok(Self {
            g: g.clone(),
            h: h.clone(),
            product,
            gamma_t_g,
        })
    }

    pub fn product(&self) -> &ProductGraph {
        &self.product
    }

    pub fn gamma_t_g(&self) -> usize {
        self.gamma_t_g
    }

    pub fn decompose(&self, d: &VertexSet) -> Result<DecompositionReport> {
        let pg = self.product.graph();
        if d.capacity() != pg.n() {
            return Err(Error::InvalidParameter("D is not a set of product vertices".into()));
        }
        if !pg.is_total_dominating(d) {
            return Err(Error::NotMinimumTdSet("D is not a TD-set of G □ H".into()));
        }
        if d.len() != self.gamma_t_g {
            return Err(Error::NotMinimumTdSet(format!(
                "|D| = {} but γ_t(G □ H) = {}",
                d.len(),
                self.gamma_t_g
            )));
        }
        let (ng, nh) = (self.g.n(), self.h.n());
        let mut d_prime = VertexSet::new(pg.n());
        for v in d {
            let (g, _) = self.product.coords(v);
            let in_fiber = (0..nh).filter(|&h| d.contains(self.product.index(g, h))).count();
            if in_fiber > 1 {
                d_prime.insert(v);
            }
        }
        let d_double_prime = d.difference(&d_prime);
        let d_double_prime_i: Vec<VertexSet> = (0..nh)
            .map(|h| d_double_prime.intersection(&self.product.g_fiber(h).expect("in range")))
            .collect();
        let project = |s: &VertexSet| self.product.project_g(s).expect("product set");
        let s = project(d);
        let s_prime = project(&d_prime);
        let s_double_prime = project(&d_double_prime);
        let s_double_prime_i: Vec<VertexSet> = d_double_prime_i.iter().map(project).collect();
        let open = |x: &VertexSet| self.g.set_neighborhood(x).difference(x);
        let p = open(&s);
        let p_prime = open(&s_prime);
        let p_double_prime = open(&s_double_prime);
        let t_prime = solvers::min_total_dominator(&self.g, &s_prime)
            .map(|r| r.certificate)
            .ok_or_else(|| Error::HypothesisViolated("S' cannot be totally dominated".into()))?;
        let x = s_prime.union(&t_prime).union(&s_double_prime);
        debug_assert_eq!(ng, s.capacity());

        let mut report = DecompositionReport {
            d: d.clone(),
            d_prime,
            d_double_prime,
            d_double_prime_i,
            s,
            s_prime,
            s_double_prime,
            p,
            p_prime,
            p_double_prime,
            s_double_prime_i,
            t_prime,
            x,
            gamma_t_g: self.gamma_t_g,
            statements: BTreeMap::new(),
        };
        report.statements = check_proposition_statements(&report, &self.g, &self.h);
        Ok(report)
    }
}

/// Verifies the hypotheses, then decomposes `D`.
pub fn decompose_product_tdset(g: &Graph, h: &Graph, d: &VertexSet) -> Result<DecompositionReport> {
    Decomposer::new(g, h)?.decompose(d)
}

/// Whether every vertex of `x` has exactly one neighbor inside `x`, i.e.
/// `G[x]` is a disjoint union of edges.
fn induces_matching(g: &Graph, x: &VertexSet) -> bool {
    x.iter().all(|v| g.neighbors(v).intersection_len(x) == 1)
}

fn no_common_neighbors(g: &Graph, a: &VertexSet, b: &VertexSet) -> bool {
    a.iter().all(|u| {
        b.iter()
            .filter(|&v| v != u)
            .all(|v| g.neighbors(u).is_disjoint(g.neighbors(v)))
    })
}

fn pairwise_disjoint(sets: &[&VertexSet]) -> bool {
    sets.iter()
        .enumerate()
        .all(|(i, a)| sets[i + 1..].iter().all(|b| a.is_disjoint(b)))
}

/// Checks the literal content of each statement against the report's sets.
///
/// `E` is not applicable when `S''` is empty, `F` ignores empty `S''_i` (and
/// is not applicable if all are empty), `K` and `L` are not applicable when
/// the induced vertex set is empty, and `M` is not applicable when `H = K2`.
/// `E'` is checked for every minimum set totally dominating `S'`.
pub fn check_proposition_statements(r: &DecompositionReport, g: &Graph, h: &Graph) -> BTreeMap<Statement, Verdict> {
    let n = g.n();
    let all = VertexSet::full(n);
    let mut out = BTreeMap::new();
    let mut put = |s: Statement, v: Verdict| {
        out.insert(s, v);
    };
    let (s1, s2) = (&r.s_prime, &r.s_double_prime);

    put(Statement::A, Verdict::from_bool(r.s.union(&r.p) == all));
    put(
        Statement::B,
        Verdict::from_bool(r.gamma_t_g == 2 * s1.len() + s2.len()),
    );
    let independent = s1.iter().all(|u| g.neighbors(u).is_disjoint(s1));
    put(Statement::C, Verdict::from_bool(independent && no_common_neighbors(g, s1, s1)));
    put(
        Statement::D,
        Verdict::from_bool(s1.iter().all(|u| g.neighbors(u).is_disjoint(s2))),
    );
    put(
        Statement::E,
        if s2.is_empty() {
            Verdict::NotApplicable
        } else {
            Verdict::from_bool(induces_matching(g, s2))
        },
    );
    put(Statement::EPrime, check_e_prime(r, g));
    let nonempty: Vec<&VertexSet> = r.s_double_prime_i.iter().filter(|s| !s.is_empty()).collect();
    put(
        Statement::F,
        if nonempty.is_empty() {
            Verdict::NotApplicable
        } else {
            Verdict::from_bool(nonempty.iter().all(|s| induces_matching(g, s)))
        },
    );
    put(
        Statement::G,
        Verdict::from_bool(
            r.s_double_prime_i
                .iter()
                .all(|si| g.totally_dominates(si, &r.p_double_prime.union(si))),
        ),
    );
    put(
        Statement::H,
        Verdict::from_bool(r.s_double_prime_i.iter().all(|si| no_common_neighbors(g, si, si))),
    );
    put(Statement::I, Verdict::from_bool(no_common_neighbors(g, s1, s2)));
    put(
        Statement::J,
        Verdict::from_bool(pairwise_disjoint(&[s1, s2, &r.p_prime, &r.p_double_prime])),
    );
    let part_k = s1.union(&r.p_prime);
    put(
        Statement::K,
        if part_k.is_empty() {
            Verdict::NotApplicable
        } else {
            let ok = g.induced_subgraph(&part_k).ok().is_some_and(|(sub, _)| {
                let gt = solvers::total_domination_number(&sub).ok();
                let gd = solvers::domination_number(&sub);
                gt == Some(2 * gd) && gt == Some(2 * s1.len())
            });
            Verdict::from_bool(ok)
        },
    );
    let part_l = s2.union(&r.p_double_prime);
    put(
        Statement::L,
        if part_l.is_empty() {
            Verdict::NotApplicable
        } else {
            let ok = g
                .induced_subgraph(&part_l)
                .ok()
                .and_then(|(sub, _)| solvers::total_domination_number(&sub).ok())
                == Some(s2.len());
            Verdict::from_bool(ok)
        },
    );
    put(
        Statement::M,
        if h.is_k2() {
            Verdict::NotApplicable
        } else {
            Verdict::from_bool(s1.is_empty())
        },
    );
    out
}

fn check_e_prime(r: &DecompositionReport, g: &Graph) -> Verdict {
    let Ok(choices) = solvers::all_min_total_dominators(g, &r.s_prime, DEFAULT_ENUMERATION_LIMIT) else {
        return Verdict::Fail;
    };
    if choices.is_empty() {
        return Verdict::Fail;
    }
    let ok = choices.iter().all(|t| {
        let x = r.s_prime.union(t).union(&r.s_double_prime);
        t.is_subset(&r.p_prime)
            && t.len() == r.s_prime.len()
            && x.len() == r.gamma_t_g
            && g.is_total_dominating(&x)
            && r.s_double_prime.iter().all(|v| {
                g.private_neighbors(v, &x)
                    .is_ok_and(|pn| pn.len() == 1 && pn.is_subset(&r.s_double_prime))
            })
    });
    Verdict::from_bool(ok)
}
