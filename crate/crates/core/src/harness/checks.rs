//! Per-item work of each campaign: one JSON line per graph or pair.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::json;

use super::campaign::{CampaignKind, CampaignParams, Violation};
use super::QuotientRecord;
use crate::corpus::GraphRecord;
use crate::error::Result;
use crate::families::{self, build_equality_tdset, ClassifyOptions, Decomposer, Statement, Verdict};
use crate::graph::Graph;
use crate::product::cartesian_product;
use crate::solvers;

/// Invariants of one corpus graph, computed once per campaign.
#[derive(Clone, Debug)]
pub(crate) struct GraphInfo {
    pub gt: usize,
    pub gamma: usize,
    pub rho2: usize,
    /// `γ_t(G □ K2)`, for question 1.
    pub gt_k2: Option<usize>,
    /// Membership in `F1 ∪ F2 ∪ F3`, for theorem 3.
    pub in_families: Option<bool>,
}

pub(crate) fn graph_info(g: &Graph, with_k2: bool, with_families: bool, opts: ClassifyOptions) -> Result<GraphInfo> {
    let gt_k2 = if with_k2 {
        Some(solvers::total_domination_number(cartesian_product(g, &Graph::k2()).graph())?)
    } else {
        None
    };
    let in_families = if with_families {
        Some(families::classify_with(g, opts)?.in_any())
    } else {
        None
    };
    Ok(GraphInfo {
        gt: solvers::total_domination_number(g)?,
        gamma: solvers::domination_number(g),
        rho2: solvers::rho_2(g).value,
        gt_k2,
        in_families,
    })
}

#[derive(Serialize)]
struct ErrorLine<'a> {
    index: usize,
    g6_g: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    g6_h: Option<&'a str>,
    error: String,
}

pub(crate) fn error_line(index: usize, g: &GraphRecord, h: Option<&GraphRecord>, error: impl ToString) -> String {
    serde_json::to_string(&ErrorLine {
        index,
        g6_g: &g.g6,
        g6_h: h.map(|h| h.g6.as_str()),
        error: error.to_string(),
    })
    .expect("serializable")
}

#[derive(Serialize)]
struct Q1Check {
    gt_g_k2: usize,
    holds: bool,
}

#[derive(Serialize)]
struct Thm3Check {
    lhs: bool,
    rhs: bool,
}

#[derive(Serialize)]
struct Prop1Check {
    qualifying: bool,
    td_sets: usize,
    /// Per statement: pass, fail and not-applicable counts.
    verdicts: BTreeMap<Statement, [usize; 3]>,
}

#[derive(Serialize)]
struct PairLine<'a> {
    #[serde(flatten)]
    record: &'a QuotientRecord,
    index: usize,
    rho2_g: usize,
    rho2_h: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    q1: Option<Q1Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    thm3: Option<Thm3Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    prop1: Option<Prop1Check>,
    violations: Vec<Violation>,
}

struct PairContext<'a> {
    index: usize,
    g: &'a GraphRecord,
    h: &'a GraphRecord,
}

impl PairContext<'_> {
    fn violation(&self, check: &str, detail: serde_json::Value) -> Violation {
        Violation {
            index: self.index,
            check: check.into(),
            g6_g: self.g.g6.clone(),
            g6_h: Some(self.h.g6.clone()),
            detail,
        }
    }
}

/// Ho's bound (equivalently `q_t >= 1/2`), `γ_t(G), γ_t(H) <= γ_t(G □ H)`
/// and `γ_t(G □ H) >= ρ_2(G) γ_t(H)` in both orientations.
fn base_checks(cx: &PairContext, r: &QuotientRecord, ig: &GraphInfo, ih: &GraphInfo, product: &Graph) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut failed = Vec::new();
    if !r.satisfies_ho() {
        failed.push("ho");
    }
    if r.gt_g > r.gt_product || r.gt_h > r.gt_product {
        failed.push("eq1");
    }
    if r.gt_product < ig.rho2 * r.gt_h || r.gt_product < ih.rho2 * r.gt_g {
        failed.push("rho2_bound");
    }
    if !failed.is_empty() {
        let cert = solvers::gamma_t(product).map(|s| s.certificate.to_vec()).unwrap_or_default();
        for check in failed {
            out.push(cx.violation(
                check,
                json!({
                    "gt_g": r.gt_g, "gt_h": r.gt_h, "gt_product": r.gt_product,
                    "rho2_g": ig.rho2, "rho2_h": ih.rho2, "product_certificate": cert,
                }),
            ));
        }
    }
    out
}

pub(crate) fn pair_item(
    kind: CampaignKind,
    params: &CampaignParams,
    index: usize,
    g: &GraphRecord,
    h: &GraphRecord,
    ig: &GraphInfo,
    ih: &GraphInfo,
) -> String {
    match pair_line(kind, params, index, g, h, ig, ih) {
        Ok(line) => line,
        Err(e) => error_line(index, g, Some(h), e),
    }
}

fn pair_line(
    kind: CampaignKind,
    params: &CampaignParams,
    index: usize,
    g: &GraphRecord,
    h: &GraphRecord,
    ig: &GraphInfo,
    ih: &GraphInfo,
) -> Result<String> {
    let cx = PairContext { index, g, h };
    let product = cartesian_product(&g.graph, &h.graph);
    let gt_product = solvers::total_domination_number(product.graph())?;
    let record = QuotientRecord::from_values(
        g.g6.clone(),
        h.g6.clone(),
        g.graph.n(),
        h.graph.n(),
        ig.gt,
        ih.gt,
        gt_product,
    );
    let mut violations = base_checks(&cx, &record, ig, ih, product.graph());
    let mut line = PairLine {
        record: &record,
        index,
        rho2_g: ig.rho2,
        rho2_h: ih.rho2,
        q1: None,
        thm3: None,
        prop1: None,
        violations: Vec::new(),
    };
    match kind {
        CampaignKind::Ho | CampaignKind::Theorem2 => {}
        CampaignKind::Question1 => {
            let gt_g_k2 = ig.gt_k2.expect("computed for question 1");
            let holds = 2 * gt_product >= gt_g_k2 * ih.gt;
            if !holds {
                let k2 = cartesian_product(&g.graph, &Graph::k2());
                violations.push(cx.violation(
                    "q1",
                    json!({
                        "gt_product": gt_product, "gt_g_k2": gt_g_k2, "gt_h": ih.gt,
                        "product_certificate": solvers::gamma_t(product.graph())?.certificate.to_vec(),
                        "g_k2_certificate": solvers::gamma_t(k2.graph())?.certificate.to_vec(),
                    }),
                ));
            }
            line.q1 = Some(Q1Check { gt_g_k2, holds });
        }
        CampaignKind::Theorem3 => {
            let lhs = ig.gt == gt_product;
            let rhs = (g.graph.is_k2() && ih.gamma == 1)
                || (h.graph.is_k2() && ig.in_families.expect("computed for theorem 3"));
            if lhs != rhs {
                violations.push(cx.violation(
                    "thm3",
                    json!({
                        "lhs": lhs, "rhs": rhs, "gamma_h": ih.gamma,
                        "product_certificate": solvers::gamma_t(product.graph())?.certificate.to_vec(),
                        "g_certificate": solvers::gamma_t(&g.graph)?.certificate.to_vec(),
                    }),
                ));
            }
            line.thm3 = Some(Thm3Check { lhs, rhs });
        }
        CampaignKind::Proposition1 => {
            let qualifying = ig.gt == gt_product;
            let mut check = Prop1Check {
                qualifying,
                td_sets: 0,
                verdicts: Statement::ALL.iter().map(|&s| (s, [0; 3])).collect(),
            };
            if qualifying {
                let decomposer = Decomposer::new(&g.graph, &h.graph)?;
                let sets = solvers::all_min_td_sets(product.graph(), params.td_set_cap)?;
                check.td_sets = sets.len();
                for d in &sets {
                    let report = decomposer.decompose(d)?;
                    for (s, v) in &report.statements {
                        let slot = match v {
                            Verdict::Pass => 0,
                            Verdict::Fail => 1,
                            Verdict::NotApplicable => 2,
                        };
                        check.verdicts.get_mut(s).expect("all statements")[slot] += 1;
                    }
                    let failed = report.failed();
                    if !failed.is_empty() {
                        violations.push(cx.violation(
                            "prop1",
                            json!({ "failed": failed, "report": serde_json::to_value(&report)? }),
                        ));
                    }
                }
            }
            line.prop1 = Some(check);
        }
    }
    line.violations = violations;
    Ok(serde_json::to_string(&line)?)
}

#[derive(Serialize)]
struct GraphLine<'a> {
    g6: &'a str,
    index: usize,
    n: usize,
    gt_g: usize,
    gt_g_k2: usize,
    families: Vec<&'static str>,
    equal: bool,
    in_families: bool,
    violations: Vec<Violation>,
}

/// The K2 equality characterization for one graph, including a re-check of every witness and of
/// the explicit `γ_t(G)`-size TD-set of `G □ K2` built from one.
pub(crate) fn graph_item(params: &CampaignParams, index: usize, g: &GraphRecord) -> String {
    match graph_line(params, index, g) {
        Ok(line) => line,
        Err(e) => error_line(index, g, None, e),
    }
}

fn graph_line(params: &CampaignParams, index: usize, g: &GraphRecord) -> Result<String> {
    let opts = params.classify_options();
    let gt_g = solvers::total_domination_number(&g.graph)?;
    let product = cartesian_product(&g.graph, &Graph::k2());
    let gt_g_k2 = solvers::total_domination_number(product.graph())?;
    let classification = families::classify_with(&g.graph, opts)?;
    let equal = gt_g == gt_g_k2;
    let in_families = classification.in_any();
    let violation = |check: &str, detail: serde_json::Value| Violation {
        index,
        check: check.into(),
        g6_g: g.g6.clone(),
        g6_h: None,
        detail,
    };
    let mut violations = Vec::new();
    if equal != in_families {
        violations.push(violation(
            "thm2",
            json!({
                "gt_g": gt_g, "gt_g_k2": gt_g_k2,
                "classification": serde_json::to_value(&classification)?,
                "g_k2_certificate": solvers::gamma_t(product.graph())?.certificate.to_vec(),
            }),
        ));
    }
    if !classification.verify(&g.graph) {
        violations.push(violation("witness", serde_json::to_value(&classification)?));
    }
    if in_families {
        let d = build_equality_tdset(&g.graph, &classification)?;
        if d.len() != gt_g || !product.graph().is_total_dominating(&d) {
            violations.push(violation("construction", json!({ "set": d.to_vec(), "gt_g": gt_g })));
        }
    }
    Ok(serde_json::to_string(&GraphLine {
        g6: &g.g6,
        index,
        n: g.graph.n(),
        gt_g,
        gt_g_k2,
        families: classification.labels(),
        equal,
        in_families,
        violations,
    })?)
}
