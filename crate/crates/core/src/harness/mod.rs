//! Quotients, verification campaigns and their persisted results.

mod campaign;
mod checks;

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use campaign::{
    export_csv, run_campaign, CampaignConfig, CampaignKind, CampaignParams, CampaignReport, Skipped, Violation, FORMAT_VERSION,
};

use crate::corpus::{write_graph6, GraphRecord};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::product::cartesian_product;
use crate::solvers;

/// One `(G, H)` pair's total domination numbers and their exact quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientRecord {
    pub g6_g: String,
    pub g6_h: String,
    pub n_g: usize,
    pub n_h: usize,
    pub gt_g: usize,
    pub gt_h: usize,
    pub gt_product: usize,
    #[serde(serialize_with = "ser_ratio", deserialize_with = "de_ratio")]
    pub qt: Ratio<u64>,
    pub ho_tight: bool,
    pub eq1_tight: bool,
}

impl QuotientRecord {
    pub fn from_values(g6_g: String, g6_h: String, n_g: usize, n_h: usize, gt_g: usize, gt_h: usize, gt_product: usize) -> Self {
        let qt = Ratio::new(gt_product as u64, (gt_g * gt_h) as u64);
        Self {
            g6_g,
            g6_h,
            n_g,
            n_h,
            gt_g,
            gt_h,
            gt_product,
            qt,
            ho_tight: qt == Ratio::new(1, 2),
            eq1_tight: gt_g == gt_product,
        }
    }

    /// `q_t >= 1/2`, checked as `2 γ_t(G □ H) >= γ_t(G) γ_t(H)`.
    pub fn satisfies_ho(&self) -> bool {
        2 * self.gt_product >= self.gt_g * self.gt_h
    }
}

/// Formats a ratio as `"num/den"` in lowest terms, including integers (`"1/1"`).
pub fn format_ratio(r: &Ratio<u64>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_ratio(s: &str) -> Option<Ratio<u64>> {
    let (a, b) = s.split_once('/')?;
    let (a, b) = (u64::from_str(a).ok()?, u64::from_str(b).ok()?);
    (b != 0).then(|| Ratio::new(a, b))
}

fn ser_ratio<S: Serializer>(r: &Ratio<u64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_ratio(r))
}

fn de_ratio<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Ratio<u64>, D::Error> {
    let s = String::deserialize(d)?;
    parse_ratio(&s).ok_or_else(|| serde::de::Error::custom(format!("bad rational {s:?}")))
}

impl fmt::Display for QuotientRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} x {}: γ_t = {}, {}, product {}; q_t = {}",
            self.g6_g,
            self.g6_h,
            self.gt_g,
            self.gt_h,
            self.gt_product,
            format_ratio(&self.qt)
        )
    }
}

/// `q_t(G, H) = γ_t(G □ H) / (γ_t(G) γ_t(H))`.
pub fn quotient(g: &Graph, h: &Graph) -> Result<QuotientRecord> {
    let gt_g = solvers::total_domination_number(g)?;
    let gt_h = solvers::total_domination_number(h)?;
    let gt_product = solvers::total_domination_number(cartesian_product(g, h).graph())?;
    Ok(QuotientRecord::from_values(
        write_graph6(g)?,
        write_graph6(h)?,
        g.n(),
        h.n(),
        gt_g,
        gt_h,
        gt_product,
    ))
}

fn sorted_by_g6(corpus: &[GraphRecord]) -> Vec<&GraphRecord> {
    let mut v: Vec<&GraphRecord> = corpus.iter().collect();
    v.sort_by(|a, b| a.g6.cmp(&b.g6));
    v
}

/// A pair with `q_t = 1/2`, and whether it has a `K2` factor.
#[derive(Clone, Debug, Serialize)]
pub struct EqualityPair {
    pub record: QuotientRecord,
    pub k2_factor: bool,
}

/// Every pair of the two corpora with `q_t` exactly `1/2`, in pair order.
pub fn find_equality_pairs(corpus_g: &[GraphRecord], corpus_h: &[GraphRecord]) -> Result<Vec<EqualityPair>> {
    let gs = sorted_by_g6(corpus_g);
    let hs = sorted_by_g6(corpus_h);
    let pairs: Vec<(&GraphRecord, &GraphRecord)> =
        gs.iter().flat_map(|g| hs.iter().map(move |h| (*g, *h))).collect();
    let found: Vec<Option<EqualityPair>> = pairs
        .par_iter()
        .map(|(g, h)| {
            let record = quotient(&g.graph, &h.graph)?;
            Ok(record.ho_tight.then(|| EqualityPair {
                k2_factor: g.graph.is_k2() || h.graph.is_k2(),
                record,
            }))
        })
        .collect::<Result<_>>()?;
    Ok(found.into_iter().flatten().collect())
}

/// Minimum of `q_t(G, H)` over the corpus, with the first minimizing record
/// in corpus order. This is a corpus minimum, not the infimum over all graphs.
pub fn qt_inf_over_corpus(g: &Graph, corpus_h: &[GraphRecord]) -> Result<(Ratio<u64>, QuotientRecord)> {
    if corpus_h.is_empty() {
        return Err(Error::InvalidParameter("empty corpus".into()));
    }
    let records: Vec<QuotientRecord> = corpus_h
        .par_iter()
        .map(|h| quotient(g, &h.graph))
        .collect::<Result<_>>()?;
    let best = records
        .into_iter()
        .reduce(|best, r| if r.qt < best.qt { r } else { best })
        .expect("nonempty");
    Ok((best.qt, best))
}

fn in_memory(kind: CampaignKind, g: &[GraphRecord], h: &[GraphRecord]) -> CampaignConfig {
    CampaignConfig::new(kind, g.to_vec(), h.to_vec())
}

/// `2 γ_t(G □ H) >= γ_t(G □ K2) γ_t(H)` for every pair.
pub fn verify_question1(corpus_g: &[GraphRecord], corpus_h: &[GraphRecord]) -> Result<CampaignReport> {
    run_campaign(&in_memory(CampaignKind::Question1, corpus_g, corpus_h))
}

/// Ho's bound, both monotonicity inequalities and the 2-packing bound.
pub fn verify_ho(corpus_g: &[GraphRecord], corpus_h: &[GraphRecord]) -> Result<CampaignReport> {
    run_campaign(&in_memory(CampaignKind::Ho, corpus_g, corpus_h))
}

/// `γ_t(G) = γ_t(G □ K2)` iff `G ∈ F1 ∪ F2 ∪ F3`, per graph.
pub fn verify_theorem2(corpus: &[GraphRecord]) -> Result<CampaignReport> {
    run_campaign(&in_memory(CampaignKind::Theorem2, corpus, &[]))
}

pub fn verify_theorem3(corpus_g: &[GraphRecord], corpus_h: &[GraphRecord]) -> Result<CampaignReport> {
    run_campaign(&in_memory(CampaignKind::Theorem3, corpus_g, corpus_h))
}

/// Decomposes every minimum TD-set of every qualifying product, failing if
/// more than `td_set_cap` minimum sets exist for one pair.
pub fn verify_proposition1(
    corpus_g: &[GraphRecord],
    corpus_h: &[GraphRecord],
    td_set_cap: usize,
) -> Result<CampaignReport> {
    let mut cfg = in_memory(CampaignKind::Proposition1, corpus_g, corpus_h);
    cfg.params.td_set_cap = td_set_cap;
    run_campaign(&cfg)
}
