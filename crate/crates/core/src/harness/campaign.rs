//! Campaign runner: ordered parallel evaluation, JSONL persistence,
//! checkpoints and resume.
//!
//! A result file is a header line followed by one line per work item in item
//! order. Items are evaluated in chunks on a dedicated pool; each chunk is
//! appended in order and then the checkpoint (next item index and file
//! length) is replaced atomically. Resuming truncates the file to the
//! checkpointed length, so a crash between the two writes loses nothing.

use std::collections::BTreeMap;
use std::fmt;
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::checks::{error_line, graph_info, graph_item, pair_item, GraphInfo};
use crate::corpus::{GraphRecord, Predicate};
use crate::error::{Error, Result};
use crate::families::{ClassifyOptions, DEFAULT_F3_CAP};
use crate::solvers::DEFAULT_ENUMERATION_LIMIT;

pub const FORMAT_VERSION: &str = "1";
const DEFAULT_CHUNK: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CampaignKind {
    #[serde(rename = "ho")]
    Ho,
    #[serde(rename = "q1")]
    Question1,
    #[serde(rename = "thm2")]
    Theorem2,
    #[serde(rename = "thm3")]
    Theorem3,
    #[serde(rename = "prop1")]
    Proposition1,
}

impl CampaignKind {
    pub fn name(self) -> &'static str {
        match self {
            CampaignKind::Ho => "ho",
            CampaignKind::Question1 => "q1",
            CampaignKind::Theorem2 => "thm2",
            CampaignKind::Theorem3 => "thm3",
            CampaignKind::Proposition1 => "prop1",
        }
    }

    pub fn is_pairwise(self) -> bool {
        self != CampaignKind::Theorem2
    }

    /// Corpus filters for the `G` and `H` sides.
    pub fn predicates(self) -> (Vec<Predicate>, Vec<Predicate>) {
        use Predicate::*;
        let connected = vec![Nontrivial, Connected, NoIsolatedVertices];
        match self {
            CampaignKind::Ho | CampaignKind::Question1 => (connected.clone(), connected),
            CampaignKind::Theorem2 => (vec![Nontrivial, NoIsolatedVertices], vec![]),
            CampaignKind::Theorem3 | CampaignKind::Proposition1 => {
                let mut h = connected.clone();
                h.push(GammaT(2));
                (connected, h)
            }
        }
    }
}

impl fmt::Display for CampaignKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CampaignKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "ho" => CampaignKind::Ho,
            "q1" => CampaignKind::Question1,
            "thm2" => CampaignKind::Theorem2,
            "thm3" => CampaignKind::Theorem3,
            "prop1" => CampaignKind::Proposition1,
            _ => return Err(Error::InvalidParameter(format!("unknown campaign {s:?}"))),
        })
    }
}

/// Everything that determines the result file's contents. Worker counts and
/// timing are deliberately absent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignParams {
    pub g_corpus: String,
    pub h_corpus: Option<String>,
    pub enumeration_limit: usize,
    pub f3_cap: usize,
    pub td_set_cap: usize,
}

impl Default for CampaignParams {
    fn default() -> Self {
        Self {
            g_corpus: "in-memory".into(),
            h_corpus: None,
            enumeration_limit: DEFAULT_ENUMERATION_LIMIT,
            f3_cap: DEFAULT_F3_CAP,
            td_set_cap: DEFAULT_ENUMERATION_LIMIT,
        }
    }
}

impl CampaignParams {
    pub fn classify_options(&self) -> ClassifyOptions {
        ClassifyOptions {
            enumeration_limit: self.enumeration_limit,
            f3_cap: self.f3_cap,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub index: usize,
    pub check: String,
    pub g6_g: String,
    pub g6_h: Option<String>,
    pub detail: serde_json::Value,
}

/// An item whose solver call failed; the campaign continues past it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Skipped {
    pub index: usize,
    pub g6_g: String,
    pub g6_h: Option<String>,
    pub error: String,
}

#[derive(Clone, Debug)]
pub struct CampaignConfig {
    pub kind: CampaignKind,
    pub params: CampaignParams,
    pub g: Vec<GraphRecord>,
    pub h: Vec<GraphRecord>,
    /// Worker threads; 0 uses all cores.
    pub jobs: usize,
    pub out: Option<PathBuf>,
    pub checkpoint: Option<PathBuf>,
    /// Also write `<out>.csv` once the campaign completes.
    pub csv: bool,
    /// Stop once this many items are done, as if interrupted.
    pub stop_at: Option<usize>,
    pub chunk: usize,
}

impl CampaignConfig {
    pub fn new(kind: CampaignKind, g: Vec<GraphRecord>, h: Vec<GraphRecord>) -> Self {
        Self {
            kind,
            params: CampaignParams::default(),
            g,
            h,
            jobs: 0,
            out: None,
            checkpoint: None,
            csv: false,
            stop_at: None,
            chunk: DEFAULT_CHUNK,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FilteredOut {
    pub g: usize,
    pub h: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CampaignReport {
    pub campaign: CampaignKind,
    pub format_version: &'static str,
    pub params: CampaignParams,
    pub items_total: usize,
    pub records_written: usize,
    pub filtered_out: FilteredOut,
    pub counters: BTreeMap<String, usize>,
    pub skipped: Vec<Skipped>,
    pub violations: Vec<Violation>,
    /// Index of the next item to evaluate.
    pub cursor: usize,
    pub complete: bool,
    pub wall_clock_ms: u128,
}

impl CampaignReport {
    /// 0 when no violation was found, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.violations.is_empty() {
            0
        } else {
            1
        }
    }
}

#[derive(Serialize)]
struct Header<'a> {
    format: &'static str,
    campaign: CampaignKind,
    params: &'a CampaignParams,
}

#[derive(Serialize, Deserialize)]
struct Checkpoint {
    header: String,
    next_index: usize,
    out_len: u64,
}

#[derive(Default)]
struct Tally {
    records: usize,
    counters: BTreeMap<String, usize>,
    skipped: Vec<Skipped>,
    violations: Vec<Violation>,
}

impl Tally {
    fn bump(&mut self, key: &str, by: usize) {
        *self.counters.entry(key.to_string()).or_default() += by;
    }

    fn absorb(&mut self, kind: CampaignKind, line: &str) -> Result<()> {
        let v: serde_json::Value = serde_json::from_str(line)?;
        self.records += 1;
        let text = |k: &str| v.get(k).and_then(|x| x.as_str()).map(str::to_string);
        if let Some(error) = text("error") {
            self.skipped.push(Skipped {
                index: v["index"].as_u64().unwrap_or_default() as usize,
                g6_g: text("g6_g").unwrap_or_default(),
                g6_h: text("g6_h"),
                error,
            });
            return Ok(());
        }
        if let Some(list) = v.get("violations") {
            self.violations.extend(Vec::<Violation>::deserialize(list)?);
        }
        let flag = |k: &str| v.get(k).and_then(|x| x.as_bool()) == Some(true);
        match kind {
            CampaignKind::Ho | CampaignKind::Question1 => {
                if flag("ho_tight") {
                    self.bump("ho_tight", 1);
                }
            }
            CampaignKind::Theorem2 => {
                if flag("equal") {
                    self.bump("equal", 1);
                }
                if flag("in_families") {
                    self.bump("in_families", 1);
                }
            }
            CampaignKind::Theorem3 => {
                if v["thm3"]["lhs"].as_bool() == Some(true) {
                    self.bump("equality_pairs", 1);
                }
            }
            CampaignKind::Proposition1 => {
                if v["prop1"]["qualifying"].as_bool() == Some(true) {
                    self.bump("qualifying_pairs", 1);
                    self.bump("td_sets", v["prop1"]["td_sets"].as_u64().unwrap_or_default() as usize);
                }
            }
        }
        Ok(())
    }
}

fn filter(corpus: &[GraphRecord], predicates: &[Predicate]) -> (Vec<GraphRecord>, usize) {
    let mut kept: Vec<GraphRecord> = corpus
        .iter()
        .filter(|r| predicates.iter().all(|p| p.accepts(&r.graph)))
        .cloned()
        .collect();
    let dropped = corpus.len() - kept.len();
    kept.sort_by(|a, b| a.g6.cmp(&b.g6));
    (kept, dropped)
}

fn write_atomic(path: &Path, contents: &[u8]) -> Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    {
        let mut f = File::create(&tmp)?;
        f.write_all(contents)?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)?;
    Ok(())
}

/// Opens the result file, resuming from `checkpoint` when it exists.
/// Returns the file positioned at its end and the first item to evaluate.
fn open_output(cfg: &CampaignConfig, header: &str, tally: &mut Tally) -> Result<Option<(File, usize)>> {
    let Some(out) = &cfg.out else {
        if cfg.checkpoint.is_some() {
            return Err(Error::InvalidParameter("a checkpoint needs an output file".into()));
        }
        return Ok(None);
    };
    if let Some(cp_path) = cfg.checkpoint.as_ref().filter(|p| p.exists()) {
        let cp: Checkpoint = serde_json::from_slice(&fs::read(cp_path)?)?;
        if cp.header != header {
            return Err(Error::InvalidParameter(
                "checkpoint belongs to a different campaign or parameter set".into(),
            ));
        }
        let file = OpenOptions::new().read(true).write(true).open(out)?;
        file.set_len(cp.out_len)?;
        let mut lines = BufReader::new(&file).lines();
        if lines.next().transpose()?.as_deref() != Some(header) {
            return Err(Error::InvalidParameter("result file header does not match checkpoint".into()));
        }
        for line in lines {
            tally.absorb(cfg.kind, &line?)?;
        }
        let file = OpenOptions::new().append(true).open(out)?;
        return Ok(Some((file, cp.next_index)));
    }
    let mut file = File::create(out)?;
    writeln!(file, "{header}")?;
    file.flush()?;
    Ok(Some((file, 0)))
}

fn write_checkpoint(cfg: &CampaignConfig, header: &str, next_index: usize, file: &File) -> Result<()> {
    if let Some(path) = &cfg.checkpoint {
        let cp = Checkpoint {
            header: header.to_string(),
            next_index,
            out_len: file.metadata()?.len(),
        };
        write_atomic(path, &serde_json::to_vec(&cp)?)?;
    }
    Ok(())
}

/// Flattens the item lines of a result file into a CSV table whose columns
/// are all top-level keys in order of first appearance.
pub fn export_csv(jsonl: &Path, csv_path: &Path) -> Result<()> {
    let reader = BufReader::new(File::open(jsonl)?);
    let mut rows: Vec<serde_json::Map<String, serde_json::Value>> = Vec::new();
    let mut columns: Vec<String> = Vec::new();
    for line in reader.lines().skip(1) {
        let serde_json::Value::Object(map) = serde_json::from_str(&line?)? else {
            continue;
        };
        for k in map.keys() {
            if !columns.contains(k) {
                columns.push(k.clone());
            }
        }
        rows.push(map);
    }
    let mut w = csv::Writer::from_path(csv_path).map_err(|e| Error::Io(e.into()))?;
    let csv_err = |e: csv::Error| Error::Io(e.into());
    w.write_record(&columns).map_err(csv_err)?;
    for row in &rows {
        let cells = columns.iter().map(|c| match row.get(c) {
            None | Some(serde_json::Value::Null) => String::new(),
            Some(serde_json::Value::String(s)) => s.clone(),
            Some(v) => v.to_string(),
        });
        w.write_record(cells).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

pub fn run_campaign(cfg: &CampaignConfig) -> Result<CampaignReport> {
    let started = Instant::now();
    let kind = cfg.kind;
    let params = &cfg.params;
    let (pg, ph) = kind.predicates();
    let (gs, g_dropped) = filter(&cfg.g, &pg);
    let (hs, h_dropped) = if kind.is_pairwise() { filter(&cfg.h, &ph) } else { (Vec::new(), 0) };
    let total = if kind.is_pairwise() { gs.len() * hs.len() } else { gs.len() };
    let end = cfg.stop_at.map_or(total, |s| s.min(total));
    let header = serde_json::to_string(&Header {
        format: FORMAT_VERSION,
        campaign: kind,
        params,
    })?;

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Error::InvalidParameter(e.to_string()))?;

    let mut tally = Tally::default();
    let mut output = open_output(cfg, &header, &mut tally)?;
    let start = output.as_ref().map_or(0, |(_, s)| *s);

    let (g_info, h_info) = if kind.is_pairwise() && start < end {
        let opts = params.classify_options();
        let q1 = kind == CampaignKind::Question1;
        let thm3 = kind == CampaignKind::Theorem3;
        pool.install(|| {
            let gi: Vec<std::result::Result<GraphInfo, String>> = gs
                .par_iter()
                .map(|r| graph_info(&r.graph, q1, thm3, opts).map_err(|e| e.to_string()))
                .collect();
            let hi: Vec<std::result::Result<GraphInfo, String>> = hs
                .par_iter()
                .map(|r| graph_info(&r.graph, false, false, opts).map_err(|e| e.to_string()))
                .collect();
            (gi, hi)
        })
    } else {
        (Vec::new(), Vec::new())
    };

    let evaluate = |i: usize| -> String {
        if !kind.is_pairwise() {
            return graph_item(params, i, &gs[i]);
        }
        let (a, b) = (i / hs.len(), i % hs.len());
        match (&g_info[a], &h_info[b]) {
            (Ok(ig), Ok(ih)) => pair_item(kind, params, i, &gs[a], &hs[b], ig, ih),
            (Err(e), _) | (_, Err(e)) => error_line(i, &gs[a], Some(&hs[b]), e),
        }
    };

    let chunk = cfg.chunk.max(1);
    let mut next = start;
    while next < end {
        let upto = (next + chunk).min(end);
        let lines: Vec<String> = pool.install(|| (next..upto).into_par_iter().map(evaluate).collect());
        if let Some((file, _)) = output.as_mut() {
            let mut buf = String::new();
            for line in &lines {
                buf.push_str(line);
                buf.push('\n');
            }
            file.write_all(buf.as_bytes())?;
            file.flush()?;
            file.sync_data()?;
        }
        for line in &lines {
            tally.absorb(kind, line)?;
        }
        next = upto;
        if let Some((file, _)) = output.as_ref() {
            write_checkpoint(cfg, &header, next, file)?;
        }
    }

    let complete = next.max(start) >= total;
    if complete && cfg.csv {
        if let Some(out) = &cfg.out {
            let mut csv_path = out.as_os_str().to_owned();
            csv_path.push(".csv");
            export_csv(out, Path::new(&csv_path))?;
        }
    }

    Ok(CampaignReport {
        campaign: kind,
        format_version: FORMAT_VERSION,
        params: params.clone(),
        items_total: total,
        records_written: tally.records,
        filtered_out: FilteredOut { g: g_dropped, h: h_dropped },
        counters: tally.counters,
        skipped: tally.skipped,
        violations: tally.violations,
        cursor: next.max(start),
        complete,
        wall_clock_ms: started.elapsed().as_millis(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::connected_corpus;

    fn small() -> Vec<GraphRecord> {
        connected_corpus(1, 4).unwrap()
    }

    #[test]
    fn question1_small_corpus() {
        let cfg = CampaignConfig::new(CampaignKind::Question1, small(), small());
        let r = run_campaign(&cfg).unwrap();
        assert_eq!(r.filtered_out, FilteredOut { g: 1, h: 1 });
        assert_eq!(r.items_total, 9 * 9);
        assert_eq!(r.records_written, 81);
        assert!(r.violations.is_empty() && r.skipped.is_empty() && r.complete);
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn theorem_campaigns_small_corpus() {
        for kind in [CampaignKind::Theorem2, CampaignKind::Theorem3, CampaignKind::Proposition1, CampaignKind::Ho] {
            let r = run_campaign(&CampaignConfig::new(kind, small(), small())).unwrap();
            assert!(r.violations.is_empty(), "{kind}: {:?}", r.violations);
            assert!(r.skipped.is_empty(), "{kind}");
        }
    }

    #[test]
    fn resume_reproduces_file() {
        let dir = tempfile::tempdir().unwrap();
        let full = dir.path().join("full.jsonl");
        let part = dir.path().join("part.jsonl");
        let cp = dir.path().join("part.ckpt");

        let mut cfg = CampaignConfig::new(CampaignKind::Question1, small(), small());
        cfg.chunk = 7;
        cfg.out = Some(full.clone());
        run_campaign(&cfg).unwrap();

        cfg.out = Some(part.clone());
        cfg.checkpoint = Some(cp.clone());
        cfg.stop_at = Some(40);
        let first = run_campaign(&cfg).unwrap();
        assert!(!first.complete);
        assert_eq!(first.cursor, 40);
        cfg.stop_at = None;
        let second = run_campaign(&cfg).unwrap();
        assert!(second.complete);
        assert_eq!(second.records_written, 81);
        assert_eq!(fs::read(&full).unwrap(), fs::read(&part).unwrap());
    }

    #[test]
    fn checkpoint_must_match_parameters() {
        let dir = tempfile::tempdir().unwrap();
        let mut cfg = CampaignConfig::new(CampaignKind::Ho, small(), small());
        cfg.out = Some(dir.path().join("r.jsonl"));
        cfg.checkpoint = Some(dir.path().join("r.ckpt"));
        cfg.stop_at = Some(5);
        run_campaign(&cfg).unwrap();
        cfg.params.g_corpus = "other".into();
        assert!(matches!(run_campaign(&cfg), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn csv_export() {
        let dir = tempfile::tempdir().unwrap();
        let mut cfg = CampaignConfig::new(CampaignKind::Ho, small(), small());
        cfg.out = Some(dir.path().join("r.jsonl"));
        cfg.csv = true;
        run_campaign(&cfg).unwrap();
        let text = fs::read_to_string(dir.path().join("r.jsonl.csv")).unwrap();
        let mut lines = text.lines();
        assert!(lines.next().unwrap().starts_with("g6_g,g6_h,n_g,n_h,gt_g,gt_h,gt_product,qt,"));
        assert_eq!(lines.count(), 81);
        assert!(text.contains(",1/2,"));
    }

    #[test]
    fn kind_names_round_trip() {
        for k in ["ho", "q1", "thm2", "thm3", "prop1"] {
            assert_eq!(k.parse::<CampaignKind>().unwrap().name(), k);
        }
        assert!("x".parse::<CampaignKind>().is_err());
    }
}
