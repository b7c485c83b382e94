//! Graph corpora: graph6 files, enumerated classes, and predicate filters.

mod enumerate;
mod graph6;

use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

pub use enumerate::{enumerate_all, enumerate_connected, MAX_ENUMERATION_VERTICES};
pub use graph6::{parse_graph6, write_graph6, HEADER as GRAPH6_HEADER, MAX_VERTICES as GRAPH6_MAX_VERTICES};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solvers;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Line { file: String, line: usize },
    Enumerated,
}

#[derive(Clone, Debug)]
pub struct GraphRecord {
    pub graph: Graph,
    pub g6: String,
    pub source: Source,
}

impl GraphRecord {
    pub fn enumerated(graph: Graph) -> Result<Self> {
        Ok(Self {
            g6: write_graph6(&graph)?,
            graph,
            source: Source::Enumerated,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Predicate {
    Connected,
    NoIsolatedVertices,
    /// `γ_t = c`; graphs with isolated vertices never match.
    GammaT(usize),
    /// At least two vertices.
    Nontrivial,
}

impl Predicate {
    pub fn accepts(&self, g: &Graph) -> bool {
        match *self {
            Predicate::Connected => g.is_connected(),
            Predicate::NoIsolatedVertices => !g.has_isolated_vertex(),
            Predicate::GammaT(c) => solvers::total_domination_number(g).ok() == Some(c),
            Predicate::Nontrivial => g.n() >= 2,
        }
    }
}

/// Lazily parses graph6 lines from `reader` and yields the records passing
/// every predicate, in input order. Blank lines and a bare `>>graph6<<`
/// header line are skipped; parse errors carry their 1-based line number.
pub fn filter_stream<R: BufRead>(
    reader: R,
    file: String,
    predicates: Vec<Predicate>,
) -> impl Iterator<Item = Result<GraphRecord>> {
    reader.lines().enumerate().filter_map(move |(i, line)| {
        let line_no = i + 1;
        let text = match line {
            Ok(t) => t,
            Err(e) => return Some(Err(Error::Io(e))),
        };
        let body = text.trim_end_matches('\r');
        let body = body.strip_prefix(GRAPH6_HEADER).unwrap_or(body);
        if body.is_empty() {
            return None;
        }
        let graph = match parse_graph6(body) {
            Ok(g) => g,
            Err(e) => {
                return Some(Err(Error::AtLine {
                    line: line_no,
                    source: Box::new(e),
                }))
            }
        };
        if !predicates.iter().all(|p| p.accepts(&graph)) {
            return None;
        }
        Some(Ok(GraphRecord {
            g6: body.to_string(),
            graph,
            source: Source::Line {
                file: file.clone(),
                line: line_no,
            },
        }))
    })
}

pub fn read_graph6_file(path: &Path, predicates: Vec<Predicate>) -> Result<Vec<GraphRecord>> {
    let reader = BufReader::new(File::open(path)?);
    filter_stream(reader, path.display().to_string(), predicates).collect()
}

/// Enumerated connected graphs with `min_n..=max_n` vertices, as records.
pub fn connected_corpus(min_n: usize, max_n: usize) -> Result<Vec<GraphRecord>> {
    let mut out = Vec::new();
    for n in min_n.max(1)..=max_n {
        for g in enumerate_connected(n)? {
            out.push(GraphRecord::enumerated(g)?);
        }
    }
    Ok(out)
}
