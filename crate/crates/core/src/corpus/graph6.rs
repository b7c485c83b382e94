//! graph6 encoding, restricted to the one-byte size form (`n <= 62`).
//!
//! A line is the byte `n + 63` followed by the upper-triangle adjacency bits
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...` packed six per byte (most
//! significant first), zero-padded, each group written as `value + 63`.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const HEADER: &str = ">>graph6<<";
pub const MAX_VERTICES: usize = 62;

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::BadLength { expected: 1, found: 0 });
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::BadChar { byte: bytes[pos], pos });
    }
    if bytes[0] == 126 {
        return Err(Error::UnsupportedSize);
    }
    let n = (bytes[0] - 63) as usize;
    if n == 0 {
        return Err(Error::UnsupportedSize);
    }
    let expected = 1 + data_len(n);
    if bytes.len() != expected {
        return Err(Error::BadLength {
            expected,
            found: bytes.len(),
        });
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_VERTICES {
        return Err(Error::UnsupportedSize);
    }
    let mut data = vec![0u8; data_len(n)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                data[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    let mut out = String::with_capacity(1 + data.len());
    out.push((n as u8 + 63) as char);
    out.extend(data.into_iter().map(|b| (b + 63) as char));
    Ok(out)
}
