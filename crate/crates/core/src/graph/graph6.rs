//! graph6 short form (`n <= 62`).
//!
//! The first byte is `63 + n`. The upper triangle of the adjacency matrix is
//! then read column by column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed
//! six bits per byte with the most significant bit first, and each group
//! offset by 63. Padding bits at the end are zero.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const OFFSET: u8 = 63;

fn err(position: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        position,
        reason: reason.into(),
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((OFFSET + n as u8) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push((OFFSET + acc) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((OFFSET + (acc << (6 - filled))) as char);
    }
    out
}

/// Parses one graph6 line. Surrounding whitespace is ignored; an optional
/// `>>graph6<<` header is accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let start = text.len() - text.trim_start().len();
    let mut body = text.trim();
    let mut base = start;
    if let Some(rest) = body.strip_prefix(">>graph6<<") {
        body = rest;
        base += ">>graph6<<".len();
    }
    let bytes = body.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(err(base, "empty input"));
    };
    for (i, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(err(base + i, format!("byte {b:#04x} outside 63..=126")));
        }
    }
    if first == 126 {
        return Err(err(base, format!("long form header: graphs above {MAX_VERTICES} vertices are unsupported")));
    }
    let n = (first - OFFSET) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let want = bits.div_ceil(6);
    let data = &bytes[1..];
    if data.len() < want {
        return Err(err(
            base + bytes.len(),
            format!("truncated: {n} vertices need {want} data bytes, found {}", data.len()),
        ));
    }
    if data.len() > want {
        return Err(err(base + 1 + want, "trailing bytes after the adjacency data"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = data[k / 6] - OFFSET;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}
