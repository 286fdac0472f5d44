//! graph6 interchange: one graph per ASCII line, upper-triangle bits in
//! 6-bit big-endian groups offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

fn g6_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 { offset, reason: reason.into() }
}

/// Parses one graph6 line. A leading `>>graph6<<` header is tolerated.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let base = if let Some(rest) = line.strip_prefix(HEADER) { rest } else { line };
    let header_len = line.len() - base.len();
    let bytes = base.as_bytes();
    if bytes.is_empty() {
        return Err(g6_err(header_len, "empty line"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(g6_err(header_len + i, format!("byte {b} outside graph6 range 63..=126")));
        }
    }

    // length prefix
    let (n, pos) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(g6_err(header_len, "8-byte length prefix not supported"));
        }
        if bytes.len() < 4 {
            return Err(g6_err(header_len, "short extended length prefix"));
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        (n, 4usize)
    } else {
        ((bytes[0] - 63) as usize, 1usize)
    };
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n, MAX_ORDER));
    }

    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() - pos < nbytes {
        return Err(g6_err(
            header_len + bytes.len(),
            format!("line too short: need {nbytes} adjacency bytes, got {}", bytes.len() - pos),
        ));
    }
    if bytes.len() - pos > nbytes {
        return Err(g6_err(header_len + pos + nbytes, "trailing bytes after adjacency data"));
    }

    let mut adj = vec![0u128; n];
    let mut bit_idx = 0usize;
    let mut push_bit = |i: usize, j: usize, set: bool| {
        if set {
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
    };
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + bit_idx / 6] - 63;
            let set = byte >> (5 - bit_idx % 6) & 1 == 1;
            push_bit(i, j, set);
            bit_idx += 1;
            if bit_idx == nbits {
                break 'outer;
            }
        }
    }
    // padding bits must be zero
    while bit_idx < nbytes * 6 {
        let byte = bytes[pos + bit_idx / 6] - 63;
        if byte >> (5 - bit_idx % 6) & 1 == 1 {
            return Err(g6_err(header_len + pos + bit_idx / 6, "nonzero trailing bits"));
        }
        bit_idx += 1;
    }
    Graph::from_edges(n, &graph_edges(&adj))
}

fn graph_edges(adj: &[u128]) -> Vec<(usize, usize)> {
    let n = adj.len();
    let mut out = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if adj[u] >> v & 1 == 1 {
                out.push((u, v));
            }
        }
    }
    out
}

/// Emits the graph6 line (no trailing newline) for a graph.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        out.push(63 + ((n >> 12) & 0x3f) as u8);
        out.push(63 + ((n >> 6) & 0x3f) as u8);
        out.push(63 + (n & 0x3f) as u8);
    }
    let mut acc = 0u8;
    let mut nacc = 0u8;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            nacc += 1;
            if nacc == 6 {
                out.push(63 + acc);
                acc = 0;
                nacc = 0;
            }
        }
    }
    if nacc > 0 {
        out.push(63 + (acc << (6 - nacc)));
    }
    String::from_utf8(out).unwrap()
}
