//! The graph6 text format: one simple undirected graph per line.
//!
//! A line is a vertex-count header followed by the upper triangle of the
//! adjacency matrix, read column by column (`x(0,1), x(0,2), x(1,2),
//! x(0,3), ...`), packed into 6-bit groups and offset by 63 so every byte
//! is printable ASCII in `63..=126`.  Unused bits in the final group must
//! be zero.
//!
//! Decoding rejects three classes of bad input: a malformed or truncated
//! header, bytes outside the printable range or a body whose length does
//! not match the header, and nonzero padding bits.  Duplicate edges cannot
//! occur by construction and loops are unrepresentable, so a successful
//! decode is always a simple graph.

use crate::error::{Error, Result};
use crate::graph::GeneralGraph;

const OFFSET: u8 = 63;
/// Largest vertex count expressible in the three-byte header form.
const MAX_N: usize = 258_047;
/// Optional prefix emitted by some tools in front of the first line.
pub const HEADER: &str = ">>graph6<<";

fn check_byte(byte: u8, pos: usize) -> Result<u8> {
    if (OFFSET..=126).contains(&byte) {
        Ok(byte - OFFSET)
    } else {
        Err(Error::Graph6Byte { byte, pos })
    }
}

/// Decode one graph6 line into a graph.  A leading `>>graph6<<` marker is
/// tolerated and surrounding whitespace is ignored.
pub fn parse_graph6(line: &str) -> Result<GeneralGraph> {
    let line = line.trim();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty line"));
    }

    let (n, body, body_pos) = if bytes[0] == 126 {
        if bytes.len() > 1 && bytes[1] == 126 {
            return Err(Error::Graph6("eight-byte vertex counts are not supported"));
        }
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated header"));
        }
        let mut n = 0usize;
        for (i, &b) in bytes[1..4].iter().enumerate() {
            n = (n << 6) | check_byte(b, 1 + i)? as usize;
        }
        if n <= 62 {
            return Err(Error::Graph6("long header used for a small vertex count"));
        }
        (n, &bytes[4..], 4)
    } else {
        let n = check_byte(bytes[0], 0)? as usize;
        (n, &bytes[1..], 1)
    };
    if n > MAX_N {
        return Err(Error::Graph6("vertex count out of range"));
    }

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6("body length does not match the vertex count"));
    }
    let mut groups = Vec::with_capacity(expected);
    for (i, &b) in body.iter().enumerate() {
        groups.push(check_byte(b, body_pos + i)?);
    }

    let bit = |k: usize| groups[k / 6] >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    for pad in bits..expected * 6 {
        if bit(pad) {
            return Err(Error::Graph6("nonzero padding bits"));
        }
    }
    GeneralGraph::from_edges(n, &edges)
}

/// Encode a graph as a single graph6 line (without trailing newline).
pub fn emit_graph6(g: &GeneralGraph) -> String {
    let n = g.n();
    assert!(n <= MAX_N, "graph too large for graph6");
    let mut out = Vec::new();
    if n <= 62 {
        out.push(OFFSET + n as u8);
    } else {
        out.push(126);
        out.push(OFFSET + (n >> 12) as u8);
        out.push(OFFSET + (n >> 6 & 63) as u8);
        out.push(OFFSET + (n & 63) as u8);
    }

    let bits = n * n.saturating_sub(1) / 2;
    let mut groups = vec![0u8; bits.div_ceil(6)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                groups[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    out.extend(groups.into_iter().map(|v| v + OFFSET));
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}
