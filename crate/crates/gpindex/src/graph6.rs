//! graph6 encoding and decoding.
//!
//! 6-bit groups offset by 63, size header `N(n)`, then the upper triangle of
//! the adjacency matrix in column-major order, padded with zero bits.

use crate::error::{Error, Result, MAX_VERTICES};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

/// Decodes one graph6 line. A leading `>>graph6<<` header is tolerated.
pub fn parse(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("truncated: empty input".into()));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("byte {b} outside 63..=126")));
        }
    }
    let (n, mut pos) = if bytes[0] == 126 {
        // long form: '~' then 18 bits
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Error::Graph6("36-bit size form exceeds the size cap".into()));
        }
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated size header".into()));
        }
        let n = ((bytes[1] as usize - 63) << 12)
            | ((bytes[2] as usize - 63) << 6)
            | (bytes[3] as usize - 63);
        (n, 4)
    } else {
        (bytes[0] as usize - 63, 1)
    };
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > MAX_VERTICES {
        return Err(Error::SizeCap(n, MAX_VERTICES));
    }
    let bit_count = n * (n - 1) / 2;
    let byte_count = bit_count.div_ceil(6);
    if bytes.len() - pos < byte_count {
        return Err(Error::Graph6(format!(
            "truncated: need {byte_count} payload bytes, found {}",
            bytes.len() - pos
        )));
    }
    if bytes.len() - pos > byte_count {
        return Err(Error::Graph6("trailing bytes after payload".into()));
    }
    let mut g = Graph::empty(n)?;
    let mut bit = 0usize;
    let mut acc = 0u8;
    let mut left = 0u8;
    for v in 1..n {
        for u in 0..v {
            if left == 0 {
                acc = bytes[pos] - 63;
                pos += 1;
                left = 6;
            }
            if acc & (1 << (left - 1)) != 0 {
                g.add_edge(u, v)?;
            }
            left -= 1;
            bit += 1;
        }
    }
    let _ = bit;
    // padding bits must be zero
    if left > 0 && acc & ((1 << left) - 1) != 0 {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    Ok(g)
}

/// Encodes a graph as a graph6 string (no header, no newline).
pub fn emit(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut used = 0u8;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            used += 1;
            if used == 6 {
                out.push(acc + 63);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((acc << (6 - used)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}
