//! graph6 encoding: the standard 6-bit packing of the upper triangle in
//! column order, with the usual 1-, 4-, or 8-byte size prefix.

use super::{GraphError, SimpleGraph};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {0:#x} outside the graph6 printable range 63..=126")]
    BadByte(u8),
    #[error("truncated graph6 string: expected {expected} payload chars, got {got}")]
    Truncated { expected: usize, got: usize },
    #[error("trailing data after graph6 payload")]
    TrailingData,
    #[error("vertex count {0} too large for this build")]
    TooLarge(u64),
    #[error("invalid graph: {0}")]
    Graph(#[from] GraphError),
}

pub fn to_graph6(g: &SimpleGraph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    }
    // upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
    let mut acc: u8 = 0;
    let mut nbits = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(63 + acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(63 + (acc << (6 - nbits)));
    }
    String::from_utf8(out).unwrap()
}

pub fn from_graph6(s: &str) -> Result<SimpleGraph, Graph6Error> {
    let s = s.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadByte(b));
        }
    }
    let (n, pos): (u64, usize) = if bytes[0] != 126 {
        ((bytes[0] - 63) as u64, 1)
    } else if bytes.len() > 1 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(Graph6Error::Truncated {
                expected: 4,
                got: bytes.len(),
            });
        }
        let mut n = 0u64;
        for &b in &bytes[1..4] {
            n = n << 6 | (b - 63) as u64;
        }
        (n, 4)
    } else {
        if bytes.len() < 8 {
            return Err(Graph6Error::Truncated {
                expected: 8,
                got: bytes.len(),
            });
        }
        let mut n = 0u64;
        for &b in &bytes[2..8] {
            n = n << 6 | (b - 63) as u64;
        }
        (n, 8)
    };
    if n > 100_000 {
        return Err(Graph6Error::TooLarge(n));
    }
    let n = n as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let payload = (nbits + 5) / 6;
    if bytes.len() - pos < payload {
        return Err(Graph6Error::Truncated {
            expected: payload,
            got: bytes.len() - pos,
        });
    }
    if bytes.len() - pos > payload {
        return Err(Graph6Error::TrailingData);
    }
    let mut g = SimpleGraph::empty(n);
    let mut bit_index = 0usize;
    'cols: for v in 1..n {
        for u in 0..v {
            let byte = bytes[pos + bit_index / 6] - 63;
            let bit = byte >> (5 - bit_index % 6) & 1;
            if bit == 1 {
                g.insert_edge(u, v)?;
            }
            bit_index += 1;
            if bit_index == nbits {
                break 'cols;
            }
        }
    }
    Ok(g)
}
