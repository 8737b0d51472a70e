//! graph6 encoding: a printable-ASCII format for undirected simple graphs.
//!
//! Layout: a size header (one byte `n + 63` for `n <= 62`, or `~` followed
//! by three bytes holding `n` in big-endian 6-bit groups for larger `n`),
//! then the upper triangle of the adjacency matrix in column-major order
//! (pairs (0,1), (0,2), (1,2), (0,3), ...) packed 6 bits per byte, each
//! byte offset by 63 and the final byte zero-padded.

use super::Graph;
use thiserror::Error;

/// Guard against absurd allocations from a hostile size header.
const MAX_N: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 input")]
    Empty,
    #[error("malformed graph6 header at byte {offset}")]
    BadHeader { offset: usize },
    #[error("graph6 byte {byte:#04x} at offset {offset} outside the printable range 63..=126")]
    OutOfRange { offset: usize, byte: u8 },
    #[error("graph6 data truncated: expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing garbage after graph6 data at byte {offset}")]
    TrailingData { offset: usize },
    #[error("graph6 vertex count {n} exceeds the supported maximum {MAX_N}")]
    TooLarge { n: usize },
    #[error("nonzero padding bit in final graph6 byte at offset {offset}")]
    NonzeroPadding { offset: usize },
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u64, Graph6Error> {
    let byte = bytes[offset];
    if !(63..=126).contains(&byte) {
        return Err(Graph6Error::OutOfRange { offset, byte });
    }
    Ok((byte - 63) as u64)
}

/// Parses one graph6-encoded graph (a single line, no trailing newline).
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let (n, data_start) = if bytes[0] == 126 {
        if bytes.len() < 2 {
            return Err(Graph6Error::BadHeader { offset: 1 });
        }
        if bytes[1] == 126 {
            // 8-byte form encodes n up to 2^36; far beyond MAX_N.
            return Err(Graph6Error::TooLarge { n: MAX_N + 1 });
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::BadHeader { offset: bytes.len() });
        }
        let n = (sextet(bytes, 1)? << 12) | (sextet(bytes, 2)? << 6) | sextet(bytes, 3)?;
        (n as usize, 4)
    } else {
        (sextet(bytes, 0)? as usize, 1)
    };
    if n > MAX_N {
        return Err(Graph6Error::TooLarge { n });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let found = bytes.len() - data_start;
    if found < expected {
        return Err(Graph6Error::Truncated { expected, found });
    }
    if found > expected {
        return Err(Graph6Error::TrailingData {
            offset: data_start + expected,
        });
    }
    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    'cols: for j in 1..n {
        for i in 0..j {
            let offset = data_start + bit / 6;
            let value = sextet(bytes, offset)?;
            if value >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(i, j).expect("decoded pair in range");
            }
            bit += 1;
            if bit >= bits {
                break 'cols;
            }
        }
    }
    if bits % 6 != 0 && expected > 0 {
        let last = sextet(bytes, data_start + expected - 1)?;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding {
                offset: data_start + expected - 1,
            });
        }
    }
    Ok(g)
}

/// Canonical graph6 encoding of a graph.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_N, "graph too large for graph6 encoding");
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            acc <<= 1;
            if g.has_edge(i, j) {
                acc |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}
