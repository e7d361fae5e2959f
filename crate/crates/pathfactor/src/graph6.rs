//! The graph6 ASCII format, short form only (order ≤ 62): one header byte
//! `63 + n` followed by the upper-triangle adjacency bits packed six per
//! byte in column order, each byte offset by 63. Padding bits must be zero
//! and parsing insists on it, so parse∘emit and emit∘parse are identities.

use thiserror::Error;

use crate::graph::Graph;

/// Largest order the short form encodes.
pub const MAX_GRAPH6_ORDER: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("multi-byte order headers are not supported (order > {MAX_GRAPH6_ORDER})")]
    LongForm,
    #[error("byte {byte:#x} at position {position} is outside the graph6 range")]
    ByteOutOfRange { byte: u8, position: usize },
    #[error("expected {expected} adjacency bytes, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("padding bits after the adjacency matrix must be zero")]
    DirtyPadding,
    #[error("order {0} exceeds the short-form maximum of {MAX_GRAPH6_ORDER}")]
    TooLarge(usize),
}

pub fn emit_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = vec![63 + n as u8];
    let mut bit_pos = 0usize;
    let mut current = 0u8;
    for col in 1..n {
        for row in 0..col {
            current <<= 1;
            if g.has_edge(row, col) {
                current |= 1;
            }
            bit_pos += 1;
            if bit_pos == 6 {
                out.push(63 + current);
                current = 0;
                bit_pos = 0;
            }
        }
    }
    if bit_pos > 0 {
        current <<= 6 - bit_pos;
        out.push(63 + current);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let Some(&header) = bytes.first() else {
        return Err(Graph6Error::Empty);
    };
    if header == 126 {
        return Err(Graph6Error::LongForm);
    }
    if !(63..=125).contains(&header) {
        return Err(Graph6Error::ByteOutOfRange {
            byte: header,
            position: 0,
        });
    }
    let n = (header - 63) as usize;
    let bit_count = n * n.saturating_sub(1) / 2;
    let byte_count = bit_count.div_ceil(6);
    let body = &bytes[1..];
    if body.len() != byte_count {
        return Err(Graph6Error::WrongLength {
            expected: byte_count,
            found: body.len(),
        });
    }
    for (offset, &byte) in body.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::ByteOutOfRange {
                byte,
                position: 1 + offset,
            });
        }
    }
    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    for col in 1..n {
        for row in 0..col {
            let value = body[bit_index / 6] - 63;
            if value & (1 << (5 - bit_index % 6)) != 0 {
                edges.push((row, col));
            }
            bit_index += 1;
        }
    }
    if bit_count % 6 != 0 {
        let last = body[byte_count - 1] - 63;
        let pad_bits = 6 - bit_count % 6;
        if last & ((1 << pad_bits) - 1) != 0 {
            return Err(Graph6Error::DirtyPadding);
        }
    }
    Ok(Graph::new(n, &edges).expect("triangle bits give a simple graph"))
}
