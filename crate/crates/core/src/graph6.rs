//! Bit-exact reader and writer for the graph6 exchange format.
//!
//! graph6 packs the upper triangle of the adjacency matrix in column order
//! (x(0,1), x(0,2), x(1,2), x(0,3), …) into big-endian 6-bit groups, each
//! printed as the ASCII byte `value + 63`. Orders up to 62 use a single
//! size byte; orders 63..=258047 use `~` followed by three bytes carrying
//! an 18-bit big-endian count. The optional `>>graph6<<` file header is
//! accepted and ignored.

use crate::graph::Graph;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Errors from graph6 decoding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    /// A byte outside the printable graph6 range (or unexpected trailing
    /// data) at the given position.
    BadChar { pos: usize },
    /// The line ended before all adjacency bits were read.
    TruncatedBits,
    /// Orders of 2^18 or more are not supported.
    TooLarge,
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::BadChar { pos } => write!(f, "invalid graph6 byte at position {pos}"),
            Self::TruncatedBits => write!(f, "graph6 line truncated"),
            Self::TooLarge => write!(f, "graph6 order too large"),
        }
    }
}

impl core::error::Error for Graph6Error {}

const HEADER: &str = ">>graph6<<";

/// Decodes one graph6 line into a graph.
pub fn parse(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.trim_end_matches(['\r', '\n']).as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::TruncatedBits);
    }
    let (n, mut pos) = decode_order(bytes)?;
    let nbits = n * (n - 1) / 2;

    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut bit_index = 0usize;
    let mut pairs = column_pairs(n);
    while bit_index < nbits {
        let Some(&byte) = bytes.get(pos) else {
            return Err(Graph6Error::TruncatedBits);
        };
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::BadChar { pos });
        }
        let group = byte - 63;
        for shift in (0..6).rev() {
            if bit_index == nbits {
                break;
            }
            if group >> shift & 1 == 1 {
                let (u, v) = pairs.next().expect("pair stream matches bit count");
                adj[u].push(v);
                adj[v].push(u);
            } else {
                pairs.next();
            }
            bit_index += 1;
        }
        pos += 1;
    }
    if pos != bytes.len() {
        return Err(Graph6Error::BadChar { pos });
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    Ok(Graph::from_sorted_adj(n, adj))
}

/// Encodes a graph as a graph6 line (no trailing newline).
pub fn write(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    encode_order(n, &mut out);
    let mut group = 0u8;
    let mut filled = 0u8;
    for (u, v) in column_pairs(n) {
        group <<= 1;
        if g.has_edge(u, v) {
            group |= 1;
        }
        filled += 1;
        if filled == 6 {
            out.push(group + 63);
            group = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn decode_order(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let b0 = bytes[0];
    if b0 == 126 {
        if bytes.get(1) == Some(&126) {
            return Err(Graph6Error::TooLarge);
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::TruncatedBits);
        }
        let mut n = 0usize;
        for (i, &b) in bytes[1..4].iter().enumerate() {
            if !(63..=126).contains(&b) {
                return Err(Graph6Error::BadChar { pos: 1 + i });
            }
            n = n << 6 | (b - 63) as usize;
        }
        if n == 0 {
            return Err(Graph6Error::BadChar { pos: 1 });
        }
        Ok((n, 4))
    } else if (63..=125).contains(&b0) {
        let n = (b0 - 63) as usize;
        if n == 0 {
            // graph6 encodes n = 0, but this crate's graphs have n ≥ 1.
            return Err(Graph6Error::BadChar { pos: 0 });
        }
        Ok((n, 1))
    } else {
        Err(Graph6Error::BadChar { pos: 0 })
    }
}

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        assert!(n < 1 << 18, "graph6 order too large to encode");
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
}

/// Upper-triangle pairs in graph6 column order.
fn column_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(move |v| (0..v).map(move |u| (u, v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn k4_encodes_to_c_tilde() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(write(&k4), "C~");
        assert_eq!(parse("C~").unwrap(), k4);
    }

    #[test]
    fn five_vertex_round_trip() {
        let g = parse("D?{").unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(write(&g), "D?{");
    }

    #[test]
    fn empty_line_is_truncated() {
        assert_eq!(parse(""), Err(Graph6Error::TruncatedBits));
    }

    #[test]
    fn truncated_body_detected() {
        // K4 needs one body byte; omit it.
        assert_eq!(parse("C"), Err(Graph6Error::TruncatedBits));
    }

    #[test]
    fn bad_byte_detected() {
        assert_eq!(parse("C\u{1}"), Err(Graph6Error::BadChar { pos: 1 }));
    }

    #[test]
    fn trailing_junk_detected() {
        assert_eq!(parse("C~~"), Err(Graph6Error::BadChar { pos: 2 }));
    }

    #[test]
    fn header_is_stripped() {
        assert_eq!(parse(">>graph6<<C~").unwrap().size(), 6);
    }

    #[test]
    fn single_vertex() {
        let g = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(write(&g), "@");
        assert_eq!(parse("@").unwrap().order(), 1);
    }

    #[test]
    fn long_form_order() {
        let g = Graph::from_edges(70, &[(0, 69), (1, 2)]).unwrap();
        let line = write(&g);
        assert!(line.starts_with('~'));
        let back = parse(&line).unwrap();
        assert_eq!(back.order(), 70);
        assert_eq!(back.size(), 2);
        assert!(back.has_edge(0, 69) && back.has_edge(1, 2));
    }

    #[test]
    fn huge_order_rejected() {
        assert_eq!(parse("~~??????"), Err(Graph6Error::TooLarge));
    }
}
