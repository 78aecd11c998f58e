//! graph6 text format: printable 6-bit encoding of the adjacency upper
//! triangle, one graph per line. This is the toolkit's universal exchange
//! format, so errors carry byte offsets.

use crate::graph::{Graph, MAX_VERTICES};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("malformed length header at byte {0}")]
    BadHeader(usize),
    #[error("graph order {order} exceeds supported maximum {max}")]
    TooLarge { order: usize, max: usize },
    #[error("character out of graph6 range at byte {0}")]
    OutOfRange(usize),
    #[error("input truncated: expected {expected} body bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing bytes starting at byte {0}")]
    TrailingBytes(usize),
}

fn decode_byte(b: u8, offset: usize) -> Result<u64, Graph6Error> {
    if !(63..=126).contains(&b) {
        return Err(Graph6Error::OutOfRange(offset));
    }
    Ok(u64::from(b - 63))
}

/// Parse one graph6 line (no trailing newline).
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    // Order header: single byte for n <= 62, '~' + 3 bytes for larger.
    let (n, body_start) = if bytes[0] == b'~' {
        if bytes.len() < 4 {
            return Err(Graph6Error::BadHeader(0));
        }
        if bytes[1] == b'~' {
            // 8-byte form encodes n > 258047, far beyond our cap.
            return Err(Graph6Error::TooLarge { order: usize::MAX, max: MAX_VERTICES });
        }
        let mut n = 0u64;
        for (i, &b) in bytes[1..4].iter().enumerate() {
            n = n << 6 | decode_byte(b, 1 + i)?;
        }
        (n as usize, 4)
    } else {
        (decode_byte(bytes[0], 0)? as usize, 1)
    };
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge { order: n, max: MAX_VERTICES });
    }
    let nbits = n * n.max(1).wrapping_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() < nbytes {
        return Err(Graph6Error::Truncated { expected: nbytes, found: body.len() });
    }
    if body.len() > nbytes {
        return Err(Graph6Error::TrailingBytes(body_start + nbytes));
    }
    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = decode_byte(body[bit / 6], body_start + bit / 6)?;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            bit += 1;
            if bit > nbits {
                break 'outer;
            }
        }
    }
    // Padding bits must be zero per the format, but nauty tools are lax
    // here; we accept nonzero padding silently.
    Ok(g)
}

/// Write a graph as a graph6 line (no trailing newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(b'~');
        out.push(63 + (n >> 12 & 63) as u8);
        out.push(63 + (n >> 6 & 63) as u8);
        out.push(63 + (n & 63) as u8);
    }
    let bits = g.upper_triangle_bits();
    for chunk in bits.chunks(6) {
        let mut b = 0u8;
        for (i, &set) in chunk.iter().enumerate() {
            if set {
                b |= 1 << (5 - i);
            }
        }
        out.push(63 + b);
    }
    String::from_utf8(out).unwrap()
}

/// Parse a multi-line graph6 file body, ignoring blank lines and an
/// optional `>>graph6<<` header.
pub fn parse_graph6_file(text: &str) -> Result<Vec<Graph>, (usize, Graph6Error)> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim_end_matches('\r');
        let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
        if line.is_empty() {
            continue;
        }
        out.push(parse_graph6(line).map_err(|e| (lineno + 1, e))?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decodes_one_vertex_empty_graph() {
        let g = parse_graph6("@").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn decodes_single_edge() {
        let g = parse_graph6("A_").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges(), vec![(0, 1)]);
    }

    #[test]
    fn decodes_five_vertex_star() {
        // Decoded by hand: 'D' = 5 vertices; body '?{' = bits 000000 111100,
        // upper-triangle order (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),(0,4),
        // (1,4),(2,4),(3,4) -> edges are exactly the last four pairs.
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
    }

    #[test]
    fn writes_inverse_of_parse_examples() {
        assert_eq!(write_graph6(&Graph::empty(1)), "@");
        assert_eq!(write_graph6(&Graph::from_edges(2, &[(0, 1)])), "A_");
    }

    #[test]
    fn rejects_malformed_input() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6("D?"), Err(Graph6Error::Truncated { expected: 2, found: 1 }));
        assert_eq!(parse_graph6("D?{{"), Err(Graph6Error::TrailingBytes(3)));
        assert!(matches!(parse_graph6("D?\u{7f}"), Err(Graph6Error::OutOfRange(2))));
        assert!(matches!(parse_graph6("~A"), Err(Graph6Error::BadHeader(0))));
    }
}
