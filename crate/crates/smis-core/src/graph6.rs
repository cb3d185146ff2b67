//! graph6 interchange format, bit-exact.
//!
//! Layout: optional `>>graph6<<` prefix, the size word N(n), then the upper
//! triangle of the adjacency matrix in column-major order (pairs (0,1),
//! (0,2), (1,2), (0,3), ...), packed MSB-first into 6-bit groups, each
//! offset by 63 into the printable range 63..=126.

use crate::graph::{Graph, GraphError, MAX_VERTICES};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("malformed graph6 header")]
    MalformedHeader,
    #[error("graph6 body truncated: expected {expected} bytes, found {found}")]
    TruncatedBody { expected: usize, found: usize },
    #[error("graph6 body has {found} bytes, expected {expected}")]
    TrailingData { expected: usize, found: usize },
    #[error("non-printable byte {byte:#04x} at offset {pos}")]
    NonPrintableByte { pos: usize, byte: u8 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

const HEADER: &[u8] = b">>graph6<<";

fn pair_bits(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Decodes the size word, returning `(n, bytes_consumed)`.
fn parse_size(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let first = *bytes.first().ok_or(Graph6Error::MalformedHeader)?;
    if !(63..=126).contains(&first) {
        return Err(Graph6Error::NonPrintableByte {
            pos: 0,
            byte: first,
        });
    }
    if first != 126 {
        return Ok(((first - 63) as usize, 1));
    }
    // 126 means 3 size bytes follow; 126 126 means 6 size bytes follow.
    let (count, skip) = if bytes.get(1) == Some(&126) {
        (6, 2)
    } else {
        (3, 1)
    };
    if bytes.len() < skip + count {
        return Err(Graph6Error::MalformedHeader);
    }
    let mut n: u64 = 0;
    for (i, &b) in bytes[skip..skip + count].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::NonPrintableByte {
                pos: skip + i,
                byte: b,
            });
        }
        n = (n << 6) | u64::from(b - 63);
    }
    if n as usize > MAX_VERTICES {
        return Err(Graph6Error::Graph(GraphError::TooManyVertices {
            n: n as usize,
        }));
    }
    Ok((n as usize, skip + count))
}

/// Parses a graph6 byte string. The whole input must be one encoded graph;
/// trim newlines beforehand.
pub fn parse_graph6(bytes: &[u8]) -> Result<Graph, Graph6Error> {
    let bytes = bytes.strip_prefix(HEADER).unwrap_or(bytes);
    let (n, offset) = parse_size(bytes)?;
    let body = &bytes[offset..];
    let nbits = pair_bits(n);
    let expected = nbits.div_ceil(6);
    match body.len() {
        l if l < expected => return Err(Graph6Error::TruncatedBody { expected, found: l }),
        l if l > expected => return Err(Graph6Error::TrailingData { expected, found: l }),
        _ => {}
    }
    let mut g = Graph::empty(n)?;
    let mut bit = 0usize;
    'outer: for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::NonPrintableByte {
                pos: offset + i,
                byte: b,
            });
        }
        let group = b - 63;
        for s in (0..6).rev() {
            if bit == nbits {
                break 'outer;
            }
            if (group >> s) & 1 != 0 {
                let (u, v) = pair_at(bit);
                g.set_edge(u, v);
            }
            bit += 1;
        }
    }
    Ok(g)
}

/// Column-major upper-triangle position of bit index `i`:
/// bit `C(v,2) + u` is the pair `(u, v)` with `u < v`.
fn pair_at(i: usize) -> (usize, usize) {
    // v is the largest integer with C(v,2) <= i.
    let mut v = ((2.0 * i as f64).sqrt() as usize).max(1);
    while pair_bits(v + 1) <= i {
        v += 1;
    }
    while pair_bits(v) > i {
        v -= 1;
    }
    (i - pair_bits(v), v)
}

/// Encodes a graph as graph6 (no trailing newline, no optional prefix).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    } else {
        // Unreachable under MAX_VERTICES, but keep the format total.
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    }
    let mut group = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            group = (group << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (group << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn emit_k3_is_bw() {
        assert_eq!(emit_graph6(&Graph::complete(3).unwrap()), "Bw");
    }

    #[test]
    fn roundtrip_p4() {
        let p4 = generators::path(4).unwrap();
        assert_eq!(parse_graph6(emit_graph6(&p4).as_bytes()).unwrap(), p4);
    }

    #[test]
    fn empty_input_is_malformed() {
        assert_eq!(parse_graph6(b""), Err(Graph6Error::MalformedHeader));
    }

    #[test]
    fn truncated_body() {
        // K5 needs 2 body bytes after 'D'.
        assert_eq!(
            parse_graph6(b"D~"),
            Err(Graph6Error::TruncatedBody {
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn trailing_data_rejected() {
        assert_eq!(
            parse_graph6(b"Bwz"),
            Err(Graph6Error::TrailingData {
                expected: 1,
                found: 2
            })
        );
    }

    #[test]
    fn non_printable_byte() {
        assert_eq!(
            parse_graph6(b"A1"),
            Err(Graph6Error::NonPrintableByte { pos: 1, byte: b'1' })
        );
    }

    #[test]
    fn optional_prefix_accepted() {
        assert_eq!(
            parse_graph6(b">>graph6<<Bw").unwrap(),
            Graph::complete(3).unwrap()
        );
    }

    #[test]
    fn zero_and_one_vertex() {
        assert_eq!(emit_graph6(&Graph::empty(0).unwrap()), "?");
        assert_eq!(emit_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(parse_graph6(b"?").unwrap().vertex_count(), 0);
        assert_eq!(parse_graph6(b"@").unwrap().vertex_count(), 1);
    }

    #[test]
    fn multibyte_size_prefix() {
        let p63 = generators::path(63).unwrap();
        let s = emit_graph6(&p63);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(s.as_bytes()).unwrap(), p63);
    }

    // Reference bytes produced by an independent graph6 implementation.
    #[test]
    fn reference_corpus_bytes() {
        let cases: &[(&str, Graph)] = &[
            ("@", Graph::complete(1).unwrap()),
            ("A_", Graph::complete(2).unwrap()),
            ("Bw", Graph::complete(3).unwrap()),
            ("C~", Graph::complete(4).unwrap()),
            ("D~{", Graph::complete(5).unwrap()),
            ("I~~~~~~~w", Graph::complete(10).unwrap()),
            ("Ch", generators::path(4).unwrap()),
            ("IhCGGC@?G", generators::path(10).unwrap()),
            ("Dhc", generators::cycle(5).unwrap()),
            ("EhEG", generators::cycle(6).unwrap()),
            ("HhCGGE@", generators::cycle(9).unwrap()),
            ("Esa?", generators::star(6).unwrap()),
            ("EFz_", generators::complete_bipartite(3, 3).unwrap()),
            ("D]o", generators::complete_bipartite(2, 3).unwrap()),
            ("IheA@GUAo", generators::petersen().unwrap()),
            ("Gr`HOk", generators::hypercube(3).unwrap()),
            ("A?", Graph::empty(2).unwrap()),
            ("C?", Graph::empty(4).unwrap()),
            ("D??", Graph::empty(5).unwrap()),
            ("HkSg_SD", generators::grid(3, 3).unwrap()),
            ("E|fG", generators::wheel(6).unwrap()),
            ("?", Graph::empty(0).unwrap()),
        ];
        for (expected, g) in cases {
            assert_eq!(&emit_graph6(g), expected, "mismatch for {g:?}");
            assert_eq!(&parse_graph6(expected.as_bytes()).unwrap(), g);
        }
    }
}
