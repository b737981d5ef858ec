//! graph6 encoding: one simple undirected graph per ASCII line.
//!
//! Standard 63-offset byte encoding with upper-triangle bit order, including
//! the extended size headers for n > 62.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Graph6Error;
use crate::graph::Graph;

const OFFSET: u8 = 63;
const MAX_BYTE: u8 = 126;

/// Parse one graph6-encoded graph. The optional `>>graph6<<` prefix is
/// accepted and skipped.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let mut bytes = text.trim_end_matches(['\r', '\n']).as_bytes();
    let mut base = 0;
    if let Some(rest) = bytes.strip_prefix(b">>graph6<<") {
        bytes = rest;
        base = 10;
    }
    let (n, header_len) = parse_order(bytes, base)?;
    let body = &bytes[header_len..];
    let nbits = n * (n.saturating_sub(1)) / 2;
    let needed = nbits.div_ceil(6);
    if body.len() < needed {
        return Err(Graph6Error::Truncated {
            offset: base + bytes.len(),
            needed: needed - body.len(),
        });
    }
    if body.len() > needed {
        return Err(Graph6Error::TrailingGarbage {
            offset: base + header_len + needed,
        });
    }
    // bits run x(0,1), x(0,2), x(1,2), x(0,3), ... column by column
    let mut edges = Vec::new();
    let (mut row, mut col) = (0usize, 1usize);
    let mut bit = 0usize;
    for (i, &b) in body.iter().enumerate() {
        if !(OFFSET..=MAX_BYTE).contains(&b) {
            return Err(Graph6Error::InvalidByte {
                offset: base + header_len + i,
                byte: b,
            });
        }
        let group = b - OFFSET;
        for k in (0..6).rev() {
            if bit >= nbits {
                if group >> k & 1 == 1 {
                    return Err(Graph6Error::NonzeroPadding {
                        offset: base + header_len + i,
                    });
                }
                continue;
            }
            if group >> k & 1 == 1 {
                edges.push((row, col));
            }
            bit += 1;
            row += 1;
            if row == col {
                row = 0;
                col += 1;
            }
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("decoded edges are simple and in range"))
}

fn parse_order(bytes: &[u8], base: usize) -> Result<(usize, usize), Graph6Error> {
    let first = *bytes.first().ok_or(Graph6Error::BadHeader { offset: base })?;
    if first == MAX_BYTE {
        // extended: 126 + 3 bytes, or 126 126 + 6 bytes
        let (count, skip) = if bytes.get(1) == Some(&MAX_BYTE) {
            (6, 2)
        } else {
            (3, 1)
        };
        if bytes.len() < skip + count {
            return Err(Graph6Error::BadHeader { offset: base + bytes.len() });
        }
        let mut n = 0usize;
        for (i, &b) in bytes[skip..skip + count].iter().enumerate() {
            if !(OFFSET..=MAX_BYTE).contains(&b) {
                return Err(Graph6Error::InvalidByte {
                    offset: base + skip + i,
                    byte: b,
                });
            }
            n = n << 6 | (b - OFFSET) as usize;
        }
        Ok((n, skip + count))
    } else if (OFFSET..MAX_BYTE).contains(&first) {
        Ok(((first - OFFSET) as usize, 1))
    } else {
        Err(Graph6Error::BadHeader { offset: base })
    }
}

/// Encode a graph in graph6. Inverse of [`parse_graph6`].
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else if n <= 258047 {
        out.push(MAX_BYTE);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 0x3f) as u8 + OFFSET);
        }
    } else {
        out.push(MAX_BYTE);
        out.push(MAX_BYTE);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((n >> shift & 0x3f) as u8 + OFFSET);
        }
    }
    let mut group = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            group <<= 1;
            if g.has_edge(u, v) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(group + OFFSET);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{all_connected_graphs, generate, Family};

    #[test]
    fn hand_decoded_examples() {
        // "A_": n = 'A'-63 = 2; '_'-63 = 32 = 100000b, so x(0,1) = 1: K_2.
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!((k2.n(), k2.m()), (2, 1));
        assert!(k2.has_edge(0, 1));
        // "?": the empty graph on 0 vertices.
        let empty = parse_graph6("?").unwrap();
        assert_eq!((empty.n(), empty.m()), (0, 0));
        // "Bw": n = 3; 'w'-63 = 56 = 111000b: all three pairs, K_3.
        let k3 = parse_graph6("Bw").unwrap();
        assert_eq!(k3, generate(&Family::Complete(3)).unwrap());
    }

    #[test]
    fn hand_encoded_examples() {
        assert_eq!(write_graph6(&generate(&Family::Complete(2)).unwrap()), "A_");
        assert_eq!(write_graph6(&Graph::edgeless(0)), "?");
        assert_eq!(write_graph6(&generate(&Family::Complete(3)).unwrap()), "Bw");
        // C_4 bit string 1 01 101 -> 101101b = 45 -> 'l'
        assert_eq!(write_graph6(&generate(&Family::Cycle(4)).unwrap()), "Cl");
    }

    #[test]
    fn error_paths() {
        assert!(matches!(parse_graph6(""), Err(Graph6Error::BadHeader { offset: 0 })));
        assert!(matches!(
            parse_graph6("C"),
            Err(Graph6Error::Truncated { .. })
        ));
        assert!(matches!(
            parse_graph6("A_X"),
            Err(Graph6Error::TrailingGarbage { offset: 2 })
        ));
        assert!(matches!(
            parse_graph6("B\x1f"),
            Err(Graph6Error::InvalidByte { offset: 1, byte: 0x1f })
        ));
        // K_2 with a stray padding bit set: '_'|1 = '`' would flip x(0,1);
        // craft nonzero padding instead: n=2 has 1 data bit, 5 padding bits.
        assert!(matches!(
            parse_graph6("Aる".trim()), // multi-byte char lands outside 63..=126
            Err(Graph6Error::InvalidByte { .. }) | Err(Graph6Error::TrailingGarbage { .. })
        ));
        assert!(matches!(
            parse_graph6("Aa"), // 'a'-63 = 34 = 100010b: padding bit set
            Err(Graph6Error::NonzeroPadding { offset: 1 })
        ));
    }

    #[test]
    fn round_trip_families() {
        for fam in [
            Family::Path(1),
            Family::Path(7),
            Family::Cycle(5),
            Family::Complete(6),
            Family::Star(5),
            Family::Spider(4),
            Family::Fig1bChain(3),
        ] {
            let g = generate(&fam).unwrap();
            let enc = write_graph6(&g);
            assert_eq!(parse_graph6(&enc).unwrap(), g, "{fam:?} via {enc}");
        }
    }

    #[test]
    fn round_trip_large_order() {
        // extended size header path
        let g = generate(&Family::Path(100)).unwrap();
        let enc = write_graph6(&g);
        assert!(enc.starts_with('~'));
        assert_eq!(parse_graph6(&enc).unwrap(), g);
    }

    #[test]
    fn round_trip_census_n4() {
        for g in all_connected_graphs(4).unwrap() {
            assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
        }
    }

    #[test]
    fn header_prefix_accepted() {
        assert_eq!(parse_graph6(">>graph6<<Bw").unwrap().m(), 3);
    }

    // Independent bit-level decoder used as an oracle against write_graph6.
    fn oracle_decode(s: &str) -> (usize, Vec<(usize, usize)>) {
        let bytes = s.as_bytes();
        let n = (bytes[0] - 63) as usize;
        let bits: Vec<bool> = bytes[1..]
            .iter()
            .flat_map(|&b| (0..6).rev().map(move |k| (b - 63) >> k & 1 == 1))
            .collect();
        let mut edges = Vec::new();
        let mut idx = 0;
        for v in 1..n {
            for u in 0..v {
                if bits[idx] {
                    edges.push((u, v));
                }
                idx += 1;
            }
        }
        (n, edges)
    }

    #[test]
    fn writer_matches_independent_decoder() {
        for fam in [Family::Cycle(6), Family::Spider(3), Family::Complete(5)] {
            let g = generate(&fam).unwrap();
            let (n, edges) = oracle_decode(&write_graph6(&g));
            assert_eq!(n, g.n());
            let mut expect: Vec<_> = g.edges().collect();
            expect.sort();
            let mut got = edges;
            got.sort();
            assert_eq!(got, expect);
        }
    }
}
