//! The graph6 line format.
//!
//! A line is a size field followed by the upper triangle of the adjacency
//! matrix, read column by column (`(0,1), (0,2), (1,2), (0,3), ...`), packed
//! six bits per character with an offset of 63. Orders up to 62 use a single
//! size byte; 63 and 64 use the `~` + three byte form. The optional
//! `>>graph6<<` header is accepted on input and never written.

use thiserror::Error;

use crate::bitset::MAX_ORDER;
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("malformed size field")]
    BadLength,
    #[error("graph order {0} is not supported")]
    UnsupportedOrder(usize),
    #[error("character {ch:?} at offset {offset} is outside the graph6 range")]
    BadCharacter { ch: char, offset: usize },
    #[error("expected {expected} data characters, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("nonzero padding bits")]
    NonzeroPadding,
    #[error("trailing characters after the graph data")]
    TrailingGarbage,
}

fn sextet(b: u8, offset: usize) -> Result<u8, Graph6Error> {
    if (63..=126).contains(&b) {
        Ok(b - 63)
    } else {
        Err(Graph6Error::BadCharacter {
            ch: b as char,
            offset,
        })
    }
}

/// Decodes one graph6 line. A single trailing newline is tolerated.
pub fn decode_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let line = line
        .strip_suffix('\n')
        .map(|l| l.strip_suffix('\r').unwrap_or(l))
        .unwrap_or(line);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }

    let (n, mut pos) = if bytes[0] == b'~' {
        if bytes.get(1) == Some(&b'~') {
            // 36-bit form: far beyond anything we support.
            return Err(Graph6Error::UnsupportedOrder(usize::MAX));
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::BadLength);
        }
        let mut n = 0usize;
        for (i, &b) in bytes[1..4].iter().enumerate() {
            n = n << 6 | sextet(b, i + 1)? as usize;
        }
        if n < 63 {
            return Err(Graph6Error::BadLength);
        }
        (n, 4)
    } else {
        (sextet(bytes[0], 0)? as usize, 1)
    };
    if n > MAX_ORDER {
        return Err(Graph6Error::UnsupportedOrder(n));
    }

    let nbits = n * n.saturating_sub(1) / 2;
    let nchars = nbits.div_ceil(6);
    let data = &bytes[pos..];
    if data.len() < nchars {
        return Err(Graph6Error::Truncated {
            expected: nchars,
            found: data.len(),
        });
    }
    if data.len() > nchars {
        return Err(Graph6Error::TrailingGarbage);
    }

    let mut edges = Vec::new();
    let (mut u, mut v) = (0usize, 1usize);
    let mut k = 0usize;
    for &b in data {
        let x = sextet(b, pos)?;
        pos += 1;
        for shift in (0..6).rev() {
            let bit = x >> shift & 1 == 1;
            if k < nbits {
                if bit {
                    edges.push((u, v));
                }
                u += 1;
                if u == v {
                    u = 0;
                    v += 1;
                }
            } else if bit {
                return Err(Graph6Error::NonzeroPadding);
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, edges).expect("decoded edges are in range"))
}

/// Encodes `g` as a graph6 line without header or newline.
pub fn encode_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Graph6Error::UnsupportedOrder(n));
    }
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(63 + (n >> shift & 63) as u8);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 is ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn hand_encoded_examples() {
        assert_eq!(decode_graph6("@").unwrap(), Graph::empty(1).unwrap());
        assert_eq!(decode_graph6("C~").unwrap(), Graph::complete(4).unwrap());
        // Upper triangle bits of C5: 1010011001, padded to 101001 100100.
        assert_eq!(decode_graph6("Dhc").unwrap(), Graph::cycle(5).unwrap());

        assert_eq!(encode_graph6(&Graph::empty(1).unwrap()).unwrap(), "@");
        assert_eq!(encode_graph6(&Graph::complete(4).unwrap()).unwrap(), "C~");
        assert_eq!(encode_graph6(&Graph::cycle(5).unwrap()).unwrap(), "Dhc");
        assert_eq!(encode_graph6(&Graph::empty(0).unwrap()).unwrap(), "?");
    }

    #[test]
    fn header_and_newline_accepted() {
        assert_eq!(
            decode_graph6(">>graph6<<C~\n").unwrap(),
            Graph::complete(4).unwrap()
        );
        assert_eq!(
            decode_graph6("C~\r\n").unwrap(),
            Graph::complete(4).unwrap()
        );
    }

    #[test]
    fn malformed_lines() {
        assert_eq!(decode_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(
            decode_graph6("C"),
            Err(Graph6Error::Truncated {
                expected: 1,
                found: 0
            })
        );
        assert_eq!(decode_graph6("C~~"), Err(Graph6Error::TrailingGarbage));
        // Three data bits then three padding bits; 'A' = 63 + 0b000010.
        assert_eq!(decode_graph6("BA"), Err(Graph6Error::NonzeroPadding));
        assert!(matches!(
            decode_graph6("C "),
            Err(Graph6Error::BadCharacter { ch: ' ', offset: 1 })
        ));
        assert!(matches!(decode_graph6("~??"), Err(Graph6Error::BadLength)));
        assert!(matches!(
            decode_graph6("~?@@"),
            Err(Graph6Error::UnsupportedOrder(65))
        ));
    }

    #[test]
    fn long_size_field() {
        let g = Graph::cycle_power(64, 2).unwrap();
        let s = encode_graph6(&g).unwrap();
        assert!(s.starts_with("~?@?"));
        assert_eq!(decode_graph6(&s).unwrap(), g);

        let g = Graph::cycle(63).unwrap();
        let s = encode_graph6(&g).unwrap();
        assert!(s.starts_with("~??~"));
        assert_eq!(decode_graph6(&s).unwrap(), g);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..=20).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let pairs = (1..n).flat_map(|v| (0..v).map(move |u| (u, v)));
                let edges = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e);
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn codec_round_trip(g in arb_graph()) {
            let s = encode_graph6(&g).unwrap();
            prop_assert_eq!(&decode_graph6(&s).unwrap(), &g);
            prop_assert_eq!(encode_graph6(&decode_graph6(&s).unwrap()).unwrap(), s);
        }
    }
}
