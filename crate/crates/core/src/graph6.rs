//! graph6 encoding and decoding, bit-exact per the published format.
//!
//! A graph on `n` vertices is written as `N(n)` followed by the upper
//! triangle of the adjacency matrix in column order — x(0,1), x(0,2),
//! x(1,2), x(0,3), ... — packed big-endian into 6-bit groups, each offset
//! by 63. `N(n)` is a single byte `n + 63` for `n <= 62` and `126` followed
//! by three 6-bit groups for `63 <= n <= 258047`.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("graph order {0} not supported by this encoder")]
    OrderTooLarge(usize),
    #[error("invalid graph6 byte {0:#x}")]
    InvalidByte(u8),
    #[error("truncated graph6 line")]
    Truncated,
    #[error("trailing padding bits are not zero")]
    BadPadding,
}

pub fn encode(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    } else {
        return Err(Graph6Error::OrderTooLarge(n));
    }
    let nbits = n.saturating_sub(1) * n / 2;
    let mut bits = vec![false; nbits];
    let mut idx = 0usize;
    for col in 1..n {
        for row in 0..col {
            bits[idx] = g.has_edge(row, col);
            idx += 1;
        }
    }
    for chunk in bits.chunks(6) {
        let mut val = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            if b {
                val |= 1 << (5 - i);
            }
        }
        out.push(val + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ascii"))
}

pub fn decode(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.trim_end();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Graph6Error::OrderTooLarge(usize::MAX));
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::Truncated);
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            if !(63..=126).contains(&b) {
                return Err(Graph6Error::InvalidByte(b));
            }
            n = (n << 6) | (b - 63) as usize;
        }
        (n, 4usize)
    } else {
        let b = bytes[0];
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte(b));
        }
        ((b - 63) as usize, 1usize)
    };
    let nbits = n.saturating_sub(1) * n / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() < pos + nbytes {
        return Err(Graph6Error::Truncated);
    }
    let mut bits = Vec::with_capacity(nbytes * 6);
    for _ in 0..nbytes {
        let b = bytes[pos];
        pos += 1;
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte(b));
        }
        let val = b - 63;
        for i in 0..6 {
            bits.push(val & (1 << (5 - i)) != 0);
        }
    }
    if bits[nbits..].iter().any(|&b| b) {
        return Err(Graph6Error::BadPadding);
    }
    let mut edges = Vec::new();
    let mut idx = 0usize;
    for col in 1..n {
        for row in 0..col {
            if bits[idx] {
                edges.push((row, col));
            }
            idx += 1;
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("decoded edges are valid"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_small_strings() {
        // Single edge on two vertices.
        let p2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(encode(&p2).unwrap(), "A_");
        // Complete graph on four vertices.
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(encode(&k4).unwrap(), "C~");
        // Five vertices, edges 0-2, 0-4, 1-3, 3-4.
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g).unwrap(), "DQc");
        assert_eq!(decode("DQc").unwrap(), g);
    }

    #[test]
    fn header_prefix_accepted() {
        assert_eq!(decode(">>graph6<<A_").unwrap().m(), 1);
    }

    #[test]
    fn long_form_order() {
        let n = 70;
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        let s = encode(&g).unwrap();
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(decode(&s).unwrap(), g);
    }

    proptest! {
        #[test]
        fn roundtrip_random(n in 0usize..30, seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut edges = Vec::new();
            for u in 0..n {
                for w in (u + 1)..n {
                    if rng.gen_bool(0.3) {
                        edges.push((u, w));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let s = encode(&g).unwrap();
            prop_assert_eq!(decode(&s).unwrap(), g);
        }
    }
}
