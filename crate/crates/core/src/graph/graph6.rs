use super::Graph;
use crate::error::{invalid, Result};

const HEADER: &str = ">>graph6<<";

/// Encodes `g` in graph6: the size prefix followed by the upper triangle of
/// the adjacency matrix, column by column, packed six bits per byte (+63).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = encode_size(n);
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn encode_size(n: usize) -> Vec<u8> {
    if n < 63 {
        vec![n as u8 + 63]
    } else if n < 258_048 {
        vec![
            126,
            (n >> 12) as u8 + 63,
            ((n >> 6) & 63) as u8 + 63,
            (n & 63) as u8 + 63,
        ]
    } else {
        let mut v = vec![126, 126];
        for shift in (0..6).rev() {
            v.push(((n >> (6 * shift)) & 63) as u8 + 63);
        }
        v
    }
}

/// Decodes one graph6 line; an optional `>>graph6<<` header and trailing
/// whitespace are accepted.
pub fn from_graph6(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return invalid("empty graph6 string");
    }
    if let Some(&bad) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return invalid(format!("byte {bad} outside the graph6 range"));
    }
    let (n, body) = decode_size(bytes)?;
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if body.len() != needed {
        return invalid(format!(
            "graph6 body has {} bytes, expected {needed} for n = {n}",
            body.len()
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if k % 6 != 0 && (body[k / 6] - 63) & ((1 << (6 - k % 6)) - 1) != 0 {
        return invalid("nonzero graph6 padding bits");
    }
    Graph::from_edges(n, &edges)
}

fn decode_size(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let six = |b: &[u8]| {
        b.iter()
            .fold(0usize, |acc, &x| (acc << 6) | (x - 63) as usize)
    };
    if bytes[0] != 126 {
        return Ok(((bytes[0] - 63) as usize, &bytes[1..]));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return invalid("truncated graph6 size");
        }
        return Ok((six(&bytes[2..8]), &bytes[8..]));
    }
    if bytes.len() < 4 {
        return invalid("truncated graph6 size");
    }
    Ok((six(&bytes[1..4]), &bytes[4..]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_complete, build_path, build_t, CaterpillarSpec};
    use proptest::prelude::*;

    #[test]
    fn known_strings() {
        // petgraph's reference example: edges a-c, a-e, b-d, d-e
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(to_graph6(&build_complete(4).unwrap()), "C~");
        assert_eq!(to_graph6(&build_path(2).unwrap()), "A_");
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
    }

    #[test]
    fn decode_rejects_garbage() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("C").is_err());
        assert!(from_graph6("C~~").is_err());
        assert!(from_graph6("A`").is_err());
        assert!(from_graph6("A\x01").is_err());
    }

    #[test]
    fn header_is_optional() {
        let g = from_graph6(">>graph6<<DQc\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 2), (0, 4), (1, 3), (3, 4)]);
    }

    #[test]
    fn large_sizes_round_trip() {
        let g = build_path(70).unwrap();
        let s = to_graph6(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(from_graph6(&s).unwrap(), g);
        let t = build_t(&CaterpillarSpec::new(8, 3, 2).unwrap());
        assert_eq!(from_graph6(&to_graph6(&t)).unwrap(), t);
    }

    proptest! {
        #[test]
        fn round_trip(n in 1usize..20, bits in proptest::collection::vec(any::<bool>(), 190)) {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] { edges.push((i, j)); }
                    k += 1;
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
        }
    }
}
