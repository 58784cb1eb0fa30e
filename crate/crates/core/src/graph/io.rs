use crate::error::{Error, Result};

use super::Graph;

/// Parses either a graph6 string or an edge list, whichever `text` looks like.
///
/// A single whitespace-free token made of graph6 characters (`?`..=`~`) is read
/// as graph6; anything else is an edge list.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let t = text.trim();
    let body = t.strip_prefix(">>graph6<<").unwrap_or(t);
    let looks_g6 = !body.is_empty() && body.bytes().all(|b| (63..=126).contains(&b));
    if looks_g6 {
        decode_graph6(body)
    } else {
        parse_edge_list(text)
    }
}

/// Reads an edge list: one `u v` pair per line, 1-based, `#` comments and
/// blank lines ignored.
///
/// The vertex count is the largest id mentioned unless a line `n <count>`
/// declares it (needed for trailing isolated vertices).
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let err = |msg: &str| Error::Parse { line: line_no, msg: msg.to_string() };
        if toks[0] == "n" {
            if toks.len() != 2 || declared.is_some() {
                return Err(err("expected a single `n <count>` declaration"));
            }
            declared = Some(toks[1].parse().map_err(|_| err("bad vertex count"))?);
            continue;
        }
        if toks.len() != 2 {
            return Err(err("expected `u v`"));
        }
        let u: usize = toks[0].parse().map_err(|_| err("bad vertex id"))?;
        let v: usize = toks[1].parse().map_err(|_| err("bad vertex id"))?;
        if u == 0 || v == 0 {
            return Err(Error::VertexOutOfRange { vertex: 0, n: declared.unwrap_or(0) });
        }
        edges.push((u, v));
    }
    let max_id = edges.iter().map(|&(u, v)| u.max(v)).max().unwrap_or(0);
    let n = declared.unwrap_or(max_id);
    Graph::from_edges(n, &edges)
}

/// Decodes one graph6 line (without trailing newline).
pub fn decode_graph6(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    let bad = |msg: &str| Error::Parse { line: 1, msg: format!("graph6: {msg}") };
    if bytes.is_empty() {
        return Err(bad("empty string"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(bad(&format!("invalid byte {b:#x}")));
    }
    let (n, rest) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.len() >= 4 && bytes[1] != 126 {
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    } else {
        return Err(bad("vertex counts above 258047 are not supported"));
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let need = pairs.div_ceil(6);
    if rest.len() != need {
        return Err(bad(&format!("expected {need} edge bytes, found {}", rest.len())));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.link(i + 1, j + 1);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Encodes a graph in graph6 (no header, no newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut cur = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            cur = (cur << 1) | g.has_edge(i + 1, j + 1) as u8;
            used += 1;
            if used == 6 {
                out.push(cur + 63);
                cur = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((cur << (6 - used)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_from_edge_list() {
        let g = parse_graph("1 2\n2 3").unwrap();
        assert_eq!(g, Graph::path(3));
    }

    #[test]
    fn comments_blanks_and_declared_n() {
        let g = parse_edge_list("# a path\nn 4\n\n1 2 # first\n2 3\n").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(parse_edge_list("1 2 3"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("1 x"), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("2 2"), Err(Error::LoopEdge(2))));
        assert!(matches!(parse_edge_list("n 2\n1 3"), Err(Error::VertexOutOfRange { .. })));
        assert!(matches!(parse_edge_list("0 1"), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn known_graph6_strings() {
        // nauty's examples: K_4 is "C~", P_3 (1-2-3) is "Bg"
        assert_eq!(encode_graph6(&Graph::complete(4)), "C~");
        assert_eq!(decode_graph6("C~").unwrap(), Graph::complete(4));
        let p3 = decode_graph6("Bg").unwrap();
        assert_eq!(p3.edge_count(), 2);
        assert_eq!(encode_graph6(&Graph::empty(0).unwrap()), "?");
    }

    #[test]
    fn graph6_rejects_bad_length() {
        assert!(decode_graph6("C").is_err());
        assert!(decode_graph6("C~~").is_err());
    }

    proptest::proptest! {
        #[test]
        fn graph6_round_trip(n in 0usize..=20, bits in proptest::collection::vec(proptest::bool::ANY, 190)) {
            let mut g = Graph::empty(n).unwrap();
            let mut k = 0;
            for u in 1..=n {
                for v in u + 1..=n {
                    if bits[k % bits.len()] {
                        g.link(u, v);
                    }
                    k += 1;
                }
            }
            proptest::prop_assert_eq!(decode_graph6(&encode_graph6(&g)).unwrap(), g);
        }
    }
}
