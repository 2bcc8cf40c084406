//! graph6 (short form, order <= 62) reader and writer.
//!
//! Layout: one byte `n + 63`, then the upper triangle of the adjacency
//! matrix in column order `x(0,1) x(0,2) x(1,2) x(0,3) ...`, packed six bits
//! per byte (most significant first), each byte offset by 63.

use crate::error::{parse_err, Error, Result};
use crate::graph::{Graph, MAX_ORDER};

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(((acc << (6 - nbits)) + 63) as char);
    }
    out
}

/// Decodes one graph6 string. A leading `>>graph6<<` header and surrounding
/// whitespace are tolerated.
pub fn decode(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(parse_err(1, "empty graph6 string"));
    };
    if !(63..=126).contains(&first) {
        return Err(parse_err(1, format!("bad graph6 header byte {first}")));
    }
    if first == 126 {
        return Err(Error::Capacity {
            what: "graph6 order (long form unsupported)",
            got: MAX_ORDER + 1,
            limit: MAX_ORDER,
        });
    }
    let n = (first - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let want = nbits.div_ceil(6);
    let body = &bytes[1..];
    if body.len() != want {
        return Err(parse_err(
            1,
            format!(
                "graph6 body has {} bytes, order {n} needs {want}",
                body.len()
            ),
        ));
    }
    let mut bits = Vec::with_capacity(want * 6);
    for &b in body {
        if !(63..=126).contains(&b) {
            return Err(parse_err(1, format!("bad graph6 data byte {b}")));
        }
        let v = b - 63;
        for k in (0..6).rev() {
            bits.push(v >> k & 1 == 1);
        }
    }
    if bits[nbits..].iter().any(|&b| b) {
        return Err(parse_err(1, "nonzero graph6 padding bits"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

/// Decodes a newline-separated stream, skipping blank lines. Errors carry the
/// 1-based line number.
pub fn decode_stream(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        out.push(decode(line).map_err(|e| match e {
            Error::Parse { msg, .. } => parse_err(i + 1, msg),
            other => other,
        })?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path};

    #[test]
    fn decode_known_strings() {
        // Expected edge sets from networkx.from_graph6_bytes.
        assert_eq!(decode("BW").unwrap().edges(), vec![(0, 2), (1, 2)]);
        assert_eq!(decode("Bg").unwrap(), path(3).unwrap());
        let star = decode("D?{").unwrap();
        assert_eq!(star.edges(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(encode(&star), "D?{");
        assert_eq!(encode(&complete(4).unwrap()), "C~");
        assert_eq!(decode("@").unwrap().order(), 1);
        assert_eq!(decode("?").unwrap().order(), 0);
    }

    #[test]
    fn decode_errors() {
        assert!(decode("").is_err());
        assert!(decode("D?").is_err()); // truncated
        assert!(decode("D?{{").is_err()); // too long
        assert!(decode("B\x20").is_err());
        assert!(decode("BX").is_err()); // padding bit set
        assert!(matches!(decode("~"), Err(Error::Capacity { .. })));
    }

    #[test]
    fn stream_reports_line() {
        let gs = decode_stream(">>graph6<<Bg\n\nC~\n").unwrap();
        assert_eq!(gs.len(), 2);
        assert_eq!(
            decode_stream("Bg\nD?").unwrap_err(),
            parse_err(2, "graph6 body has 1 bytes, order 5 needs 2")
        );
    }
}
