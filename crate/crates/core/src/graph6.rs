//! graph6 codec: 6-bit chunks offset by 63, upper-triangle bits in column
//! order, zero padding. Also parses the plain edge-list text format
//! (`n m` header followed by `u v` lines).

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodecError {
    #[error("byte {offset}: empty graph6 line")]
    Empty { offset: usize },
    #[error("byte {offset}: malformed vertex-count prefix")]
    BadLengthPrefix { offset: usize },
    #[error("byte {offset}: character {byte:#04x} outside graph6 range 63..=126")]
    OutOfRange { offset: usize, byte: u8 },
    #[error("line is {got} bytes but {want} are needed for {n} vertices")]
    Truncated { got: usize, want: usize, n: usize },
    #[error("byte {offset}: trailing padding bits are nonzero")]
    TrailingBits { offset: usize },
    #[error("vertex count {0} exceeds the supported maximum of {max}", max = MAX_VERTICES)]
    TooLarge(usize),
    #[error("edge list line {line}: {reason}")]
    BadEdgeList { line: usize, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Parse one graph6 line (an optional `>>graph6<<` header is accepted).
pub fn parse_graph6(text: &str) -> Result<Graph, CodecError> {
    let mut s = text.trim_end_matches(['\r', '\n']);
    let mut base = 0;
    if let Some(rest) = s.strip_prefix(HEADER) {
        s = rest;
        base = HEADER.len();
    }
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(CodecError::Empty { offset: base });
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(CodecError::OutOfRange {
                offset: base + i,
                byte: b,
            });
        }
    }

    // vertex count: one byte for n <= 62, '~' + 3 bytes for n <= 258047
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            // 8-byte form encodes n >= 258048, far beyond our cap
            return Err(CodecError::TooLarge(MAX_VERTICES + 1));
        }
        if bytes.len() < 4 {
            return Err(CodecError::BadLengthPrefix { offset: base });
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b as usize - 63));
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    if n > MAX_VERTICES {
        return Err(CodecError::TooLarge(n));
    }

    let bit_count = n * n.saturating_sub(1) / 2;
    let want = pos + bit_count.div_ceil(6);
    if bytes.len() < want {
        return Err(CodecError::Truncated {
            got: bytes.len(),
            want,
            n,
        });
    }
    if bytes.len() > want {
        return Err(CodecError::OutOfRange {
            offset: base + want,
            byte: bytes[want],
        });
    }

    let mut g = Graph::new(n)?;
    let mut bit_index = 0usize;
    let mut chunk = 0u8;
    let mut chunk_bits = 0u8;
    for col in 1..n {
        for row in 0..col {
            if chunk_bits == 0 {
                chunk = bytes[pos] - 63;
                pos += 1;
                chunk_bits = 6;
            }
            let bit = (chunk >> (chunk_bits - 1)) & 1;
            chunk_bits -= 1;
            if bit == 1 {
                g.add_edge(row, col)?;
            }
            bit_index += 1;
        }
    }
    let _ = bit_index;
    if chunk_bits > 0 && chunk & ((1 << chunk_bits) - 1) != 0 {
        return Err(CodecError::TrailingBits {
            offset: base + pos - 1,
        });
    }
    Ok(g)
}

/// Encode a graph as a graph6 line (no header).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut chunk = 0u8;
    let mut chunk_bits = 0u8;
    for col in 1..n {
        for row in 0..col {
            chunk = (chunk << 1) | u8::from(g.has_edge(row, col));
            chunk_bits += 1;
            if chunk_bits == 6 {
                out.push(chunk + 63);
                chunk = 0;
                chunk_bits = 0;
            }
        }
    }
    if chunk_bits > 0 {
        out.push((chunk << (6 - chunk_bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ascii")
}

/// Parse the edge-list convenience format: a `n m` header line followed by
/// `m` lines `u v`, whitespace separated, 0-indexed.
pub fn parse_edge_list(text: &str) -> Result<Graph, CodecError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (lineno, header) = lines.next().ok_or(CodecError::BadEdgeList {
        line: 1,
        reason: "missing `n m` header".into(),
    })?;
    let mut it = header.split_whitespace();
    let parse_num = |tok: Option<&str>, lineno: usize| -> Result<usize, CodecError> {
        tok.and_then(|t| t.parse().ok())
            .ok_or(CodecError::BadEdgeList {
                line: lineno + 1,
                reason: "expected a nonnegative integer".into(),
            })
    };
    let n = parse_num(it.next(), lineno)?;
    let m = parse_num(it.next(), lineno)?;
    if n > MAX_VERTICES {
        return Err(CodecError::TooLarge(n));
    }
    let mut g = Graph::new(n)?;
    let mut seen = 0usize;
    for (lineno, line) in lines {
        let mut it = line.split_whitespace();
        let u = parse_num(it.next(), lineno)?;
        let v = parse_num(it.next(), lineno)?;
        g.add_edge(u, v)?;
        seen += 1;
    }
    if seen != m {
        return Err(CodecError::BadEdgeList {
            line: seen + 2,
            reason: format!("header promised {m} edges, found {seen}"),
        });
    }
    Ok(g)
}

/// Parse a graph from either supported text format. Lines whose first
/// character is a digit are edge lists (graph6 bytes start at '?').
pub fn parse_graph_auto(text: &str) -> Result<Graph, CodecError> {
    let trimmed = text.trim_start();
    if trimmed.starts_with(|c: char| c.is_ascii_digit()) {
        parse_edge_list(text)
    } else {
        parse_graph6(trimmed.lines().next().unwrap_or(""))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_k4() {
        // 'C' = 4 vertices, '~' = 0b111111: all six upper-triangle bits set
        let g = parse_graph6("C~").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 6);
        assert!(g.is_complete());
        assert_eq!(encode_graph6(&g), "C~");
    }

    #[test]
    fn parses_single_vertex() {
        let g = parse_graph6("@").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(encode_graph6(&g), "@");
    }

    #[test]
    fn parses_p4() {
        // 'h' = 0b101001: bits x01 x02 x12 x03 x13 x23 = 1,0,1,0,0,1
        let g = parse_graph6("Ch").unwrap();
        assert_eq!(g.n(), 4);
        let mut edges = g.edges();
        edges.sort();
        assert_eq!(edges, vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(encode_graph6(&g), "Ch");
    }

    #[test]
    fn accepts_optional_header() {
        let g = parse_graph6(">>graph6<<C~").unwrap();
        assert_eq!(g.n(), 4);
    }

    #[test]
    fn rejects_malformed_input() {
        assert_eq!(parse_graph6(""), Err(CodecError::Empty { offset: 0 }));
        assert!(matches!(
            parse_graph6("C 8"),
            Err(CodecError::OutOfRange {
                offset: 1,
                byte: b' '
            })
        ));
        assert!(matches!(
            parse_graph6("C"),
            Err(CodecError::Truncated { .. })
        ));
        // 'A' = 2 vertices needs 1 bit; '@'+1 lowest bits set would be padding
        assert!(matches!(
            parse_graph6("AA"),
            Err(CodecError::TrailingBits { .. })
        ));
        // '~' length prefix cut short
        assert!(matches!(
            parse_graph6("~A"),
            Err(CodecError::BadLengthPrefix { offset: 0 })
        ));
    }

    #[test]
    fn long_form_vertex_count_round_trips() {
        // 63 and 64 vertices need the '~' + 3 byte count prefix
        for n in [63usize, 64] {
            let mut g = Graph::new(n).unwrap();
            g.add_edge(0, n - 1).unwrap();
            g.add_edge(n / 2, n - 2).unwrap();
            let line = encode_graph6(&g);
            assert_eq!(line.as_bytes()[0], b'~');
            let back = parse_graph6(&line).unwrap();
            assert_eq!(back, g);
        }
        // anything larger is over the representation cap
        assert!(matches!(
            parse_graph6("~?@@"),
            Err(CodecError::TooLarge(65))
        ));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = parse_edge_list("4 3\n0 1\n1 2\n2 3\n").unwrap();
        assert_eq!(encode_graph6(&g), "Ch");
        assert!(parse_edge_list("4 5\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 0\n").is_err());
    }

    #[test]
    fn auto_detects_format() {
        assert_eq!(parse_graph_auto("4 1\n0 2\n").unwrap().edge_count(), 1);
        assert_eq!(parse_graph_auto("C~").unwrap().edge_count(), 6);
    }
}
