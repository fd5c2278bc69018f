//! graph6, `n=<k>` edge lists, and DOT output.

use std::fmt::Write as _;

use thiserror::Error;

use super::{Graph, GraphError};

const GRAPH6_HEADER: &str = ">>graph6<<";
const GRAPH6_MAX_N: usize = 258_047;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("empty input")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} outside 63..=126")]
    ByteOutOfRange { offset: usize, byte: u8 },
    #[error("expected {expected} bytes, found {found}")]
    BadLength { expected: usize, found: usize },
    #[error("non-zero padding bits")]
    NonZeroPadding,
    #[error("graph6 supports at most {GRAPH6_MAX_N} vertices, got {0}")]
    TooManyVertices(usize),
    #[error("missing `n=<k>` header")]
    MissingHeader,
    #[error("line {line}: cannot parse `{text}`")]
    BadLine { line: usize, text: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// graph6 string: size prefix, then the upper triangle column by column
/// (`(0,1),(0,2),(1,2),(0,3),...`) packed six bits per byte, each plus 63.
pub fn encode_graph6(g: &Graph) -> Result<String, FormatError> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(FormatError::TooManyVertices(n));
    }
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

pub fn decode_graph6(text: &str) -> Result<Graph, FormatError> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::Empty);
    }
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(FormatError::ByteOutOfRange { offset, byte });
        }
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.len() < 4 {
            return Err(FormatError::BadLength {
                expected: 4,
                found: bytes.len(),
            });
        }
        if bytes[1] == 126 {
            // 8-byte size form; larger than anything we encode.
            return Err(FormatError::TooManyVertices(GRAPH6_MAX_N + 1));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63));
        (n, &bytes[4..])
    } else {
        (usize::from(bytes[0] - 63), &bytes[1..])
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(FormatError::BadLength {
            expected: expected + (bytes.len() - body.len()),
            found: bytes.len(),
        });
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    for pad in nbits..expected * 6 {
        if bit(pad) {
            return Err(FormatError::NonZeroPadding);
        }
    }
    Ok(g)
}

/// `n=<k>` header then one `u v` line per edge. `comments` are emitted as
/// `# ` lines after the header.
pub fn write_edge_list(g: &Graph, comments: &[String]) -> String {
    let mut out = format!("n={}\n", g.n());
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Inverse of [`write_edge_list`]; blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut graph: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = || FormatError::BadLine {
            line: idx + 1,
            text: raw.to_string(),
        };
        match graph.as_mut() {
            None => {
                let n = line
                    .strip_prefix("n=")
                    .ok_or(FormatError::MissingHeader)?
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| bad())?;
                graph = Some(Graph::new(n));
            }
            Some(g) => {
                let mut it = line.split_whitespace();
                let (Some(u), Some(v), None) = (it.next(), it.next(), it.next()) else {
                    return Err(bad());
                };
                let u = u.parse::<usize>().map_err(|_| bad())?;
                let v = v.parse::<usize>().map_err(|_| bad())?;
                g.try_add_edge(u, v)?;
            }
        }
    }
    graph.ok_or(FormatError::MissingHeader)
}

/// Undirected DOT. `highlight` vertices are filled.
pub fn write_dot(g: &Graph, name: &str, highlight: &[usize]) -> String {
    let mut out = format!("graph {name} {{\n");
    for v in 0..g.n() {
        if highlight.contains(&v) {
            let _ = writeln!(out, "  {v} [style=filled, fillcolor=lightblue];");
        } else {
            let _ = writeln!(out, "  {v};");
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_small_cases() {
        assert_eq!(encode_graph6(&Graph::new(1)).unwrap(), "@");
        assert_eq!(encode_graph6(&Graph::new(0)).unwrap(), "?");
        assert_eq!(encode_graph6(&Graph::complete(2)).unwrap(), "A_");
        assert_eq!(encode_graph6(&Graph::new(2)).unwrap(), "A?");
        assert_eq!(decode_graph6("A_").unwrap(), Graph::complete(2));
        assert_eq!(decode_graph6(">>graph6<<A_\n").unwrap(), Graph::complete(2));
    }

    #[test]
    fn graph6_known_string() {
        // Same graph and string as the petgraph test suite: edges
        // 0-2, 0-4, 1-3, 3-4 on five vertices.
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode_graph6(&g).unwrap(), "DQc");
        assert_eq!(encode_graph6(&Graph::complete(6)).unwrap(), "E~~w");
    }

    #[test]
    fn graph6_medium_size_prefix() {
        let g = Graph::from_edges(70, &[(0, 69), (10, 20)]).unwrap();
        let s = encode_graph6(&g).unwrap();
        assert!(s.starts_with('~'));
        assert_eq!(decode_graph6(&s).unwrap(), g);
    }

    #[test]
    fn graph6_errors() {
        assert_eq!(decode_graph6(""), Err(FormatError::Empty));
        assert!(matches!(
            decode_graph6("A"),
            Err(FormatError::BadLength {
                expected: 2,
                found: 1
            })
        ));
        assert!(matches!(
            decode_graph6("A_?"),
            Err(FormatError::BadLength { .. })
        ));
        assert_eq!(
            decode_graph6("A "),
            Err(FormatError::ByteOutOfRange {
                offset: 1,
                byte: b' '
            })
        );
        // K2 bit set plus a stray padding bit.
        assert_eq!(decode_graph6("A`"), Err(FormatError::NonZeroPadding));
    }

    #[test]
    fn edge_list_round_trip_and_errors() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3), (1, 3)]).unwrap();
        let text = write_edge_list(&g, &["hello".to_string()]);
        assert_eq!(text, "n=4\n# hello\n0 1\n1 3\n2 3\n");
        assert_eq!(parse_edge_list(&text).unwrap(), g);
        assert_eq!(parse_edge_list("0 1\n"), Err(FormatError::MissingHeader));
        assert_eq!(parse_edge_list(""), Err(FormatError::MissingHeader));
        assert!(matches!(
            parse_edge_list("n=3\n0 1 2\n"),
            Err(FormatError::BadLine { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("n=3\n0 5\n"),
            Err(FormatError::Graph(GraphError::VertexOutOfRange { .. }))
        ));
    }

    #[test]
    fn dot_output() {
        let g = Graph::complete(2);
        assert_eq!(
            write_dot(&g, "g", &[0]),
            "graph g {\n  0 [style=filled, fillcolor=lightblue];\n  1;\n  0 -- 1;\n}\n"
        );
    }
}
