//! Graph serialization: the standard graph6 format and a plain edge-list
//! text format.
//!
//! graph6 is bit-exact per the format specification: a size header
//! (1, 4 or 8 bytes for n < 63, n < 258048, n < 2^36), then the upper
//! triangle of the adjacency matrix in column-major order, packed into
//! 6-bit chunks biased by 63.

use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IoError {
    #[error("line {line}: {reason}")]
    Graph6 { line: usize, reason: String },
    #[error("line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error("empty input")]
    Empty,
    #[error("graph too large for graph6 (n = {0})")]
    TooLarge(usize),
    #[error("io: {0}")]
    File(String),
}

fn g6_err(line: usize, reason: impl Into<String>) -> IoError {
    IoError::Graph6 { line, reason: reason.into() }
}

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Decode one graph6 line (optionally prefixed with the `>>graph6<<` header).
pub fn parse_graph6(line: &str) -> Result<Graph, IoError> {
    parse_graph6_at(line, 1)
}

fn parse_graph6_at(line: &str, lineno: usize) -> Result<Graph, IoError> {
    let s = line.strip_prefix(GRAPH6_HEADER).unwrap_or(line).trim_end();
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(g6_err(lineno, "empty graph6 line"));
    }
    let (n, mut pos) = decode_size(bytes, lineno)?;
    // The declared size can be up to 2^36 - 1, whose triangle overflows
    // usize; the length check below rejects such lines before any bit is
    // consumed.
    let bits_needed = n as u128 * (n.saturating_sub(1)) as u128 / 2;
    if bits_needed > (bytes.len() - pos) as u128 * 6 {
        return Err(g6_err(lineno, format!("truncated graph6 body (n = {n})")));
    }
    let bits_needed = bits_needed as usize;
    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    let mut column = 1usize; // pair (row, column), row < column
    let mut row = 0usize;
    while bit_index < bits_needed {
        if pos >= bytes.len() {
            return Err(g6_err(lineno, format!("truncated graph6 body (n = {n})")));
        }
        let b = bytes[pos];
        if !(63..=126).contains(&b) {
            return Err(g6_err(lineno, format!("invalid graph6 byte {b:#x} at column {pos}")));
        }
        let chunk = b - 63;
        pos += 1;
        for k in 0..6 {
            if bit_index >= bits_needed {
                break;
            }
            if (chunk >> (5 - k)) & 1 == 1 {
                edges.push((row, column));
            }
            bit_index += 1;
            row += 1;
            if row == column {
                row = 0;
                column += 1;
            }
        }
    }
    if pos != bytes.len() {
        return Err(g6_err(lineno, "trailing bytes after graph6 body"));
    }
    Graph::new(n, &edges).map_err(|e| g6_err(lineno, e.to_string()))
}

fn decode_size(bytes: &[u8], lineno: usize) -> Result<(usize, usize), IoError> {
    let invalid = |b: u8| g6_err(lineno, format!("invalid graph6 size byte {b:#x}"));
    match bytes[0] {
        126 => {
            if bytes.len() >= 2 && bytes[1] == 126 {
                // 8-byte form: '~~' then 36 bits.
                if bytes.len() < 8 {
                    return Err(g6_err(lineno, "truncated graph6 size header"));
                }
                let mut n = 0usize;
                for &b in &bytes[2..8] {
                    if !(63..=126).contains(&b) {
                        return Err(invalid(b));
                    }
                    n = (n << 6) | (b - 63) as usize;
                }
                Ok((n, 8))
            } else {
                // 4-byte form: '~' then 18 bits.
                if bytes.len() < 4 {
                    return Err(g6_err(lineno, "truncated graph6 size header"));
                }
                let mut n = 0usize;
                for &b in &bytes[1..4] {
                    if !(63..=126).contains(&b) {
                        return Err(invalid(b));
                    }
                    n = (n << 6) | (b - 63) as usize;
                }
                Ok((n, 4))
            }
        }
        b if (63..126).contains(&b) => Ok(((b - 63) as usize, 1)),
        b => Err(invalid(b)),
    }
}

/// Encode a graph as a single graph6 line (no trailing newline).
pub fn write_graph6(g: &Graph) -> Result<String, IoError> {
    let n = g.vertex_count();
    let mut out = String::new();
    encode_size(&mut out, n)?;
    let mut chunk = 0u8;
    let mut filled = 0u8;
    for column in 1..n {
        for row in 0..column {
            chunk <<= 1;
            if g.has_edge(row, column) {
                chunk |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        chunk <<= 6 - filled;
        out.push((chunk + 63) as char);
    }
    Ok(out)
}

fn encode_size(out: &mut String, n: usize) -> Result<(), IoError> {
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    } else if n < (1usize << 36) {
        out.push('~');
        out.push('~');
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    } else {
        return Err(IoError::TooLarge(n));
    }
    Ok(())
}

/// Parse a graph6 file: one graph per non-empty line. A standalone
/// `>>graph6<<` header line is skipped.
pub fn parse_graph6_lines(content: &str) -> Result<Vec<Graph>, IoError> {
    let mut graphs = Vec::new();
    for (idx, line) in content.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed == GRAPH6_HEADER {
            continue;
        }
        graphs.push(parse_graph6_at(line, idx + 1)?);
    }
    if graphs.is_empty() {
        return Err(IoError::Empty);
    }
    Ok(graphs)
}

/// A nine-byte edge-list file can declare an arbitrarily large vertex
/// count; bound it so parsing never attempts an absurd allocation.
pub const MAX_EDGE_LIST_VERTICES: usize = 50_000_000;

/// Parse the edge-list format: first line `n`, then one `u v` pair per line.
pub fn parse_edge_list(content: &str) -> Result<Graph, IoError> {
    let err = |line: usize, reason: String| IoError::EdgeList { line, reason };
    let mut lines = content.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (first_no, first) = lines.next().ok_or(IoError::Empty)?;
    let n: usize = first
        .trim()
        .parse()
        .map_err(|_| err(first_no + 1, format!("expected vertex count, got {first:?}")))?;
    if n > MAX_EDGE_LIST_VERTICES {
        return Err(err(
            first_no + 1,
            format!("vertex count {n} exceeds the supported maximum {MAX_EDGE_LIST_VERTICES}"),
        ));
    }
    let mut edges = Vec::new();
    for (idx, line) in lines {
        let mut it = line.split_whitespace();
        let u = it.next().ok_or_else(|| err(idx + 1, "missing endpoint".into()))?;
        let v = it.next().ok_or_else(|| err(idx + 1, "missing second endpoint".into()))?;
        if it.next().is_some() {
            return Err(err(idx + 1, "expected exactly two endpoints".into()));
        }
        let u: usize = u.parse().map_err(|_| err(idx + 1, format!("bad vertex {u:?}")))?;
        let v: usize = v.parse().map_err(|_| err(idx + 1, format!("bad vertex {v:?}")))?;
        edges.push((u, v));
    }
    Graph::new(n, &edges).map_err(|e| err(0, e.to_string()))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{}", g.vertex_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Read a graph from a string, sniffing the format: content whose first
/// non-empty line starts with a decimal digit is an edge list (digits are
/// below the graph6 bias of 63), anything else is graph6.
pub fn parse_auto(content: &str) -> Result<Graph, IoError> {
    let first = content
        .lines()
        .find(|l| !l.trim().is_empty())
        .ok_or(IoError::Empty)?;
    let first = first.trim();
    if first.chars().next().is_some_and(|c| c.is_ascii_digit()) {
        parse_edge_list(content)
    } else {
        parse_graph6(first)
    }
}

/// Read a single graph from a file (graph6 or edge list, sniffed).
pub fn read_graph_file(path: &Path) -> Result<Graph, IoError> {
    let content =
        std::fs::read_to_string(path).map_err(|e| IoError::File(format!("{}: {e}", path.display())))?;
    parse_auto(&content)
}

/// Read a multi-graph graph6 corpus file.
pub fn read_graph6_corpus(path: &Path) -> Result<Vec<Graph>, IoError> {
    let content =
        std::fs::read_to_string(path).map_err(|e| IoError::File(format!("{}: {e}", path.display())))?;
    parse_graph6_lines(&content)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, path_graph};

    #[test]
    fn known_graph6_encodings() {
        assert_eq!(write_graph6(&complete_graph(2)).unwrap(), "A_");
        assert_eq!(write_graph6(&complete_graph(3)).unwrap(), "Bw");
        assert_eq!(write_graph6(&complete_graph(5)).unwrap(), "D~{");
        assert_eq!(write_graph6(&Graph::empty(0)).unwrap(), "?");
        assert_eq!(write_graph6(&Graph::empty(1)).unwrap(), "@");
    }

    #[test]
    fn parses_known_encodings() {
        assert_eq!(parse_graph6("A_").unwrap(), complete_graph(2));
        assert_eq!(parse_graph6("Bw").unwrap(), complete_graph(3));
        assert_eq!(parse_graph6("D~{").unwrap(), complete_graph(5));
        assert_eq!(parse_graph6(">>graph6<<A_").unwrap(), complete_graph(2));
    }

    #[test]
    fn round_trips_medium_sizes() {
        for g in [path_graph(70), cycle_graph(100)] {
            let enc = write_graph6(&g).unwrap();
            assert_eq!(parse_graph6(&enc).unwrap(), g);
        }
    }

    #[test]
    fn rejects_malformed_graph6() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("B").is_err()); // truncated body
        assert!(parse_graph6("Bw!").is_err()); // trailing bytes
        assert!(matches!(parse_graph6("\u{7f}"), Err(IoError::Graph6 { .. })));
        // An 8-byte size header declaring ~2^36 vertices must be rejected
        // as truncated, not overflow the triangle arithmetic.
        assert!(matches!(parse_graph6("~~}}}}}}"), Err(IoError::Graph6 { .. })));
        assert!(matches!(parse_graph6("~}}}"), Err(IoError::Graph6 { .. })));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = cycle_graph(5);
        let text = write_edge_list(&g);
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        let err = parse_edge_list("3\n0 1\n0 x\n").unwrap_err();
        assert_eq!(err, IoError::EdgeList { line: 3, reason: "bad vertex \"x\"".into() });
        let err = parse_edge_list("3\n0 1 2\n").unwrap_err();
        assert!(matches!(err, IoError::EdgeList { line: 2, .. }));
        let err = parse_edge_list("99999999999\n").unwrap_err();
        assert!(matches!(err, IoError::EdgeList { line: 1, .. }));
    }

    #[test]
    fn auto_detects_format() {
        let g = cycle_graph(4);
        assert_eq!(parse_auto(&write_edge_list(&g)).unwrap(), g);
        assert_eq!(parse_auto(&write_graph6(&g).unwrap()).unwrap(), g);
    }

    #[test]
    fn corpus_parse_reports_line() {
        let err = parse_graph6_lines("Bw\n\nB\n").unwrap_err();
        assert!(matches!(err, IoError::Graph6 { line: 3, .. }));
    }
}
