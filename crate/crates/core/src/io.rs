//! Plain edge-list and graph6 encodings.
//!
//! Edge-list: first line `n m`, then `m` lines `u v` with `u < v`, 0-based,
//! in ascending lexicographic order. graph6 follows the nauty definition
//! (`N(n)` prefix, upper triangle column by column, 6 bits per byte + 63).

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Graph6,
}

pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(ParseError::Empty)?;
    let nums = parse_pair(header).map_err(|msg| ParseError::EdgeList { line: hline, msg })?;
    let (n, m) = nums;
    let mut g = Graph::new(n);
    let mut count = 0;
    for (line, l) in lines {
        let (u, v) = parse_pair(l).map_err(|msg| ParseError::EdgeList { line, msg })?;
        g.add_edge(u, v).map_err(|e| ParseError::EdgeList { line, msg: e.to_string() })?;
        count += 1;
    }
    if count != m {
        return Err(ParseError::EdgeList {
            line: hline,
            msg: format!("header announces {m} edges, found {count}"),
        });
    }
    Ok(g)
}

fn parse_pair(line: &str) -> Result<(usize, usize), String> {
    let mut it = line.split_whitespace();
    let a = it.next().ok_or("missing field")?;
    let b = it.next().ok_or("missing second field")?;
    if it.next().is_some() {
        return Err("trailing fields".into());
    }
    let a = a.parse().map_err(|_| format!("not a count: {a:?}"))?;
    let b = b.parse().map_err(|_| format!("not a count: {b:?}"))?;
    Ok((a, b))
}

fn encode_n(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    encode_n(n, &mut out);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::Empty);
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(ParseError::Graph6(format!("byte {b} outside 63..=126")));
    }
    let take = |from: usize, k: usize| -> Result<usize, ParseError> {
        let chunk = bytes
            .get(from..from + k)
            .ok_or_else(|| ParseError::Graph6("truncated order field".into()))?;
        Ok(chunk.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
    };
    let (n, mut pos) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.get(1) != Some(&126) {
        (take(1, 3)?, 4)
    } else {
        (take(2, 6)?, 8)
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    let body = &bytes[pos.min(bytes.len())..];
    if body.len() != need {
        return Err(ParseError::Graph6(format!(
            "expected {need} data bytes for order {n}, found {}",
            body.len()
        )));
    }
    let mut g = Graph::new(n);
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + bit / 6] - 63;
            if byte & (1 << (5 - bit % 6)) != 0 {
                g.add_edge(i, j)?;
            }
            bit += 1;
        }
    }
    pos += need;
    if nbits % 6 != 0 {
        let last = bytes[pos - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(ParseError::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}

/// Edge-list when the first non-blank line is two integers, graph6 otherwise.
pub fn detect_format(text: &str) -> Format {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
    if parse_pair(first).is_ok() {
        Format::EdgeList
    } else {
        Format::Graph6
    }
}

pub fn parse_any(text: &str) -> Result<Graph, ParseError> {
    match detect_format(text) {
        Format::EdgeList => parse_edge_list(text),
        Format::Graph6 => parse_graph6(text),
    }
}

pub fn write(g: &Graph, format: Format) -> String {
    match format {
        Format::EdgeList => write_edge_list(g),
        Format::Graph6 => {
            let mut s = write_graph6(g);
            s.push('\n');
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_header() {
        let g = Graph::complete(4);
        let text = write_edge_list(&g);
        assert!(text.starts_with("4 6\n0 1\n0 2\n"));
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn known_graph6_strings() {
        // Reference encodings from the nauty format description.
        assert_eq!(write_graph6(&Graph::complete(4)), "C~");
        assert_eq!(write_graph6(&Graph::petersen()), "IheA@GUAo");
        assert_eq!(write_graph6(&Graph::new(0)), "?");
        assert_eq!(parse_graph6("C~").unwrap(), Graph::complete(4));
        assert_eq!(parse_graph6(">>graph6<<IheA@GUAo").unwrap(), Graph::petersen());
    }

    #[test]
    fn large_order_prefix() {
        let g = Graph::path(70);
        let s = write_graph6(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn malformed_inputs() {
        assert!(parse_edge_list("3 1\n0 0\n").is_err());
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 x\n").is_err());
        assert!(parse_edge_list("").is_err());
        assert!(parse_graph6("C").is_err());
        assert!(parse_graph6("C~~").is_err());
        assert!(parse_graph6("C\u{1}").is_err());
        assert_eq!(detect_format("8 12\n"), Format::EdgeList);
        assert_eq!(detect_format("C~\n"), Format::Graph6);
    }

    use proptest::prelude::*;

    proptest! {
        #[test]
        fn both_formats_round_trip(n in 0usize..80, seed in any::<u64>()) {
            let mut g = Graph::new(n);
            let mut x = seed | 1;
            for u in 0..n {
                for v in u + 1..n {
                    x ^= x << 13; x ^= x >> 7; x ^= x << 17;
                    if x % 3 == 0 {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            let el = write_edge_list(&g);
            prop_assert_eq!(write_edge_list(&parse_edge_list(&el).unwrap()), el);
            let g6 = write_graph6(&g);
            prop_assert_eq!(write_graph6(&parse_graph6(&g6).unwrap()), g6);
            prop_assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
        }
    }
}
