//! graph6 and plain edge-list formats.
//!
//! graph6 stores the upper triangle of the adjacency matrix column by
//! column, i.e. bits for `(0,1), (0,2), (1,2), (0,3), ...`, packed six bits
//! per printable character with an offset of 63. The vertex count comes
//! first: one character for `n <= 62`, `~` plus three characters for
//! `n <= 258047`, `~~` plus six characters beyond that.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

fn g6_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u64> {
    match bytes.get(offset) {
        Some(&b) if (63..=126).contains(&b) => Ok(u64::from(b - 63)),
        Some(&b) => Err(g6_err(
            offset,
            format!("character {b:#04x} outside 63..=126"),
        )),
        None => Err(g6_err(offset, "unexpected end of input")),
    }
}

/// Parses one graph6 string. An optional `>>graph6<<` header and trailing
/// newline are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let mut base = 0;
    let mut s = text.trim_end_matches(['\n', '\r']);
    if let Some(rest) = s.strip_prefix(HEADER) {
        s = rest;
        base = HEADER.len();
    }
    let bytes = s.as_bytes();
    let at = |o: usize| o + base;

    if bytes.is_empty() {
        return Err(g6_err(at(0), "empty input"));
    }

    let (n, mut pos) = if bytes[0] != b'~' {
        (
            sextet(bytes, 0).map_err(|_| g6_err(at(0), "malformed vertex count"))?,
            1,
        )
    } else if bytes.get(1) != Some(&b'~') {
        let mut n = 0;
        for i in 1..4 {
            n = n << 6 | sextet(bytes, i).map_err(|e| shift(e, base))?;
        }
        if n < 63 {
            return Err(g6_err(
                at(0),
                format!("non-canonical long form for n = {n}"),
            ));
        }
        (n, 4)
    } else {
        let mut n = 0;
        for i in 2..8 {
            n = n << 6 | sextet(bytes, i).map_err(|e| shift(e, base))?;
        }
        if n < 258048 {
            return Err(g6_err(
                at(0),
                format!("non-canonical long form for n = {n}"),
            ));
        }
        (n, 8)
    };
    let n = n as usize;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }

    let nbits = n * n.saturating_sub(1) / 2;
    let nchars = nbits.div_ceil(6);
    if bytes.len() != pos + nchars {
        return Err(g6_err(
            at(bytes.len().min(pos + nchars)),
            format!(
                "expected {nchars} adjacency characters for n = {n}, found {}",
                bytes.len() - pos.min(bytes.len())
            ),
        ));
    }

    let mut adj = vec![VertexSet::EMPTY; n];
    let mut bit = 0;
    let mut chunk = 0u64;
    for j in 1..n {
        for i in 0..j {
            if bit % 6 == 0 {
                chunk = sextet(bytes, pos).map_err(|e| shift(e, base))?;
                pos += 1;
            }
            if chunk >> (5 - bit % 6) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            bit += 1;
        }
    }
    if bit % 6 != 0 {
        let pad = 6 - bit % 6;
        if chunk & ((1 << pad) - 1) != 0 {
            return Err(g6_err(at(pos - 1), "nonzero padding bits"));
        }
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

fn shift(e: Error, base: usize) -> Error {
    match e {
        Error::Graph6 { offset, reason } => Error::Graph6 {
            offset: offset + base,
            reason,
        },
        other => other,
    }
}

/// Encodes a graph as graph6 (no header, no newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258047 {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    } else {
        out.extend_from_slice(b"~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Parses the edge-list format: a `n m` header line followed by `m` lines
/// of `u v`, 0-indexed. Blank lines and `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let err = |line, reason: &str| Error::EdgeList {
        line,
        reason: reason.to_string(),
    };
    let pair = |line: usize, l: &str| -> Result<(usize, usize)> {
        let mut it = l.split_whitespace().map(|t| t.parse::<usize>());
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
            _ => Err(err(line, "expected two non-negative integers")),
        }
    };

    let (hline, header) = lines.next().ok_or_else(|| err(0, "missing 'n m' header"))?;
    let (n, m) = pair(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        let (u, v) = pair(line, l)?;
        if u >= n || v >= n {
            return Err(err(line, &format!("endpoint out of range for n = {n}")));
        }
        if u == v {
            return Err(err(line, "loop edge"));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(err(
            hline,
            &format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, edges)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// Input format selector for [`parse_graph_auto`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    Graph6,
    EdgeList,
    Auto,
}

/// Parses either format. `Auto` treats input whose first meaningful line
/// holds two integers as an edge list and anything else as graph6.
pub fn parse_graph_auto(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::Graph6 => parse_graph6(text.trim()),
        Format::EdgeList => parse_edge_list(text),
        Format::Auto => {
            let first = text
                .lines()
                .map(|l| l.split('#').next().unwrap_or("").trim())
                .find(|l| !l.is_empty())
                .unwrap_or("");
            let looks_numeric = {
                let toks: Vec<_> = first.split_whitespace().collect();
                toks.len() == 2 && toks.iter().all(|t| t.parse::<usize>().is_ok())
            };
            if looks_numeric {
                parse_edge_list(text)
            } else {
                parse_graph6(first)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4() {
        let g = parse_graph6("C~").unwrap();
        assert_eq!(g.order(), 4);
        assert!(g.is_complete());
        assert_eq!(emit_graph6(&g), "C~");
    }

    #[test]
    fn p4() {
        let g = parse_graph6("Ch").unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(emit_graph6(&g), "Ch");
    }

    #[test]
    fn k1_and_empty() {
        let g = parse_graph6("@").unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(emit_graph6(&Graph::empty(0).unwrap()), "?");
        assert_eq!(parse_graph6("?").unwrap().order(), 0);
    }

    #[test]
    fn header_and_newline() {
        let g = parse_graph6(">>graph6<<Ch\n").unwrap();
        assert_eq!(g.size(), 3);
    }

    #[test]
    fn long_form_n() {
        let g = Graph::empty(100).unwrap().add_edge(0, 99).unwrap();
        let s = emit_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn errors_carry_offsets() {
        assert!(matches!(
            parse_graph6(""),
            Err(Error::Graph6 { offset: 0, .. })
        ));
        // K4 needs one adjacency char
        assert!(matches!(
            parse_graph6("C"),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        assert!(matches!(
            parse_graph6("C~~"),
            Err(Error::Graph6 { offset: 2, .. })
        ));
        assert!(matches!(
            parse_graph6("C "),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        // n = 3 has 3 bits; 'B' + 0b000111 sets padding
        assert!(matches!(
            parse_graph6("BF"),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        assert!(matches!(
            parse_graph6(">>graph6<<C "),
            Err(Error::Graph6 { offset: 11, .. })
        ));
        assert!(matches!(parse_graph6("~??"), Err(Error::Graph6 { .. })));
    }

    #[test]
    fn edge_list_round_trip() {
        let text = "# a path\n4 3\n0 1\n1 2 # middle\n\n2 3\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(emit_graph6(&g), "Ch");
        assert_eq!(parse_edge_list(&emit_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(parse_edge_list(""), Err(Error::EdgeList { .. })));
        assert!(matches!(
            parse_edge_list("3 1\n0 3\n"),
            Err(Error::EdgeList { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n"),
            Err(Error::EdgeList { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n1 1\n"),
            Err(Error::EdgeList { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n1 x\n"),
            Err(Error::EdgeList { line: 2, .. })
        ));
    }

    #[test]
    fn auto_detect() {
        assert_eq!(parse_graph_auto("Ch\n", Format::Auto).unwrap().size(), 3);
        assert_eq!(
            parse_graph_auto("2 1\n0 1\n", Format::Auto).unwrap().size(),
            1
        );
    }
}
