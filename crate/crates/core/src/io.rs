//! The `ECG v1` text format and Graphviz export.
//!
//! ECG v1: a header line `n m`, then exactly `m` lines `u v c` with 0-based
//! vertices and a non-negative colour, all decimal and space separated.
//! Blank lines are ignored. The writer emits edges in lexicographic order,
//! so writing is canonical for a given graph.

use std::fmt::Write as _;
use std::io::{self, BufRead, Write};

use thiserror::Error;

use crate::graph::{Colour, EdgeColouredGraph, GraphError};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error("expected {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("missing header line `n m`")]
    MissingHeader,
    #[error(transparent)]
    Io(#[from] io::Error),
}

fn parse_fields<const K: usize>(line: &str, lineno: usize) -> Result<[u64; K], ParseError> {
    let mut out = [0u64; K];
    let mut fields = line.split_whitespace();
    for slot in out.iter_mut() {
        let tok = fields.next().ok_or_else(|| ParseError::Syntax {
            line: lineno,
            msg: format!("expected {K} fields"),
        })?;
        *slot = tok.parse().map_err(|_| ParseError::Syntax {
            line: lineno,
            msg: format!("`{tok}` is not a non-negative integer"),
        })?;
    }
    if let Some(extra) = fields.next() {
        return Err(ParseError::Syntax {
            line: lineno,
            msg: format!("unexpected trailing field `{extra}`"),
        });
    }
    Ok(out)
}

pub fn read_ecg<R: BufRead>(reader: R) -> Result<EdgeColouredGraph, ParseError> {
    let mut lines = reader
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| l.as_ref().map(|s| !s.trim().is_empty()).unwrap_or(true));

    let (hline, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let [n, m] = parse_fields::<2>(&header?, hline)?;
    let (n, m) = (n as usize, m as usize);
    let mut g = EdgeColouredGraph::new(n);
    let mut found = 0;
    for (lineno, line) in lines {
        let [u, v, c] = parse_fields::<3>(&line?, lineno)?;
        found += 1;
        if found > m {
            continue;
        }
        g.add_edge(u as usize, v as usize, Colour(c))
            .map_err(|source| ParseError::Graph { line: lineno, source })?;
    }
    if found != m {
        return Err(ParseError::EdgeCount { expected: m, found });
    }
    Ok(g)
}

pub fn parse_ecg(text: &str) -> Result<EdgeColouredGraph, ParseError> {
    read_ecg(text.as_bytes())
}

pub fn to_ecg_string(g: &EdgeColouredGraph) -> String {
    let mut s = String::new();
    writeln!(s, "{} {}", g.n(), g.edge_count()).unwrap();
    for (u, v, c) in g.edges() {
        writeln!(s, "{u} {v} {c}").unwrap();
    }
    s
}

pub fn write_ecg<W: Write>(g: &EdgeColouredGraph, mut w: W) -> io::Result<()> {
    w.write_all(to_ecg_string(g).as_bytes())
}

/// Edge colours cycle through this palette by colour id.
pub const DOT_PALETTE: [&str; 12] = [
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4", "#f032e6", "#9a6324",
    "#800000", "#469990", "#000075", "#808000",
];

pub fn to_dot(g: &EdgeColouredGraph) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..g.n() {
        writeln!(s, "  {v};").unwrap();
    }
    for (u, v, c) in g.edges() {
        let col = DOT_PALETTE[(c.0 % DOT_PALETTE.len() as u64) as usize];
        writeln!(s, "  {u} -- {v} [color=\"{col}\", label=\"{c}\"];").unwrap();
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_sorted() {
        let g = parse_ecg("3 2\n2 1 7\n0 1 5\n").unwrap();
        assert_eq!(to_ecg_string(&g), "3 2\n0 1 5\n1 2 7\n");
        assert_eq!(parse_ecg(&to_ecg_string(&g)).unwrap(), g);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            parse_ecg("2 1\n0 0 1\n"),
            Err(ParseError::Graph { line: 2, source: GraphError::Loop(0) })
        ));
        assert!(matches!(
            parse_ecg("2 2\n0 1 1\n1 0 2\n"),
            Err(ParseError::Graph { source: GraphError::DuplicateEdge(0, 1), .. })
        ));
        assert!(matches!(
            parse_ecg("2 2\n0 1 1\n"),
            Err(ParseError::EdgeCount { expected: 2, found: 1 })
        ));
        assert!(matches!(parse_ecg("2 1\n0 1 -3\n"), Err(ParseError::Syntax { line: 2, .. })));
        assert!(matches!(parse_ecg("2 1\n0 1\n"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_ecg(""), Err(ParseError::MissingHeader)));
        assert!(matches!(
            parse_ecg("2 1\n0 5 1\n"),
            Err(ParseError::Graph { source: GraphError::VertexOutOfRange { .. }, .. })
        ));
    }

    #[test]
    fn dot_export() {
        let g = parse_ecg("2 1\n0 1 13\n").unwrap();
        let dot = to_dot(&g);
        assert!(dot.contains("0 -- 1 [color=\"#3cb44b\", label=\"13\"]"));
        assert!(dot.starts_with("graph G {"));
    }
}
