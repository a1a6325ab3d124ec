//! Edge-list text format.
//!
//! The first non-comment line is the vertex count `n`; every following
//! non-comment line is one edge `u v` (0-indexed, whitespace-separated).
//! A `#` starts a comment that runs to the end of the line; blank lines are
//! ignored. Writers emit the canonical edge order, so a write/read round
//! trip reproduces the graph exactly.

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::fmt::Write as _;
use std::path::Path;

/// Parses the edge-list text format. Parse errors carry 1-based line numbers.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut pairs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut tokens = content.split_whitespace();
        match n {
            None => {
                let tok = tokens.next().expect("non-empty line has a token");
                if tokens.next().is_some() {
                    return Err(Error::Parse {
                        line,
                        msg: format!("expected a single vertex count, got '{content}'"),
                    });
                }
                n = Some(parse_index(tok, line)?);
            }
            Some(_) => {
                let (u, v) = match (tokens.next(), tokens.next(), tokens.next()) {
                    (Some(u), Some(v), None) => (u, v),
                    _ => {
                        return Err(Error::Parse {
                            line,
                            msg: format!("expected an edge 'u v', got '{content}'"),
                        })
                    }
                };
                pairs.push((parse_index(u, line)?, parse_index(v, line)?));
            }
        }
    }
    let n = n.ok_or(Error::Parse {
        line: 0,
        msg: "missing vertex count (file has no non-comment lines)".into(),
    })?;
    Graph::from_edge_list(n, &pairs)
}

fn parse_index(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("expected a non-negative integer, got '{tok}'"),
    })
}

/// Serializes a graph in the edge-list text format, canonical edge order.
pub fn format_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# {} vertices, {} edges", g.order(), g.size());
    let _ = writeln!(out, "{}", g.order());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Reads and parses an edge-list file.
pub fn read_edge_list(path: impl AsRef<Path>) -> Result<Graph> {
    parse_edge_list(&std::fs::read_to_string(path)?)
}

/// Writes a graph to a file in the edge-list text format.
pub fn write_edge_list(path: impl AsRef<Path>, g: &Graph) -> Result<()> {
    std::fs::write(path, format_edge_list(g))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments_and_blanks() {
        let text = "# triangle\n\n3   # vertex count\n0 1\n1 2  # last two\n\n0 2\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!((g.order(), g.size()), (3, 3));
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn round_trip_is_canonical() {
        let g = Graph::from_edge_list(5, &[(4, 0), (2, 1), (0, 3)]).unwrap();
        let text = format_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(format_edge_list(&back), text);
    }

    #[test]
    fn empty_input_is_a_parse_error() {
        assert!(matches!(
            parse_edge_list("# only comments\n\n"),
            Err(Error::Parse { line: 0, .. })
        ));
    }

    #[test]
    fn reports_offending_line_number() {
        let text = "3\n0 1\nx 2\n";
        match parse_edge_list(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        let text = "3\n0 1 2\n";
        match parse_edge_list(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn graph_validation_errors_pass_through() {
        assert!(matches!(
            parse_edge_list("2\n0 0\n"),
            Err(Error::SelfLoop(0))
        ));
        assert!(matches!(
            parse_edge_list("2\n0 1\n1 0\n"),
            Err(Error::DuplicateEdge(0, 1))
        ));
        assert!(matches!(
            parse_edge_list("2\n0 5\n"),
            Err(Error::VertexOutOfRange { vertex: 5, order: 2 })
        ));
    }
}
