//! Plain-text edge lists: one `u v` pair per line.
//!
//! Blank lines and lines starting with `#` are ignored.  The vertex count
//! is inferred as one past the largest label that appears, so isolated
//! trailing vertices are not representable; every parse error carries the
//! 1-based line number it occurred on.

use crate::error::{Error, Result};
use crate::graph::GeneralGraph;

/// Parse a whole edge-list document into a graph.
pub fn parse_edge_list(text: &str) -> Result<GeneralGraph> {
    let mut edges = Vec::new();
    let mut max_vertex = 0usize;
    let mut seen_any = false;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let mut tokens = content.split_whitespace();
        let (Some(a), Some(b), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(Error::EdgeList {
                line,
                problem: format!("expected exactly two vertex labels, got {content:?}"),
            });
        };
        let parse = |token: &str| {
            token.parse::<usize>().map_err(|_| Error::EdgeList {
                line,
                problem: format!("not a vertex label: {token:?}"),
            })
        };
        let (u, v) = (parse(a)?, parse(b)?);
        if u == v {
            return Err(Error::EdgeList {
                line,
                problem: format!("loop at vertex {u}"),
            });
        }
        max_vertex = max_vertex.max(u).max(v);
        seen_any = true;
        edges.push((u, v));
    }
    if !seen_any {
        return Err(Error::EdgeList {
            line: 0,
            problem: "no edges in input".to_string(),
        });
    }
    GeneralGraph::from_edges(max_vertex + 1, &edges).map_err(|e| match e {
        Error::DuplicateEdge(u, v) => Error::EdgeList {
            line: 0,
            problem: format!("duplicate edge {u} {v}"),
        },
        other => other,
    })
}

/// Render a graph as an edge-list document, one sorted `u v` pair per line.
pub fn emit_edge_list(g: &GeneralGraph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{k33, petersen};

    #[test]
    fn parses_simple_document() {
        let g = parse_edge_list("# triangle plus a tail\n0 1\n1 2\n\n2 0\n2 3\n").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 2), (2, 3)]);
    }

    #[test]
    fn round_trips_generated_graphs() {
        for g in [k33().into_general(), petersen().into_general()] {
            let back = parse_edge_list(&emit_edge_list(&g)).unwrap();
            assert_eq!(back.n(), g.n());
            assert_eq!(back.edges(), g.edges());
        }
    }

    #[test]
    fn reports_line_numbers_on_errors() {
        let err = parse_edge_list("0 1\n1 2 3\n").unwrap_err();
        assert!(matches!(err, Error::EdgeList { line: 2, .. }));

        let err = parse_edge_list("0 1\n\n# note\nx 2\n").unwrap_err();
        assert!(matches!(err, Error::EdgeList { line: 4, .. }));

        let err = parse_edge_list("0 1\n2 2\n").unwrap_err();
        assert!(matches!(err, Error::EdgeList { line: 2, .. }));

        let err = parse_edge_list("0 1\n0 1\n").unwrap_err();
        assert!(matches!(err, Error::EdgeList { .. }));

        let err = parse_edge_list("# nothing\n").unwrap_err();
        assert!(matches!(err, Error::EdgeList { line: 0, .. }));
    }

    #[test]
    fn never_panics_on_junk() {
        for text in ["", "hello", "1", "-1 2", "1 999999999999999999999999", "0 1 #x"] {
            let _ = parse_edge_list(text);
        }
    }
}
