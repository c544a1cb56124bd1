//! Graphviz DOT rendering of graphs and splits.
//!
//! A solid black vertex is in X and an open white vertex is in Y; vertices
//! outside the split's domain stay unstyled.  Edges crossing between X and
//! Y are dashed so the cut stands out from the monochromatic edges.

use crate::graph::GeneralGraph;
use crate::split::{Side, Split};

/// Render a graph, optionally coloured by a split, as a DOT document.
/// Output is deterministic: vertices ascending, then edges in sorted order.
pub fn emit_dot(g: &GeneralGraph, split: Option<&Split>) -> String {
    let mut out = String::from("graph external_split {\n");
    out.push_str("  node [shape=circle, fontname=\"monospace\"];\n");
    for v in 0..g.n() {
        match split.and_then(|s| s.side(v)) {
            Some(Side::X) => out.push_str(&format!(
                "  {v} [style=filled, fillcolor=black, fontcolor=white];\n"
            )),
            Some(Side::Y) => out.push_str(&format!(
                "  {v} [style=filled, fillcolor=white];\n"
            )),
            None => out.push_str(&format!("  {v};\n")),
        }
    }
    for (u, v) in g.edges() {
        let crosses = split.is_some_and(|s| {
            matches!(
                (s.side(u), s.side(v)),
                (Some(a), Some(b)) if a != b
            )
        });
        if crosses {
            out.push_str(&format!("  {u} -- {v} [style=dashed];\n"));
        } else {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::k4;
    use crate::split::Split;

    #[test]
    fn renders_split_styles() {
        let g = k4();
        let s = Split::from_x_set(4, [0, 1]).unwrap();
        let dot = emit_dot(g.general(), Some(&s));
        assert!(dot.starts_with("graph external_split {"));
        assert!(dot.contains("0 [style=filled, fillcolor=black, fontcolor=white];"));
        assert!(dot.contains("2 [style=filled, fillcolor=white];"));
        // Mono edges plain, cut edges dashed.
        assert!(dot.contains("  0 -- 1;\n"));
        assert!(dot.contains("  0 -- 2 [style=dashed];\n"));
        assert!(dot.contains("  2 -- 3;\n"));
        assert!(dot.ends_with("}\n"));
    }

    #[test]
    fn renders_partial_and_absent_splits() {
        let g = k4();
        let dot = emit_dot(g.general(), None);
        assert!(dot.contains("  0;\n"));
        assert!(!dot.contains("dashed"));

        let mut partial = Split::new();
        partial.assign(0, crate::split::Side::X).unwrap();
        let dot = emit_dot(g.general(), Some(&partial));
        assert!(dot.contains("0 [style=filled, fillcolor=black"));
        assert!(dot.contains("  1;\n"));
        // An edge with an unassigned endpoint is not a cut edge.
        assert!(!dot.contains("dashed"));
    }

    #[test]
    fn is_deterministic() {
        let g = k4();
        let s = Split::from_x_set(4, [1, 3]).unwrap();
        assert_eq!(emit_dot(g.general(), Some(&s)), emit_dot(g.general(), Some(&s)));
    }
}
