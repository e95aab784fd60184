//! Graphviz export.

use std::fmt::Write;

use powcut::{Group, PowerGraph, VertexSet};

/// DOT text for the power graph of `group` with `removed` deleted. Vertices
/// are labeled `i:o(g)`; output order is by vertex index, so it is stable.
pub fn export_dot(group: &Group, removed: Option<&VertexSet>) -> String {
    let graph = PowerGraph::build(group);
    let n = graph.vertex_count();
    let gone = |v: usize| removed.is_some_and(|r| r.contains(v));
    let mut out = String::new();
    writeln!(out, "graph \"{}\" {{", group.name()).unwrap();
    for v in (0..n).filter(|&v| !gone(v)) {
        writeln!(out, "  {v} [label=\"{v}:{}\"];", group.element_order(v)).unwrap();
    }
    for (a, b) in graph.edges() {
        if !gone(a) && !gone(b) {
            writeln!(out, "  {a} -- {b};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}
