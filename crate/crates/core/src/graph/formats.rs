use std::fmt::Write;

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// `n m` on the first line, then one `u v` line per edge.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line, header) = lines.next().ok_or_else(|| Error::EdgeList {
        line: 1,
        reason: "missing `n m` header".into(),
    })?;
    let [n, m] = pair(line, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines.by_ref().take(m) {
        let [u, v] = pair(line, l)?;
        if u >= n || v >= n || u == v {
            return Err(Error::EdgeList {
                line,
                reason: format!("invalid edge {u} {v} for {n} vertices"),
            });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::EdgeList {
            line: text.lines().count(),
            reason: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::EdgeList {
            line,
            reason: "more edge lines than announced".into(),
        });
    }
    Graph::new(n, edges)
}

fn pair(line: usize, text: &str) -> Result<[usize; 2]> {
    let nums: Vec<usize> = text
        .split_whitespace()
        .map(str::parse)
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| Error::EdgeList {
            line,
            reason: format!("{e}"),
        })?;
    nums.try_into().map_err(|_| Error::EdgeList {
        line,
        reason: "expected two integers".into(),
    })
}

/// Undirected DOT. Vertices in `highlight` are drawn filled black.
pub fn to_dot(g: &Graph, highlight: &VertexSet) -> String {
    let mut out = String::from("graph G {\n");
    if let Some(name) = g.name() {
        writeln!(out, "  label=\"{}\";", name.replace('"', "'")).unwrap();
    }
    for v in g.vertices() {
        if highlight.contains(v) {
            writeln!(out, "  {v} [style=filled, fillcolor=black, fontcolor=white];").unwrap();
        } else {
            writeln!(out, "  {v};").unwrap();
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    #[test]
    fn edge_list_round_trip() {
        let g = generate(Family::Wheel(5)).unwrap();
        let text = to_edge_list(&g);
        assert!(text.starts_with("5 8\n"));
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(parse_edge_list(""), Err(Error::EdgeList { line: 1, .. })));
        assert!(matches!(parse_edge_list("3 1\n0 3\n"), Err(Error::EdgeList { line: 2, .. })));
        assert!(matches!(parse_edge_list("3 2\n0 1\n"), Err(Error::EdgeList { .. })));
        assert!(matches!(parse_edge_list("3 1\n0 1\n1 2\n"), Err(Error::EdgeList { line: 3, .. })));
        assert!(matches!(parse_edge_list("3 x\n"), Err(Error::EdgeList { line: 1, .. })));
    }

    #[test]
    fn dot_output() {
        let p2 = generate(Family::Path(2)).unwrap();
        let dot = to_dot(&p2, &VertexSet::from_vertices(2, [0]));
        let nodes: Vec<_> = dot.lines().filter(|l| !l.contains("--") && l.ends_with(';') && !l.contains("label")).collect();
        assert_eq!(nodes.len(), 2);
        assert_eq!(nodes.iter().filter(|l| l.contains("filled")).count(), 1);
        assert_eq!(dot.matches("--").count(), 1);

        let empty = Graph::new(0, []).unwrap();
        assert_eq!(to_dot(&empty, &VertexSet::empty(0)), "graph G {\n}\n");

        let c3 = generate(Family::Cycle(3)).unwrap();
        let dot = to_dot(&c3, &VertexSet::empty(3));
        for e in ["0 -- 1;", "0 -- 2;", "1 -- 2;"] {
            assert_eq!(dot.matches(e).count(), 1);
        }
        assert_eq!(dot.matches("--").count(), 3);
    }
}
