//! Text edge lists: a header `n m`, then `m` pairs `u v` with 1-based ids.
//! Tokens are whitespace separated; lines starting with `#` are skipped.

use std::fmt::Write as _;

use frugal_core::{Graph, GraphError};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {reason}")]
    MalformedInput { line: usize, reason: String },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: vertex id {id} out of range 1..={n}")]
    IdOutOfRange { line: usize, id: usize, n: usize },
    #[error("duplicate edge {u} {v}")]
    DuplicateEdge { u: usize, v: usize },
}

fn malformed(line: usize, reason: impl Into<String>) -> ParseError {
    ParseError::MalformedInput { line, reason: reason.into() }
}

/// Numeric tokens with their 1-based line numbers.
fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim_start().starts_with('#'))
        .flat_map(|(i, l)| l.split_whitespace().map(move |t| (i + 1, t)))
}

fn number(line: usize, tok: &str, what: &str) -> Result<usize, ParseError> {
    tok.parse().map_err(|_| malformed(line, format!("expected {what}, found {tok:?}")))
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut it = tokens(text);
    let last_line = text.lines().count().max(1);
    let mut next = |what: &str| -> Result<(usize, usize), ParseError> {
        let (line, tok) = it.next().ok_or_else(|| malformed(last_line, format!("missing {what}")))?;
        Ok((line, number(line, tok, what)?))
    };
    let (_, n) = next("vertex count")?;
    let (_, m) = next("edge count")?;
    if n > u32::MAX as usize {
        return Err(malformed(1, "vertex count exceeds 2^32 - 1"));
    }
    let mut edges = Vec::with_capacity(m.min(1 << 24));
    for _ in 0..m {
        let (line, u) = next("edge endpoint")?;
        let (_, v) = next("edge endpoint")?;
        for id in [u, v] {
            if id == 0 || id > n {
                return Err(ParseError::IdOutOfRange { line, id, n });
            }
        }
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u });
        }
        edges.push((u - 1, v - 1));
    }
    if let Some((line, tok)) = it.next() {
        return Err(malformed(line, format!("unexpected token {tok:?} after {m} edges")));
    }
    Graph::from_edges(n, &edges).map_err(|e| match e {
        GraphError::DuplicateEdge { u, v } => ParseError::DuplicateEdge { u: u + 1, v: v + 1 },
        e => unreachable!("checked while parsing: {e}"),
    })
}

/// Inverse of [`parse_graph`]; edges keep their input order.
pub fn write_graph(g: &Graph) -> String {
    let mut s = String::with_capacity(16 * (g.m() + 1));
    let _ = writeln!(s, "{} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{} {}", u + 1, v + 1);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path() {
        let g = parse_graph("3 2\n1 2\n2 3").unwrap();
        assert_eq!((0..3).map(|v| g.degree(v)).collect::<Vec<_>>(), [1, 2, 1]);
        assert_eq!(g.neighbor(1, 0), 0);
    }

    #[test]
    fn comments_and_layout() {
        let g = parse_graph("# a triangle\n3 3 1 2\n# chord list\n2 3\n3 1\n").unwrap();
        assert_eq!(g.m(), 3);
        assert_eq!(write_graph(&g), "3 3\n1 2\n2 3\n3 1\n");
    }

    #[test]
    fn errors() {
        assert_eq!(parse_graph("2 1\n1 1"), Err(ParseError::SelfLoop { line: 2, vertex: 1 }));
        assert_eq!(parse_graph("2 1\n1 3"), Err(ParseError::IdOutOfRange { line: 2, id: 3, n: 2 }));
        assert_eq!(parse_graph("3 2\n1 2\n2 1"), Err(ParseError::DuplicateEdge { u: 1, v: 2 }));
        assert!(matches!(parse_graph("3 2\n1 2"), Err(ParseError::MalformedInput { .. })));
        assert!(matches!(parse_graph("3 1\n1 x"), Err(ParseError::MalformedInput { line: 2, .. })));
        assert!(matches!(parse_graph("3 1\n1 2 3"), Err(ParseError::MalformedInput { line: 2, .. })));
        assert!(matches!(parse_graph(""), Err(ParseError::MalformedInput { .. })));
    }

    #[test]
    fn k4_mates() {
        let g = parse_graph("4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n").unwrap();
        for v in 0..4 {
            assert_eq!(g.degree(v), 3);
            for i in 0..3 {
                let (u, j) = (g.neighbor(v, i), g.mate(v, i));
                assert_eq!((g.neighbor(u, j), g.mate(u, j)), (v, i));
            }
        }
    }
}
