//! Plain-text edge lists: a header line `order edge-count` followed by one
//! `u v` pair per line, 0-based labels. Blank lines and `#` comments are
//! ignored; errors carry 1-based line numbers.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    BadEdge { line: usize, source: GraphError },
    #[error("header declares {declared} edges but {found} were listed")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("missing header line")]
    MissingHeader,
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new(); // (u, v, line)
    for (index, raw) in text.lines().enumerate() {
        let line_no = index + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(EdgeListError::Syntax {
                line: line_no,
                message: format!("expected two integers, found {:?}", line),
            });
        }
        let parse = |s: &str| -> Result<usize, EdgeListError> {
            s.parse().map_err(|_| EdgeListError::Syntax {
                line: line_no,
                message: format!("{s:?} is not a nonnegative integer"),
            })
        };
        let (a, b) = (parse(fields[0])?, parse(fields[1])?);
        if header.is_none() {
            header = Some((a, b));
        } else {
            edges.push((a, b, line_no));
        }
    }
    let Some((order, declared)) = header else {
        return Err(EdgeListError::MissingHeader);
    };
    if edges.len() != declared {
        return Err(EdgeListError::EdgeCountMismatch {
            declared,
            found: edges.len(),
        });
    }
    let mut g = Graph::new(order, &[]).map_err(|source| EdgeListError::BadEdge {
        line: 1,
        source,
    })?;
    for (u, v, line) in edges {
        let e = crate::graph::Edge::new(u, v)
            .map_err(|source| EdgeListError::BadEdge { line, source })?;
        g = g
            .add_edge(e)
            .map_err(|source| EdgeListError::BadEdge { line, source })?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_graphs() {
        assert_eq!(parse_edge_list("2 1\n0 1").unwrap(), Graph::complete(2));
        assert_eq!(
            parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0").unwrap(),
            Graph::cycle(4)
        );
        assert_eq!(
            parse_edge_list("3 3\n0 1\n1 2\n0 2").unwrap(),
            Graph::complete(3)
        );
        assert_eq!(parse_edge_list("5 0").unwrap(), Graph::empty(5));
    }

    #[test]
    fn comments_and_blanks_are_ignored() {
        let text = "# a square\n\n4 4\n0 1 # first side\n1 2\n\n2 3\n3 0\n";
        assert_eq!(parse_edge_list(text).unwrap(), Graph::cycle(4));
    }

    #[test]
    fn errors_carry_line_numbers() {
        match parse_edge_list("2 1\n0 x") {
            Err(EdgeListError::Syntax { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected syntax error, got {other:?}"),
        }
        match parse_edge_list("2 1\n\n# pad\n0 5") {
            Err(EdgeListError::BadEdge { line, .. }) => assert_eq!(line, 4),
            other => panic!("expected edge error, got {other:?}"),
        }
        match parse_edge_list("2 2\n0 1") {
            Err(EdgeListError::EdgeCountMismatch { declared, found }) => {
                assert_eq!((declared, found), (2, 1))
            }
            other => panic!("expected count mismatch, got {other:?}"),
        }
        assert_eq!(parse_edge_list("# nothing\n"), Err(EdgeListError::MissingHeader));
        assert!(matches!(
            parse_edge_list("3 1\n1 1"),
            Err(EdgeListError::BadEdge { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n0 1"),
            Err(EdgeListError::BadEdge { line: 3, .. })
        ));
    }
}
