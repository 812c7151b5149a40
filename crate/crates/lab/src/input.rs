//! Graph input: graph6 or a 0-indexed edge list.
//!
//! Edge-list files hold one `u v` pair per line. An optional `n N` line fixes
//! the order (otherwise it is one more than the largest endpoint); `#` starts
//! a comment. A file whose first meaningful line is a single token, or that
//! starts with `>>graph6<<`, is read as graph6.

use std::path::Path;

use turan_core::Graph;

use crate::graph6::{self, Graph6Error};

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
}

pub fn read_text(path: &Path) -> Result<String, InputError> {
    let io = |source| InputError::Io {
        path: path.display().to_string(),
        source,
    };
    if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(io)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

pub fn read_graph(path: &Path) -> Result<Graph, InputError> {
    parse_graph(&read_text(path)?)
}

pub fn parse_graph(text: &str) -> Result<Graph, InputError> {
    if text.starts_with(graph6::HEADER) {
        return Ok(graph6::decode(text)?);
    }
    let first = text
        .lines()
        .map(strip_comment)
        .find(|l| !l.trim().is_empty())
        .unwrap_or("");
    let mut tokens = first.split_whitespace();
    let is_order_line = tokens.next() == Some("n");
    if !is_order_line && first.split_whitespace().count() == 1 {
        // Leading whitespace shifts graph6 offsets; report them relative to the token.
        return Ok(graph6::decode(first.trim())?);
    }
    parse_edge_list(text)
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

pub fn parse_edge_list(text: &str) -> Result<Graph, InputError> {
    let mut order: Option<usize> = None;
    let mut edges = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let fail = |message: String| InputError::EdgeList { line, message };
        let tokens: Vec<&str> = strip_comment(raw).split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            ["n", value] => {
                if order.is_some() || !edges.is_empty() {
                    return Err(fail("the order line must come first".into()));
                }
                order = Some(
                    value
                        .parse()
                        .map_err(|_| fail(format!("bad order {value:?}")))?,
                );
            }
            [u, v] => {
                let parse = |s: &str| {
                    s.parse::<usize>()
                        .map_err(|_| fail(format!("bad vertex {s:?}")))
                };
                let (u, v) = (parse(u)?, parse(v)?);
                if u == v {
                    return Err(fail(format!("self-loop at {u}")));
                }
                edges.push((u, v));
            }
            _ => {
                return Err(fail(format!(
                    "expected `u v` or `n N`, got {:?}",
                    raw.trim()
                )))
            }
        }
    }
    let implied = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = order.unwrap_or(implied);
    if implied > n {
        return Err(InputError::EdgeList {
            line: 0,
            message: format!("vertex {} out of range for n = {n}", implied - 1),
        });
    }
    if n > crate::MAX_GRAPH_ORDER {
        return Err(InputError::EdgeList {
            line: 0,
            message: format!("order {n} is too large"),
        });
    }
    Ok(Graph::from_edges(n, &edges).expect("edges validated above"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_lists() {
        let g = parse_graph("# triangle\n0 1\n1 2\n\n2 0 # closing edge\n").unwrap();
        assert_eq!(g, Graph::complete(3));
        let g = parse_graph("n 5\n0 1\n").unwrap();
        assert_eq!((g.n(), g.edge_count()), (5, 1));
        assert_eq!(parse_graph("n 0\n").unwrap().n(), 0);
        assert_eq!(parse_graph("").unwrap().n(), 0);
        // Repeated edges collapse.
        assert_eq!(parse_graph("0 1\n1 0\n").unwrap().edge_count(), 1);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(
            parse_graph("0 1\n1 1\n"),
            Err(InputError::EdgeList { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("n 2\n0 5\n"),
            Err(InputError::EdgeList { .. })
        ));
        assert!(matches!(
            parse_graph("0 1\nn 4\n"),
            Err(InputError::EdgeList { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("0 1 2\n"),
            Err(InputError::EdgeList { line: 1, .. })
        ));
    }

    #[test]
    fn graph6_detection() {
        assert_eq!(parse_graph("Bw\n").unwrap(), Graph::complete(3));
        assert_eq!(parse_graph(">>graph6<<Bw").unwrap(), Graph::complete(3));
        assert_eq!(parse_graph("# comment\nBg\n").unwrap().edge_count(), 2);
        assert!(matches!(parse_graph("B!"), Err(InputError::Graph6(_))));
    }
}
