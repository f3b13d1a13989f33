//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! n 3
//! 1 1
//! 1 2
//! ```
//!
//! The header is `n <count>`. A bare `<count>` or `<count> <edges>` header is
//! also accepted on read; in the second form the edge count is checked.
//! The writer always emits `n <count>` followed by edges in canonical order.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_usize(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse::<usize>().map_err(|_| Error::Parse {
        line,
        message: format!("expected {what}, found {tok:?}"),
    })
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut graph: Option<Graph> = None;
    let mut declared_edges = None;
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match graph.as_mut() {
            None => {
                let (n, m) = match toks.as_slice() {
                    ["n", count] => (parse_usize(count, line_no, "vertex count")?, None),
                    [count] => (parse_usize(count, line_no, "vertex count")?, None),
                    [count, edges] => (
                        parse_usize(count, line_no, "vertex count")?,
                        Some(parse_usize(edges, line_no, "edge count")?),
                    ),
                    _ => {
                        return Err(Error::Parse {
                            line: line_no,
                            message: "expected header `n <count>`".into(),
                        })
                    }
                };
                graph = Some(Graph::new(n).map_err(|e| Error::Parse {
                    line: line_no,
                    message: e.to_string(),
                })?);
                declared_edges = m;
            }
            Some(g) => {
                let [i, j] = toks.as_slice() else {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("expected `i j`, found {line:?}"),
                    });
                };
                let i = parse_usize(i, line_no, "vertex index")?;
                let j = parse_usize(j, line_no, "vertex index")?;
                g.add_edge(i, j).map_err(|e| Error::Parse {
                    line: line_no,
                    message: e.to_string(),
                })?;
            }
        }
    }

    let g = graph.ok_or(Error::Parse {
        line: last_line.max(1),
        message: "missing header `n <count>`".into(),
    })?;
    if let Some(m) = declared_edges {
        if m != g.edge_count() {
            return Err(Error::Parse {
                line: last_line,
                message: format!("header declares {m} edges, found {}", g.edge_count()),
            });
        }
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", g.vertex_count()).unwrap();
    for e in g.edges() {
        writeln!(out, "{} {}", e.lo, e.hi).unwrap();
    }
    out
}

pub fn read_edge_list_file(path: impl AsRef<Path>) -> Result<Graph> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })?;
    parse_edge_list(&text)
}

pub fn write_edge_list_file(path: impl AsRef<Path>, g: &Graph) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, write_edge_list(g)).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_header_and_comments() {
        let g = parse_edge_list("# worked example\nn 2\n1 1\n\n2 1\n").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert!(g.has_loop(1));
        assert!(g.has_edge(1, 2));
        assert_eq!(write_edge_list(&g), "n 2\n1 1\n1 2\n");
    }

    #[test]
    fn bare_header_forms() {
        let g = parse_edge_list("2 0\n").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 0));
        let g = parse_edge_list("3\n1 2\n").unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(matches!(parse_edge_list("2 1\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn errors_name_the_line() {
        match parse_edge_list("n 2\n1 x\n") {
            Err(Error::Parse { line, message }) => {
                assert_eq!(line, 2);
                assert!(message.contains("\"x\""), "{message}");
            }
            other => panic!("unexpected {other:?}"),
        }
        match parse_edge_list("n 2\n1 2\n2 1\n") {
            Err(Error::Parse { line: 3, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        match parse_edge_list("n 2\n1 3\n") {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_edge_list("# nothing\n").is_err());
        assert!(matches!(
            parse_edge_list("n 0\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(parse_edge_list("n 2\n1 2 3\n").is_err());
    }
}
