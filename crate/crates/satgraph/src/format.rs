//! Plain-text graph files.
//!
//! ```text
//! # comment lines start with '#'
//! 4
//! 0 1
//! 0 2
//! ```
//!
//! The first data line is the vertex count `n`; every later data line is an
//! edge `u v` with `0 <= u < v < n`. Blank lines are ignored. Repeated edges
//! are rejected. [`write_graph`] emits the count followed by the edges in
//! lexicographic order and nothing else.

use std::fmt;
use std::fs;
use std::path::Path;

use satgraph_core::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormatError {
    /// The file being read, when there is one.
    pub file: Option<String>,
    /// 1-based line number, 0 when the problem is not tied to a line.
    pub line: usize,
    pub message: String,
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(file) = &self.file {
            write!(f, "{file}: ")?;
        }
        if self.line == 0 {
            f.write_str(&self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for FormatError {}

fn err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError { file: None, line, message: message.into() }
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let mut n = None;
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let Some(n) = n else {
            if tokens.len() != 1 {
                return Err(err(line_no, format!("expected the vertex count, found `{line}`")));
            }
            let count = tokens[0]
                .parse::<usize>()
                .map_err(|_| err(line_no, format!("invalid vertex count `{}`", tokens[0])))?;
            n = Some(count);
            continue;
        };
        if tokens.len() != 2 {
            return Err(err(line_no, format!("expected an edge `u v`, found `{line}`")));
        }
        let parse = |t: &str| t.parse::<usize>().map_err(|_| err(line_no, format!("invalid vertex `{t}`")));
        let (u, v) = (parse(tokens[0])?, parse(tokens[1])?);
        if u >= v {
            return Err(err(line_no, format!("edge `{u} {v}` must satisfy u < v")));
        }
        if v >= n {
            return Err(err(line_no, format!("vertex {v} out of range for n = {n}")));
        }
        if !seen.insert((u, v)) {
            return Err(err(line_no, format!("duplicate edge `{u} {v}`")));
        }
        edges.push((u, v));
    }
    let n = n.ok_or_else(|| err(0, "missing vertex count"))?;
    Graph::from_edges(n, &edges).map_err(|e| err(0, e.to_string()))
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Reads and parses a graph file; I/O failures are reported without a line.
pub fn read_graph_file(path: &Path) -> Result<Graph, FormatError> {
    let file = Some(path.display().to_string());
    let text = fs::read_to_string(path).map_err(|e| FormatError { file: file.clone(), ..err(0, e.to_string()) })?;
    parse_graph(&text).map_err(|e| FormatError { file, ..e })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let g = parse_graph("# a triangle\n3\n\n0 1\n# mid\n1 2\n0 2\n").unwrap();
        assert_eq!(g, Graph::complete(3));
        assert_eq!(write_graph(&g), "3\n0 1\n0 2\n1 2\n");
    }

    #[test]
    fn edgeless_and_crlf() {
        assert_eq!(parse_graph("5\r\n").unwrap(), Graph::empty(5));
        assert_eq!(write_graph(&Graph::empty(2)), "2\n");
    }

    #[test]
    fn rejects_malformed_lines() {
        assert_eq!(parse_graph("3\n0 1\n0 1\n").unwrap_err().line, 3);
        assert_eq!(parse_graph("3\n1 0\n").unwrap_err().line, 2);
        assert_eq!(parse_graph("3\n0 3\n").unwrap_err().line, 2);
        assert_eq!(parse_graph("3\n0 1 2\n").unwrap_err().line, 2);
        assert_eq!(parse_graph("x\n").unwrap_err().line, 1);
        assert_eq!(parse_graph("3 4\n").unwrap_err().line, 1);
        assert_eq!(parse_graph("# nothing\n").unwrap_err().line, 0);
        assert_eq!(parse_graph("3\n0 -1\n").unwrap_err().to_string(), "line 2: invalid vertex `-1`");
    }
}
