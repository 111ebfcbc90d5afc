//! Plain-text edge-list files: a header line `n m`, then `m` lines `u v`
//! with 0-based endpoints. Lines starting with `#` and blank lines are
//! ignored. Writing produces the canonical form (edges sorted, `u < v`).

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::gadgets::GadgetResult;
use crate::graph::Graph;

pub fn read_graph(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_graph(&text, path)
}

pub fn parse_graph(text: &str, path: &Path) -> Result<Graph> {
    let err = |line: usize, message: String| Error::Parse {
        path: path.to_path_buf(),
        line,
        message,
    };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or_else(|| err(1, "missing header 'n m'".into()))?;
    let (n, m) = parse_pair(header).ok_or_else(|| err(header_line, format!("bad header '{header}'")))?;

    let mut seen = HashSet::new();
    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line, content) in lines {
        last_line = line;
        let (u, v) = parse_pair(content).ok_or_else(|| err(line, format!("bad edge line '{content}'")))?;
        if u >= n || v >= n {
            return Err(err(line, format!("endpoint out of range for n={n} in '{content}'")));
        }
        if u == v {
            return Err(err(line, format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(err(line, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(err(
            last_line,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, edges)
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut parts = line.split_whitespace();
    let a = parts.next()?.parse().ok()?;
    let b = parts.next()?.parse().ok()?;
    parts.next().is_none().then_some((a, b))
}

pub fn format_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Role sidecar for a gadget file, one `key=value` per line.
pub fn format_roles(gadget: &GadgetResult) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "kind={}", gadget.kind);
    let _ = writeln!(out, "source_n={}", gadget.source_n);
    let _ = writeln!(out, "n={}", gadget.graph.n());
    let _ = writeln!(out, "m={}", gadget.graph.m());
    for (key, value) in &gadget.param_map {
        let _ = writeln!(out, "param.{key}={value}");
    }
    for (v, role) in gadget.roles.iter().enumerate() {
        let _ = writeln!(out, "role.{v}={role}");
    }
    out
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}
