//! Edge-list text format.
//!
//! ```text
//! # comment lines start with '#'
//! n m
//! u v        (m lines, 0 <= u < v < n)
//! ```

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

fn parse_err<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        line,
        msg: msg.into(),
    })
}

/// Non-empty, non-comment lines with their 1-based line numbers.
pub(crate) fn content_lines<'a>(text: &'a str, comment: &'a str) -> impl Iterator<Item = (usize, &'a str)> + 'a {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(move |(_, l)| !l.is_empty() && !l.starts_with(comment))
}

pub(crate) fn parse_numbers<const N: usize>(line: usize, text: &str) -> Result<[usize; N]> {
    let mut out = [0; N];
    let mut parts = text.split_whitespace();
    for slot in out.iter_mut() {
        let Some(tok) = parts.next() else {
            return parse_err(line, format!("expected {N} integers"));
        };
        *slot = match tok.parse() {
            Ok(x) => x,
            Err(_) => return parse_err(line, format!("'{tok}' is not a non-negative integer")),
        };
    }
    if parts.next().is_some() {
        return parse_err(line, format!("expected {N} integers"));
    }
    Ok(out)
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text, "#");
    let Some((hline, header)) = lines.next() else {
        return parse_err(0, "missing 'n m' header");
    };
    let [n, m] = parse_numbers::<2>(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut last_line = hline;
    for (line, l) in lines {
        last_line = line;
        let [u, v] = parse_numbers::<2>(line, l)?;
        if u == v {
            return parse_err(line, format!("loop at vertex {u}"));
        }
        if u > v {
            return parse_err(line, format!("edge '{u} {v}' must be written with u < v"));
        }
        if v >= n {
            return parse_err(line, format!("vertex {v} out of range for n = {n}"));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return parse_err(last_line, format!("header declares {m} edges, found {}", edges.len()));
    }
    let mut sorted = edges.clone();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return parse_err(0, format!("duplicate edge {} {}", w[0].0, w[0].1));
    }
    Graph::from_edges(n, edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn read_edge_list(path: impl AsRef<std::path::Path>) -> Result<Graph> {
    parse_edge_list(&std::fs::read_to_string(path)?)
}
