//! PACE-style tree-decomposition files.
//!
//! ```text
//! c comment
//! s td <bags> <width+1> <n>
//! b <bag-id> <v> <v> ...      bag ids 1..=bags, vertex ids 0-based
//! <bag-id> <bag-id>            tree edges
//! ```
//!
//! Bag 1 is the root. Vertex ids are 0-based to match the edge-list format.

use std::fmt::Write as _;

use super::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::io::{content_lines, parse_numbers};

fn err<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, msg: msg.into() })
}

fn numbers(line: usize, toks: &[&str]) -> Result<Vec<usize>> {
    toks.iter()
        .map(|t| t.parse().or_else(|_| err(line, format!("'{t}' is not a non-negative integer"))))
        .collect()
}

/// Parses a decomposition of a graph on `n` vertices (checked against the
/// header). Tree shape and coverage are left to `validate_td`.
pub fn parse_pace(text: &str) -> Result<(usize, TreeDecomposition)> {
    let mut lines = content_lines(text, "c");
    let Some((hline, header)) = lines.next() else {
        return err(0, "missing 's td' header");
    };
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 5 || toks[0] != "s" || toks[1] != "td" {
        return err(hline, "header must be 's td <bags> <width+1> <n>'");
    }
    let [nb, size, n] = <[usize; 3]>::try_from(numbers(hline, &toks[2..])?).unwrap();
    let mut bags: Vec<Option<Vec<usize>>> = vec![None; nb];
    let mut edges = Vec::new();
    for (line, l) in lines {
        if let Some(rest) = l.strip_prefix("b ") {
            let nums = numbers(line, &rest.split_whitespace().collect::<Vec<_>>())?;
            let Some((&id, verts)) = nums.split_first() else {
                return err(line, "bag line without id");
            };
            if id == 0 || id > nb {
                return err(line, format!("bag id {id} outside 1..={nb}"));
            }
            if bags[id - 1].is_some() {
                return err(line, format!("bag {id} listed twice"));
            }
            if let Some(v) = verts.iter().find(|&&v| v >= n) {
                return err(line, format!("vertex {v} out of range for n = {n}"));
            }
            if verts.len() > size {
                return err(line, format!("bag {id} has {} vertices, header allows {size}", verts.len()));
            }
            bags[id - 1] = Some(verts.to_vec());
        } else {
            let [s, t] = parse_numbers::<2>(line, l)?;
            if s == 0 || t == 0 || s > nb || t > nb {
                return err(line, format!("tree edge {s} {t} references a missing bag"));
            }
            edges.push((s - 1, t - 1));
        }
    }
    let bags = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| Error::Parse { line: 0, msg: format!("bag {} missing", i + 1) }))
        .collect::<Result<Vec<_>>>()?;
    Ok((n, TreeDecomposition::new(bags, edges)))
}

pub fn read_pace(path: impl AsRef<std::path::Path>) -> Result<(usize, TreeDecomposition)> {
    parse_pace(&std::fs::read_to_string(path)?)
}

/// Writes the decomposition with its root as bag 1.
pub fn write_pace(td: &TreeDecomposition, n: usize) -> String {
    // Renumber so that the root becomes bag 1.
    let nb = td.len();
    let id = |s: usize| match s {
        s if s == td.root => 1,
        s if s < td.root => s + 2,
        s => s + 1,
    };
    let mut slots = vec![0; nb];
    (0..nb).for_each(|s| slots[id(s) - 1] = s);
    let mut out = String::new();
    writeln!(out, "s td {nb} {} {n}", td.width() + 1).unwrap();
    for (i, &s) in slots.iter().enumerate() {
        let vs: Vec<String> = td.bags[s].iter().map(|v| v.to_string()).collect();
        writeln!(out, "b {} {}", i + 1, vs.join(" ")).unwrap();
    }
    for &(s, t) in &td.edges {
        writeln!(out, "{} {}", id(s), id(t)).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::path;
    use crate::td::validate_td;

    #[test]
    fn round_trip_moves_root_first() {
        let td = TreeDecomposition::new(vec![vec![0, 1], vec![1, 2], vec![2, 3]], vec![(0, 1), (1, 2)]).with_root(1);
        let text = write_pace(&td, 4);
        assert!(text.starts_with("s td 3 2 4\nb 1 1 2\n"));
        let (n, back) = parse_pace(&text).unwrap();
        assert_eq!(n, 4);
        assert_eq!(back.root, 0);
        assert_eq!(back.bags[0], vec![1, 2]);
        assert!(validate_td(&path(4), &back).valid);
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_pace("").is_err());
        assert!(parse_pace("s tw 1 1 1\n").is_err());
        assert!(parse_pace("s td 1 1 2\nb 1 2\n").is_err());
        assert!(parse_pace("s td 2 1 2\nb 1 0\n").is_err());
        assert!(parse_pace("s td 1 1 2\nb 1 0 1\n").is_err());
        assert!(parse_pace("s td 2 2 2\nb 1 0 1\nb 2 1\n1 3\n").is_err());
        assert!(parse_pace("c hi\ns td 1 2 2\nb 1 0 1\n").is_ok());
    }
}
