//! Line-oriented text formats.
//!
//! `wdg` (weighted digraph):
//!
//! ```text
//! wdg 1
//! n 3
//! arc 1 2 1/2
//! arc 2 1 8
//! ```
//!
//! Edge lists: `edge <u> <v>` lines with an optional `n <int>` line.
//! Vertices are numbered from 1 in both. Lines starting with `#` and blank
//! lines are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::WeightedDigraph;
use crate::rational::{parse_rational, to_canonical_string};

const WDG_MAGIC: &str = "wdg";
const WDG_VERSION: &str = "1";

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            None
        } else {
            Some((i + 1, t.split_whitespace().collect()))
        }
    })
}

fn parse_vertex(line: usize, tok: &str, n: usize) -> Result<usize> {
    let v: usize = tok
        .parse()
        .map_err(|_| Error::parse(line, format!("malformed vertex `{tok}`")))?;
    if v == 0 || v > n {
        return Err(Error::parse(line, format!("vertex {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

fn parse_count(line: usize, fields: &[&str]) -> Result<usize> {
    match fields {
        ["n", v] => v
            .parse()
            .map_err(|_| Error::parse(line, format!("malformed vertex count `{v}`"))),
        _ => Err(Error::parse(line, "expected `n <int>`")),
    }
}

pub fn parse_wdg(text: &str) -> Result<WeightedDigraph> {
    let mut lines = content_lines(text);
    match lines.next() {
        Some((_, f)) if f == [WDG_MAGIC, WDG_VERSION] => {}
        Some((line, _)) => return Err(Error::parse(line, "expected header `wdg 1`")),
        None => return Err(Error::parse(1, "empty input, expected header `wdg 1`")),
    }
    let (line, fields) = lines
        .next()
        .ok_or_else(|| Error::parse(2, "missing `n <int>` line"))?;
    let n = parse_count(line, &fields)?;
    let mut arcs = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for (line, fields) in lines {
        let [kw, u, v, w] = fields[..] else {
            return Err(Error::parse(line, "expected `arc <u> <v> <weight>`"));
        };
        if kw != "arc" {
            return Err(Error::parse(line, format!("unknown directive `{kw}`")));
        }
        let u = parse_vertex(line, u, n)?;
        let v = parse_vertex(line, v, n)?;
        let w = parse_rational(w).map_err(|m| Error::parse(line, m))?;
        if num_traits::Zero::is_zero(&w) {
            return Err(Error::parse(line, "zero weight"));
        }
        if !seen.insert((u, v)) {
            return Err(Error::parse(line, format!("duplicate arc ({}, {})", u + 1, v + 1)));
        }
        arcs.push(((u, v), w));
    }
    WeightedDigraph::new(n, arcs)
}

/// Canonical serialization: arcs in lexicographic order, one trailing newline.
pub fn write_wdg(d: &WeightedDigraph) -> String {
    let mut out = format!("{WDG_MAGIC} {WDG_VERSION}\nn {}\n", d.vertex_count());
    for ((u, v), w) in d.arcs() {
        let _ = writeln!(out, "arc {} {} {}", u + 1, v + 1, to_canonical_string(w));
    }
    out
}

/// A simple undirected graph read from an edge list, 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

pub fn parse_edge_list(text: &str) -> Result<EdgeList> {
    let mut declared = None;
    let mut raw = Vec::new();
    for (line, fields) in content_lines(text) {
        match fields[..] {
            ["n", _] => {
                if declared.is_some() {
                    return Err(Error::parse(line, "duplicate `n` line"));
                }
                declared = Some(parse_count(line, &fields)?);
            }
            ["edge", u, v] => {
                let parse = |t: &str| {
                    t.parse::<usize>()
                        .ok()
                        .filter(|&x| x > 0)
                        .ok_or_else(|| Error::parse(line, format!("malformed vertex `{t}`")))
                };
                raw.push((line, parse(u)?, parse(v)?));
            }
            _ => return Err(Error::parse(line, "expected `edge <u> <v>` or `n <int>`")),
        }
    }
    let n = declared.unwrap_or_else(|| raw.iter().map(|&(_, u, v)| u.max(v)).max().unwrap_or(0));
    let mut seen = std::collections::BTreeSet::new();
    let mut edges = Vec::with_capacity(raw.len());
    for (line, u, v) in raw {
        if u > n || v > n {
            return Err(Error::parse(line, format!("vertex outside 1..={n}")));
        }
        if u == v {
            return Err(Error::parse(line, "loops not allowed"));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::parse(line, format!("duplicate edge {{{u}, {v}}}")));
        }
        edges.push((u - 1, v - 1));
    }
    Ok(EdgeList { n, edges })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use proptest::prelude::*;

    #[test]
    fn parses_and_canonicalizes() {
        let text = "# digon\nwdg 1\nn 2\n\narc 2 1 3\narc 1 2 4/2\n";
        let d = parse_wdg(text).unwrap();
        assert_eq!(d.weight(0, 1), Some(&int(2)));
        assert_eq!(write_wdg(&d), "wdg 1\nn 2\narc 1 2 2\narc 2 1 3\n");
    }

    #[test]
    fn parse_errors_name_the_line() {
        let err = parse_wdg("wdg 1\nn 2\narc 1 2 2/0\n").unwrap_err();
        assert_eq!(err, Error::parse(3, "zero denominator in `2/0`"));
        assert!(matches!(parse_wdg("wdg 2\nn 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_wdg("wdg 1\narc 1 2 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_wdg("wdg 1\nn 2\narc 1 3 1\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_wdg("wdg 1\nn 2\narc 1 2 0\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(
            parse_wdg("wdg 1\nn 2\narc 1 2 1\narc 1 2 1\n"),
            Err(Error::Parse { line: 4, .. })
        ));
        assert!(matches!(parse_wdg("wdg 1\nn 2\nedge 1 2\n"), Err(Error::Parse { line: 3, .. })));
    }

    #[test]
    fn edge_lists() {
        let g = parse_edge_list("edge 1 2\n# c\nedge 2 3\n").unwrap();
        assert_eq!(g, EdgeList { n: 3, edges: vec![(0, 1), (1, 2)] });
        let g = parse_edge_list("n 5\nedge 1 2\n").unwrap();
        assert_eq!(g.n, 5);
        assert!(matches!(parse_edge_list("edge 2 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("edge 1 2\nedge 2 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("n 2\nedge 1 3\n"), Err(Error::Parse { line: 2, .. })));
    }

    proptest! {
        #[test]
        fn serialization_round_trips_byte_identically(
            n in 1usize..6,
            arcs in proptest::collection::btree_map((0usize..6, 0usize..6), (-9i64..=9, 1i64..=9), 0..12),
        ) {
            let arcs: Vec<_> = arcs
                .into_iter()
                .filter(|&((u, v), (p, _))| u < n && v < n && p != 0)
                .map(|(a, (p, q))| (a, frac(p, q)))
                .collect();
            let d = WeightedDigraph::new(n, arcs).unwrap();
            let text = write_wdg(&d);
            let back = parse_wdg(&text).unwrap();
            prop_assert_eq!(&back, &d);
            prop_assert_eq!(write_wdg(&back), text);
        }
    }
}
