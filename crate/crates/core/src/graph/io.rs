//! Plain-text formats.
//!
//! Edge lists start with a `graph` or `digraph` header line, followed by one
//! `u v` line per edge (`u u` is a loop, directed lines mean `u -> v`).
//! Labeled edge lists use `u v k`. Blank lines and lines starting with `#`
//! are skipped. A line holding a single token declares a vertex without
//! adding an edge. Vertices are numbered in order of first appearance.

use std::fmt::Write as _;

use super::{GroupTable, Host, HostKind, Labeling};
use crate::{Error, Result};

/// A parsed edge list, with its labeling when every edge line carries one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeList {
    pub host: Host,
    pub labeling: Option<Labeling>,
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_edge_list(text: &str) -> Result<EdgeList> {
    let mut lines = content_lines(text);
    let kind = match lines.next() {
        Some((_, "graph")) => HostKind::Graph,
        Some((_, "digraph")) => HostKind::Digraph,
        Some((no, other)) => {
            return Err(Error::malformed(format!(
                "line {no}: expected `graph` or `digraph`, found `{other}`"
            )))
        }
        None => return Err(Error::malformed("empty input")),
    };
    let mut names: Vec<String> = Vec::new();
    let index = |name: &str, names: &mut Vec<String>| match names.iter().position(|n| n == name) {
        Some(i) => i,
        None => {
            names.push(name.to_string());
            names.len() - 1
        }
    };
    let mut edges = Vec::new();
    let mut labels = Vec::new();
    let mut labeled: Option<bool> = None;
    for (no, line) in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            [v] => {
                index(v, &mut names);
            }
            [u, v, rest @ ..] if rest.len() <= 1 => {
                let has_label = rest.len() == 1;
                if *labeled.get_or_insert(has_label) != has_label {
                    return Err(Error::malformed(format!(
                        "line {no}: mixes labeled and unlabeled edges"
                    )));
                }
                let a = index(u, &mut names);
                let b = index(v, &mut names);
                edges.push((a, b));
                if let [k] = rest {
                    let k: u64 = k.parse().map_err(|_| {
                        Error::malformed(format!("line {no}: `{k}` is not a nonnegative integer"))
                    })?;
                    labels.push(k);
                }
            }
            _ => {
                return Err(Error::malformed(format!(
                    "line {no}: expected `u v` or `u v k`, found `{line}`"
                )))
            }
        }
    }
    let (host, order) = Host::with_insertion_order(kind, names, &edges)?;
    let labeling = if labeled == Some(true) {
        let values = order.iter().map(|&i| labels[i]).collect();
        Some(Labeling::new(&host, values)?)
    } else {
        None
    };
    Ok(EdgeList { host, labeling })
}

/// Writes a host (and optionally its labels) in the edge-list format so that
/// parsing the output reproduces the same vertex numbering.
pub fn write_edge_list(host: &Host, labeling: Option<&Labeling>) -> String {
    let names = host.vertices();
    let mut appearance = Vec::new();
    let mut seen = vec![false; host.vertex_count()];
    for &(u, v) in host.edges() {
        for w in [u, v] {
            if !seen[w] {
                seen[w] = true;
                appearance.push(w);
            }
        }
    }
    let isolated: Vec<usize> = (0..host.vertex_count()).filter(|&v| !seen[v]).collect();
    let in_order = appearance
        .iter()
        .chain(&isolated)
        .enumerate()
        .all(|(i, &v)| i == v);

    let mut out = String::new();
    writeln!(out, "{}", host.kind()).unwrap();
    if !in_order {
        for name in names {
            writeln!(out, "{name}").unwrap();
        }
    }
    for (e, &(u, v)) in host.edges().iter().enumerate() {
        match labeling {
            Some(l) => writeln!(out, "{} {} {}", names[u], names[v], l.values()[e]).unwrap(),
            None => writeln!(out, "{} {}", names[u], names[v]).unwrap(),
        }
    }
    if in_order {
        for &v in &isolated {
            writeln!(out, "{}", names[v]).unwrap();
        }
    }
    out
}

/// Whitespace-separated rows of nonnegative integers.
pub fn parse_integer_rows(text: &str) -> Result<Vec<Vec<u64>>> {
    content_lines(text)
        .map(|(no, line)| {
            line.split_whitespace()
                .map(|t| {
                    t.parse::<u64>().map_err(|_| {
                        Error::malformed(format!("line {no}: `{t}` is not a nonnegative integer"))
                    })
                })
                .collect()
        })
        .collect()
}

/// Parses an `n x n` table of 1-based indices, row `i` column `j` holding
/// the index of `g_i g_j`, and validates the group axioms.
pub fn parse_group_table(text: &str) -> Result<GroupTable> {
    let rows = parse_integer_rows(text)?;
    let n = rows.len();
    if n == 0 {
        return Err(Error::malformed("group table is empty"));
    }
    if let Some(i) = rows.iter().position(|r| r.len() != n) {
        return Err(Error::malformed(format!(
            "group table row {} has {} entries, expected {n}",
            i + 1,
            rows[i].len()
        )));
    }
    GroupTable::from_one_based(
        rows.into_iter()
            .map(|r| r.into_iter().map(|x| x as usize).collect())
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_graph() {
        let e = parse_edge_list("# triangle\ngraph\n\na b\nb c\nc a\n").unwrap();
        assert_eq!(e.host.kind(), HostKind::Graph);
        assert_eq!(e.host.vertices(), &["a", "b", "c"]);
        assert_eq!(e.host.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert!(e.labeling.is_none());
    }

    #[test]
    fn labels_follow_canonical_order() {
        let e = parse_edge_list("digraph\n2 1 5\n1 2 7\n1 1 3\n").unwrap();
        // vertices: "2" = 0, "1" = 1; edges sorted: (0,1) (1,0) (1,1)
        assert_eq!(e.host.edges(), &[(0, 1), (1, 0), (1, 1)]);
        assert_eq!(e.labeling.unwrap().values(), &[5, 7, 3]);
    }

    #[test]
    fn malformed_inputs() {
        for bad in [
            "",
            "graf\na b\n",
            "graph\na b c d\n",
            "graph\na b 1\nb c\n",
            "graph\na b -1\n",
        ] {
            assert!(
                matches!(parse_edge_list(bad), Err(Error::MalformedInput(_))),
                "{bad:?}"
            );
        }
    }

    #[test]
    fn write_then_parse() {
        for text in ["graph\nz\na b 2\nb b 1\n", "digraph\nb a 1\na a 4\nc\n"] {
            let e = parse_edge_list(text).unwrap();
            let written = write_edge_list(&e.host, e.labeling.as_ref());
            assert_eq!(parse_edge_list(&written).unwrap(), e, "{written}");
        }
        let plain = parse_edge_list("graph\na b\nb c\n").unwrap();
        assert_eq!(write_edge_list(&plain.host, None), "graph\na b\nb c\n");
    }

    #[test]
    fn group_table_text() {
        let g = parse_group_table("2 1\n1 2\n").unwrap();
        assert_eq!(g.order(), 2);
        assert!(parse_group_table("1 2\n2").is_err());
    }
}
