//! Text formats.
//!
//! Hypergraph files start with `p hg <n> <m>` followed by `m` lines, one
//! edge per line as space-separated vertex ids in `1..=n`. Digraph files
//! start with `p dg <n> <a>` followed by `a` lines `u v` for the arc
//! `u -> v`. Lines starting with `c` are comments anywhere in a file.
//!
//! Ids in files are always contiguous and 1-based. When an instance has
//! other ids (a kernel, say), the serializers renumber in increasing order
//! and record the original ids in `c vertex-map` and `c edge-map` comments.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::hypercore::{Digraph, Hypergraph};
use crate::kernel_below_n::BelowNInstance;
use crate::problem::Graph;
use crate::{VertexId, VertexSet};

fn is_comment(line: &str) -> bool {
    line == "c" || line.starts_with("c ") || line.starts_with("c\t")
}

/// Numbered lines with comments removed.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !is_comment(l))
}

fn parse_header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    kind: &str,
) -> Result<(usize, usize, usize)> {
    let (line, text) = lines
        .find(|(_, l)| !l.is_empty())
        .ok_or_else(|| Error::parse(1, "missing header"))?;
    let fields: Vec<&str> = text.split_whitespace().collect();
    match fields.as_slice() {
        ["p", k, a, b] if *k == kind => {
            let a = a
                .parse()
                .map_err(|_| Error::parse(line, format!("bad count `{a}`")))?;
            let b = b
                .parse()
                .map_err(|_| Error::parse(line, format!("bad count `{b}`")))?;
            Ok((line, a, b))
        }
        _ => Err(Error::parse(
            line,
            format!("expected `p {kind} <n> <count>`"),
        )),
    }
}

fn parse_id(line: usize, tok: &str, n: usize) -> Result<VertexId> {
    let id: u64 = tok
        .parse()
        .map_err(|_| Error::parse(line, format!("bad vertex id `{tok}`")))?;
    if id == 0 || id > n as u64 {
        return Err(Error::parse(
            line,
            format!("vertex id {id} outside 1..={n}"),
        ));
    }
    Ok(id as VertexId)
}

fn check_no_trailing<'a>(
    mut lines: impl Iterator<Item = (usize, &'a str)>,
    what: &str,
) -> Result<()> {
    match lines.find(|(_, l)| !l.is_empty()) {
        Some((line, _)) => Err(Error::parse(
            line,
            format!("more {what} than the header announces"),
        )),
        None => Ok(()),
    }
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut lines = content_lines(text);
    let (header_line, n, m) = parse_header(&mut lines, "hg")?;
    if n > VertexId::MAX as usize {
        return Err(Error::parse(header_line, "too many vertices"));
    }
    let mut h = Hypergraph::with_vertices(1..=n as VertexId);
    for i in 0..m {
        let Some((line, text)) = lines.next() else {
            return Err(Error::parse(
                header_line,
                format!("header announces {m} edges, found {i}"),
            ));
        };
        if text.is_empty() {
            return Err(Error::parse(line, "empty edge"));
        }
        let mut edge = VertexSet::new();
        for tok in text.split_whitespace() {
            let v = parse_id(line, tok, n)?;
            if !edge.insert(v) {
                return Err(Error::parse(line, format!("vertex {v} repeated in edge")));
            }
        }
        h.add_edge(edge).expect("ids were range checked");
    }
    check_no_trailing(lines, "edges")?;
    Ok(h)
}

/// Dense renumbering of `ids` in increasing order, or `None` when they are
/// already `1..=len`.
fn renumbering<I: Iterator<Item = u32> + Clone>(ids: I) -> Option<BTreeMap<u32, u32>> {
    if ids.clone().zip(1..).all(|(a, b)| a == b) {
        return None;
    }
    Some(ids.zip(1..).collect())
}

fn write_map(out: &mut String, name: &str, map: &BTreeMap<u32, u32>) {
    let _ = write!(out, "c {name}");
    for (orig, new) in map {
        let _ = write!(out, " {new}={orig}");
    }
    out.push('\n');
}

/// Writes `h` in the hypergraph format. An empty edge comes out as a blank
/// line, which the parser rejects.
pub fn serialize_hypergraph(h: &Hypergraph) -> String {
    let mut out = String::new();
    let vmap = renumbering(h.vertices().iter().copied());
    let emap = renumbering(h.edge_ids().collect::<Vec<_>>().into_iter());
    if let Some(map) = &vmap {
        write_map(&mut out, "vertex-map", map);
    }
    if let Some(map) = &emap {
        write_map(&mut out, "edge-map", map);
    }
    let _ = writeln!(out, "p hg {} {}", h.vertex_count(), h.edge_count());
    for (_, e) in h.edges() {
        let ids: Vec<String> = e
            .iter()
            .map(|v| vmap.as_ref().map_or(*v, |m| m[v]).to_string())
            .collect();
        let _ = writeln!(out, "{}", ids.join(" "));
    }
    out
}

/// A parsed digraph plus warnings about self-loops and repeated arcs, which
/// are dropped.
pub fn parse_digraph(text: &str) -> Result<(Digraph, Vec<String>)> {
    let mut lines = content_lines(text);
    let (header_line, n, a) = parse_header(&mut lines, "dg")?;
    if n > VertexId::MAX as usize {
        return Err(Error::parse(header_line, "too many vertices"));
    }
    let mut d = Digraph::with_vertices(1..=n as VertexId);
    let mut warnings = Vec::new();
    for i in 0..a {
        let Some((line, text)) = lines.next() else {
            return Err(Error::parse(
                header_line,
                format!("header announces {a} arcs, found {i}"),
            ));
        };
        let toks: Vec<&str> = text.split_whitespace().collect();
        let [u, v] = toks.as_slice() else {
            return Err(Error::parse(line, "expected an arc `u v`"));
        };
        let (u, v) = (parse_id(line, u, n)?, parse_id(line, v, n)?);
        if u == v {
            warnings.push(format!("line {line}: self-loop on {u} dropped"));
        } else if !d.add_arc(u, v).expect("ids were range checked") {
            warnings.push(format!("line {line}: repeated arc {u} {v} dropped"));
        }
    }
    check_no_trailing(lines, "arcs")?;
    Ok((d, warnings))
}

pub fn serialize_digraph(d: &Digraph) -> String {
    let mut out = String::new();
    let vmap = renumbering(d.vertices().iter().copied());
    if let Some(map) = &vmap {
        write_map(&mut out, "vertex-map", map);
    }
    let id = |v: VertexId| vmap.as_ref().map_or(v, |m| m[&v]);
    let _ = writeln!(out, "p dg {} {}", d.vertex_count(), d.arc_count());
    for (u, v) in d.arcs() {
        let _ = writeln!(out, "{} {}", id(u), id(v));
    }
    out
}

/// Parses either format, chosen by the header. Digraph warnings are
/// returned alongside.
pub fn parse_graph(text: &str) -> Result<(Graph, Vec<String>)> {
    let header = content_lines(text)
        .find(|(_, l)| !l.is_empty())
        .map(|(_, l)| l.split_whitespace().nth(1).unwrap_or(""));
    match header {
        Some("dg") => parse_digraph(text).map(|(d, w)| (Graph::Digraph(d), w)),
        _ => parse_hypergraph(text).map(|h| (Graph::Hypergraph(h), Vec::new())),
    }
}

pub fn serialize_graph(g: &Graph) -> String {
    match g {
        Graph::Hypergraph(h) => serialize_hypergraph(h),
        Graph::Digraph(d) => serialize_digraph(d),
    }
}

/// Reads a `c vertex-map` comment, if present, as a map from file id to
/// original id.
pub fn parse_vertex_map(text: &str) -> Result<Option<BTreeMap<VertexId, VertexId>>> {
    for (i, line) in text.lines().enumerate() {
        let Some(rest) = line.trim().strip_prefix("c vertex-map") else {
            continue;
        };
        let mut map = BTreeMap::new();
        for pair in rest.split_whitespace() {
            let parsed = pair
                .split_once('=')
                .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)));
            let Some((new, orig)) = parsed else {
                return Err(Error::parse(i + 1, format!("bad map entry `{pair}`")));
            };
            map.insert(new, orig);
        }
        return Ok(Some(map));
    }
    Ok(None)
}

/// The parameter recorded in a `c k <k>` comment, if any.
pub fn parse_k_comment(text: &str) -> Result<Option<i64>> {
    for (i, line) in text.lines().enumerate() {
        if let Some(rest) = line.trim().strip_prefix("c k ") {
            return rest
                .trim()
                .parse()
                .map(Some)
                .map_err(|_| Error::parse(i + 1, format!("bad parameter `{}`", rest.trim())));
        }
    }
    Ok(None)
}

/// A witness file: vertex ids separated by whitespace, `c` comment lines
/// allowed.
pub fn parse_witness(text: &str) -> Result<VertexSet> {
    let mut set = BTreeSet::new();
    for (line, l) in content_lines(text) {
        for tok in l.split_whitespace() {
            let v = tok
                .parse()
                .map_err(|_| Error::parse(line, format!("bad vertex id `{tok}`")))?;
            set.insert(v);
        }
    }
    Ok(set)
}

pub fn format_witness(w: &VertexSet) -> String {
    w.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// DIMACS CNF with one variable per vertex and the all-negative clause
/// `¬x_v ∨ ...` per edge. The hitting sets of size `n - k` are exactly the
/// complements of assignments with `k` true variables, so the formula has a
/// model with exactly `k` true variables iff the instance is a yes instance.
pub fn export_cnf(inst: &BelowNInstance) -> String {
    let h = &inst.hypergraph;
    let var: BTreeMap<VertexId, usize> = h.vertices().iter().copied().zip(1..).collect();
    let mut out = String::new();
    let _ = writeln!(out, "c k {}", inst.k);
    if var.iter().any(|(v, i)| *v as usize != *i) {
        let map: BTreeMap<u32, u32> = var.iter().map(|(v, i)| (*v, *i as u32)).collect();
        write_map(&mut out, "vertex-map", &map);
    }
    let _ = writeln!(out, "p cnf {} {}", h.vertex_count(), h.edge_count());
    for (_, e) in h.edges() {
        for v in e {
            let _ = write!(out, "-{} ", var[v]);
        }
        out.push_str("0\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_round_trip() {
        let text = "p hg 3 3\n1 2\n2 3\n1 3\n";
        let h = parse_hypergraph(text).unwrap();
        assert_eq!(h, Hypergraph::from_edges([[1, 2], [2, 3], [1, 3]], []));
        assert_eq!(serialize_hypergraph(&h), text);
    }

    #[test]
    fn hypergraph_errors() {
        assert_eq!(parse_hypergraph("p hg 2 0\n").unwrap().vertex_count(), 2);
        assert!(matches!(
            parse_hypergraph("p hg 2 1\n1 3\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(parse_hypergraph("p hg 2 1\n1 1\n").is_err());
        assert!(parse_hypergraph("p hg 2 2\n1 2\n\n").is_err());
        assert!(parse_hypergraph("p hg 2 1\n1 2\n2\n").is_err());
        assert!(parse_hypergraph("p hg x 1\n").is_err());
        assert!(parse_hypergraph("").is_err());
        let commented = "c hello\np hg 2 1\nc between\n1 2\n\n";
        assert_eq!(parse_hypergraph(commented).unwrap().edge_count(), 1);
    }

    #[test]
    fn renumbered_output() {
        let h = Hypergraph::from_edges([[5, 9]], [7])
            .delete_edge(1)
            .unwrap();
        let mut h2 = h.clone();
        h2.add_edge([7, 9]).unwrap();
        let text = serialize_hypergraph(&h2);
        assert_eq!(
            text,
            "c vertex-map 1=5 2=7 3=9\nc edge-map 1=2\np hg 3 1\n2 3\n"
        );
        let map = parse_vertex_map(&text).unwrap().unwrap();
        assert_eq!(map[&2], 7);
    }

    #[test]
    fn digraph_parsing() {
        let (d, w) = parse_digraph("p dg 3 3\n1 2\n2 3\n3 1\n").unwrap();
        assert_eq!(d, Digraph::from_arcs([(1, 2), (2, 3), (3, 1)], []));
        assert!(w.is_empty());
        let (d, w) = parse_digraph("p dg 1 1\n1 1\n").unwrap();
        assert_eq!((d.vertex_count(), d.arc_count(), w.len()), (1, 0, 1));
        assert!(parse_digraph("p dg 2 1\n1\n").is_err());
        assert!(parse_digraph("p dg 2 1\n1 2 3\n").is_err());
        let text = "p dg 2 1\n2 1\n";
        assert_eq!(serialize_digraph(&parse_digraph(text).unwrap().0), text);
    }

    #[test]
    fn graph_dispatch() {
        assert!(matches!(
            parse_graph("p dg 1 0").unwrap().0,
            Graph::Digraph(_)
        ));
        assert!(matches!(
            parse_graph("p hg 1 0").unwrap().0,
            Graph::Hypergraph(_)
        ));
    }

    #[test]
    fn cnf_output() {
        let tri = BelowNInstance::new(Hypergraph::from_edges([[1, 2], [2, 3], [1, 3]], []), 1);
        assert_eq!(
            export_cnf(&tri),
            "c k 1\np cnf 3 3\n-1 -2 0\n-2 -3 0\n-1 -3 0\n"
        );
        let edgeless = BelowNInstance::new(Hypergraph::with_vertices(1..=4), 2);
        assert_eq!(export_cnf(&edgeless), "c k 2\np cnf 4 0\n");
    }

    #[test]
    fn witness_files() {
        assert_eq!(
            parse_witness("c w\n3 1\n2\n").unwrap(),
            [1, 2, 3].into_iter().collect()
        );
        assert!(parse_witness("1 x").is_err());
        assert_eq!(parse_k_comment("c k -2\np hg 0 0\n").unwrap(), Some(-2));
        assert_eq!(parse_k_comment("p hg 0 0\n").unwrap(), None);
        assert_eq!(format_witness(&[4, 2].into_iter().collect()), "2 4");
    }
}
