//! Line-oriented file formats, DIMACS style.
//!
//! Graph files (`.cg`):
//! ```text
//! p cvs <n> <m> <k>
//! v <id> <color>          exactly n lines, ids 0..n-1 each once
//! e <u> <v>               exactly m lines, u != v
//! ```
//!
//! Interval model files (`.ivm`):
//! ```text
//! p ivm <n>
//! i <id> <a2> <b2>        doubled integer endpoints, a2 < b2
//! ```
//!
//! Layout files: one line of n space-separated vertex ids.
//!
//! Fields are separated by single spaces; `#`-prefixed comment lines may
//! appear anywhere. Parsers report the first offending line; serializers
//! emit canonical order (vertex lines by id, edge lines as sorted
//! `(min, max)` pairs), so parse-serialize round trips are identities.

use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, Layout};
use crate::interval::IntervalModel;

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_num<T: std::str::FromStr>(tok: &str, line: usize, what: &str) -> Result<T> {
    tok.parse().map_err(|_| err(line, format!("invalid {what}: {tok:?}")))
}

/// Content lines with their 1-based numbers, skipping comments. Lines are
/// taken verbatim apart from a trailing `\r`, so stray indentation or
/// doubled separators fail loudly instead of parsing as something else.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.strip_suffix('\r').unwrap_or(l)))
        .filter(|(_, l)| !l.starts_with('#') && !l.trim().is_empty())
}

fn fields(line: &str, lineno: usize, expected: usize) -> Result<Vec<&str>> {
    let toks: Vec<&str> = line.split(' ').collect();
    if toks.len() != expected || toks.iter().any(|t| t.is_empty()) {
        return Err(err(
            lineno,
            format!("malformed line (expected {expected} single-space-separated fields): {line:?}"),
        ));
    }
    Ok(toks)
}

pub fn parse_graph(text: &str) -> Result<ColoredGraph> {
    let mut lines = content_lines(text);

    let (n, m, k, mut last_line) = match lines.next() {
        None => return Err(err(1, "missing header line 'p cvs <n> <m> <k>'")),
        Some((lineno, line)) => {
            let f = fields(line, lineno, 5)?;
            if f[0] != "p" || f[1] != "cvs" {
                return Err(err(lineno, format!("expected 'p cvs' header, got {line:?}")));
            }
            let n: usize = parse_num(f[2], lineno, "vertex count")?;
            let m: usize = parse_num(f[3], lineno, "edge count")?;
            let k: u32 = parse_num(f[4], lineno, "palette size")?;
            if k == 0 {
                return Err(err(lineno, "palette size k must be at least 1"));
            }
            (n, m, k, lineno)
        }
    };

    let mut colors: Vec<Option<u32>> = vec![None; n];
    let mut edges: Vec<(u32, u32)> = Vec::with_capacity(m);
    let mut seen_edges = std::collections::BTreeSet::new();

    for (lineno, line) in lines {
        last_line = lineno;
        match line.as_bytes().first() {
            Some(b'v') => {
                let f = fields(line, lineno, 3)?;
                let id: u32 = parse_num(f[1], lineno, "vertex id")?;
                let color: u32 = parse_num(f[2], lineno, "color")?;
                if id as usize >= n {
                    return Err(err(lineno, format!("vertex id {id} out of range 0..{n}")));
                }
                if color == 0 || color > k {
                    return Err(err(lineno, format!("color {color} outside 1..={k}")));
                }
                if colors[id as usize].replace(color).is_some() {
                    return Err(err(lineno, format!("duplicate vertex line for id {id}")));
                }
            }
            Some(b'e') => {
                let f = fields(line, lineno, 3)?;
                let u: u32 = parse_num(f[1], lineno, "vertex id")?;
                let v: u32 = parse_num(f[2], lineno, "vertex id")?;
                if u == v {
                    return Err(err(lineno, format!("self-loop at vertex {u}")));
                }
                for w in [u, v] {
                    if w as usize >= n {
                        return Err(err(lineno, format!("vertex id {w} out of range 0..{n}")));
                    }
                }
                if !seen_edges.insert((u.min(v), u.max(v))) {
                    return Err(err(lineno, format!("duplicate edge ({u}, {v})")));
                }
                if edges.len() == m {
                    return Err(err(lineno, format!("more than the declared {m} edge lines")));
                }
                edges.push((u, v));
            }
            _ => return Err(err(lineno, format!("unrecognized record: {line:?}"))),
        }
    }

    if let Some(missing) = colors.iter().position(|c| c.is_none()) {
        return Err(err(
            last_line + 1,
            format!("missing vertex line for id {missing} (expected {n} 'v' lines)"),
        ));
    }
    if edges.len() != m {
        return Err(err(
            last_line + 1,
            format!("expected {m} edge lines, found {}", edges.len()),
        ));
    }

    let colors: Vec<u32> = colors.into_iter().map(|c| c.expect("checked above")).collect();
    ColoredGraph::new(n, k, colors, &edges).map_err(|e| match e {
        // Construction re-checks what the parser already validated; anything
        // surfacing here is a parser bug, but map it to a line-less message.
        Error::Parse { .. } => e,
        other => err(last_line, other.to_string()),
    })
}

pub fn serialize_graph(g: &ColoredGraph) -> String {
    let mut out = format!("p cvs {} {} {}\n", g.n(), g.edge_count(), g.k());
    for v in g.vertices() {
        out.push_str(&format!("v {} {}\n", v, g.color(v)));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}

pub fn parse_model(text: &str) -> Result<IntervalModel> {
    let mut lines = content_lines(text);

    let (n, mut last_line) = match lines.next() {
        None => return Err(err(1, "missing header line 'p ivm <n>'")),
        Some((lineno, line)) => {
            let f = fields(line, lineno, 3)?;
            if f[0] != "p" || f[1] != "ivm" {
                return Err(err(lineno, format!("expected 'p ivm' header, got {line:?}")));
            }
            (parse_num::<usize>(f[2], lineno, "vertex count")?, lineno)
        }
    };

    let mut intervals: Vec<Option<(i64, i64)>> = vec![None; n];
    let mut seen_lefts = std::collections::BTreeMap::new();

    for (lineno, line) in lines {
        last_line = lineno;
        if !line.starts_with('i') {
            return Err(err(lineno, format!("unrecognized record: {line:?}")));
        }
        let f = fields(line, lineno, 4)?;
        let id: u32 = parse_num(f[1], lineno, "vertex id")?;
        let a2: i64 = parse_num(f[2], lineno, "left endpoint")?;
        let b2: i64 = parse_num(f[3], lineno, "right endpoint")?;
        if id as usize >= n {
            return Err(err(lineno, format!("vertex id {id} out of range 0..{n}")));
        }
        if a2 >= b2 {
            return Err(err(
                lineno,
                format!("zero-length or reversed interval ({a2}, {b2}) for vertex {id}"),
            ));
        }
        if let Some(prev) = seen_lefts.insert(a2, id) {
            return Err(err(
                lineno,
                format!("duplicate left endpoint {a2} (vertices {prev} and {id})"),
            ));
        }
        if intervals[id as usize].replace((a2, b2)).is_some() {
            return Err(err(lineno, format!("duplicate interval line for id {id}")));
        }
    }

    if let Some(missing) = intervals.iter().position(|c| c.is_none()) {
        return Err(err(
            last_line + 1,
            format!("missing interval line for id {missing} (expected {n} 'i' lines)"),
        ));
    }
    let intervals = intervals.into_iter().map(|iv| iv.expect("checked above")).collect();
    IntervalModel::new(intervals).map_err(|e| err(last_line, e.to_string()))
}

pub fn serialize_model(m: &IntervalModel) -> String {
    let mut out = format!("p ivm {}\n", m.n());
    for (v, &(a2, b2)) in m.intervals().iter().enumerate() {
        out.push_str(&format!("i {v} {a2} {b2}\n"));
    }
    out
}

/// Parses a layout file: one line of space-separated vertex ids forming a
/// permutation of 0..n-1. An empty file is the empty layout.
pub fn parse_layout(text: &str) -> Result<Layout> {
    let mut lines = content_lines(text);
    let Some((lineno, line)) = lines.next() else {
        return Ok(Layout::empty());
    };
    if let Some((extra, _)) = lines.next() {
        return Err(err(extra, "layout files contain a single line"));
    }
    let mut order = Vec::new();
    for tok in line.split(' ') {
        if tok.is_empty() {
            return Err(err(lineno, "malformed layout line (doubled or trailing space)"));
        }
        order.push(parse_num::<u32>(tok, lineno, "vertex id")?);
    }
    Layout::new(order).map_err(|e| err(lineno, e.to_string()))
}

pub fn serialize_layout(l: &Layout) -> String {
    let mut out = l
        .order()
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    out.push('\n');
    out
}
