//! Text formats: the rotation format, graph6, versioned JSON documents and
//! DOT output.
//!
//! Rotation format, one vertex per line, `#` starts a comment:
//!
//! ```text
//! 0: (0,1) (2,2) (3,3)
//! 1: (0,0) (4,3) (1,2)
//! outer: 0 0
//! ```
//!
//! `v: (e,w) ...` lists the edges at `v` clockwise with their far ends.
//! `outer: e t` puts the outer face on the dart of edge `e` leaving `t`;
//! `outer: k` picks face `k` of [`PlaneGraph::faces`].

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::decompose::{ThreeDecomposition, TwoDecomposition};
use crate::embed::compute_embedding;
use crate::plane_graph::{Dart, EdgeId, GraphError, PlaneGraph, VertexId};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum IoError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("json: {0}")]
    Json(String),
    #[error("unsupported schema version {0}")]
    Schema(u32),
}

fn parse_err(line: usize, message: impl Into<String>) -> IoError {
    IoError::Parse { line, message: message.into() }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Format {
    Rot,
    Graph6,
}

/// Rotation text when any line has a colon, graph6 otherwise.
pub fn detect_format(text: &str) -> Format {
    if text.lines().any(|l| l.split('#').next().unwrap_or("").contains(':')) {
        Format::Rot
    } else {
        Format::Graph6
    }
}

pub fn parse_graph(text: &str, format: Option<Format>) -> Result<PlaneGraph, IoError> {
    match format.unwrap_or_else(|| detect_format(text)) {
        Format::Rot => parse_rot(text),
        Format::Graph6 => {
            let line = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .ok_or_else(|| parse_err(1, "empty input"))?;
            let (n, edges) = decode_graph6(line)?;
            Ok(compute_embedding(n, &edges)?)
        }
    }
}

enum Outer {
    Dart(Dart),
    Face(usize),
}

pub fn parse_rot(text: &str) -> Result<PlaneGraph, IoError> {
    let mut spec = Vec::new();
    let mut outer = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (head, rest) = line.split_once(':').ok_or_else(|| parse_err(line_no, "missing ':'"))?;
        let head = head.trim();
        if head == "outer" {
            let nums: Vec<u32> = rest
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| parse_err(line_no, format!("bad number {t:?}"))))
                .collect::<Result<_, _>>()?;
            outer = Some(match nums.as_slice() {
                [k] => Outer::Face(*k as usize),
                [e, t] => Outer::Dart(Dart { edge: EdgeId(*e), tail: VertexId(*t) }),
                _ => return Err(parse_err(line_no, "outer takes a face id or an edge and a tail")),
            });
            continue;
        }
        let v: u32 = head.parse().map_err(|_| parse_err(line_no, format!("bad vertex {head:?}")))?;
        let mut list = Vec::new();
        let mut rest = rest.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .and_then(|r| r.split_once(')'))
                .ok_or_else(|| parse_err(line_no, "expected (edge,neighbour)"))?;
            let (pair, tail) = body;
            let (e, w) = pair.split_once(',').ok_or_else(|| parse_err(line_no, "expected a comma"))?;
            let e: u32 = e.trim().parse().map_err(|_| parse_err(line_no, format!("bad edge {e:?}")))?;
            let w: u32 = w.trim().parse().map_err(|_| parse_err(line_no, format!("bad vertex {w:?}")))?;
            list.push((EdgeId(e), VertexId(w)));
            rest = tail.trim_start();
        }
        spec.push((VertexId(v), list));
    }
    if spec.is_empty() {
        return Err(parse_err(1, "no vertices"));
    }
    let g = PlaneGraph::build_from_rotation(&spec)?;
    Ok(match outer {
        None => g,
        Some(Outer::Dart(d)) => g.set_outer_dart(d)?.detached(),
        Some(Outer::Face(k)) => g.set_outer_face(k)?.detached(),
    })
}

pub fn emit_rot(g: &PlaneGraph) -> String {
    let mut out = String::new();
    for (v, list) in g.rotation_spec() {
        let _ = write!(out, "{v}:");
        for (e, w) in list {
            let _ = write!(out, " ({e},{w})");
        }
        out.push('\n');
    }
    if let Some(d) = g.outer_dart() {
        let _ = writeln!(out, "outer: {} {}", d.edge, d.tail);
    }
    out
}

/// Edges in graph6 bit order: column `j`, then row `i < j`.
pub fn decode_graph6(s: &str) -> Result<(usize, Vec<(usize, usize)>), IoError> {
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes: Vec<u8> = s.bytes().collect();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(parse_err(1, "graph6 bytes must lie in 63..=126"));
    }
    let (n, mut pos) = match bytes.as_slice() {
        [] => return Err(parse_err(1, "empty graph6 string")),
        [126, 126, ..] => return Err(parse_err(1, "graph6 with more than 258047 vertices")),
        [126, a, b, c, ..] => {
            let n = ((*a as usize - 63) << 12) | ((*b as usize - 63) << 6) | (*c as usize - 63);
            (n, 4)
        }
        [126, ..] => return Err(parse_err(1, "truncated graph6 size")),
        [a, ..] => (*a as usize - 63, 1),
    };
    let need = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if bytes.len() - pos != need {
        return Err(parse_err(1, format!("graph6 body has {} bytes, expected {need}", bytes.len() - pos)));
    }
    let mut edges = Vec::new();
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos] - 63;
            if byte >> (5 - bit) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
            if bit == 6 {
                bit = 0;
                pos += 1;
            }
        }
    }
    Ok((n, edges))
}

/// graph6 of the underlying simple graph; vertices are ranked by id.
pub fn encode_graph6(g: &PlaneGraph) -> String {
    let verts: Vec<VertexId> = g.vertices().collect();
    let n = verts.len();
    let rank = |v: VertexId| verts.binary_search(&v).unwrap();
    let mut adj = vec![vec![false; n]; n];
    for (_, [a, b]) in g.edges() {
        let (i, j) = (rank(a), rank(b));
        adj[i][j] = true;
        adj[j][i] = true;
    }
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push(126 as char);
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
    let (mut cur, mut bit) = (0u8, 0);
    for j in 1..n {
        for row in adj.iter().take(j) {
            cur = cur << 1 | row[j] as u8;
            bit += 1;
            if bit == 6 {
                out.push((cur + 63) as char);
                cur = 0;
                bit = 0;
            }
        }
    }
    if bit > 0 {
        out.push(((cur << (6 - bit)) + 63) as char);
    }
    out
}

/// Serializable rotation system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub rotation: Vec<(VertexId, Vec<(EdgeId, VertexId)>)>,
    pub outer: Option<Dart>,
}

impl GraphDoc {
    pub fn from_graph(g: &PlaneGraph) -> Self {
        GraphDoc { rotation: g.rotation_spec(), outer: g.outer_dart() }
    }

    pub fn to_graph(&self) -> Result<PlaneGraph, IoError> {
        let g = PlaneGraph::build_from_rotation(&self.rotation)?;
        Ok(match self.outer {
            Some(d) => g.set_outer_dart(d)?.detached(),
            None => g,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", content = "decomposition")]
pub enum AnyDecomposition {
    #[serde(rename = "2d")]
    Two(TwoDecomposition),
    #[serde(rename = "3d")]
    Three(ThreeDecomposition),
}

/// A graph with a decomposition, as written by `decompose` and read by
/// `verify`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    pub schema: u32,
    pub graph: GraphDoc,
    #[serde(flatten)]
    pub decomposition: AnyDecomposition,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prescribed: Option<Vec<EdgeId>>,
}

impl Document {
    pub fn new(g: &PlaneGraph, decomposition: AnyDecomposition) -> Self {
        Document { schema: SCHEMA, graph: GraphDoc::from_graph(g), decomposition, prescribed: None }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, IoError> {
        let doc: Document = serde_json::from_str(text).map_err(|e| IoError::Json(e.to_string()))?;
        if doc.schema != SCHEMA {
            return Err(IoError::Schema(doc.schema));
        }
        Ok(doc)
    }
}

/// Forest and tree edges bold, 2-regular edges dotted, matching edges thin.
pub fn emit_dot(g: &PlaneGraph, d: &AnyDecomposition) -> String {
    let style = |e: &EdgeId| -> &'static str {
        match d {
            AnyDecomposition::Two(t) if t.forest.contains(e) => "style=bold, penwidth=3",
            AnyDecomposition::Three(t) if t.tree.contains(e) => "style=bold, penwidth=3",
            AnyDecomposition::Three(t) if t.two_regular.contains(e) => "style=dotted",
            _ => "style=solid, penwidth=1",
        }
    };
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in g.vertices() {
        let _ = writeln!(out, "  {v};");
    }
    for (e, [a, b]) in g.edges() {
        let _ = writeln!(out, "  {a} -- {b} [label=\"e{e}\", {}];", style(&e));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn rot_round_trip() {
        for g in [generators::k4(), generators::cubesd4(), generators::bitriangle()] {
            let text = emit_rot(&g);
            let back = parse_rot(&text).unwrap();
            assert_eq!(back, g);
        }
        let c = generators::cycle(3).unwrap();
        let other = c.set_outer_face(1).unwrap();
        assert_eq!(parse_rot(&emit_rot(&other)).unwrap(), other);
    }

    #[test]
    fn rot_errors() {
        assert!(matches!(parse_rot("0: (0,1\n"), Err(IoError::Parse { line: 1, .. })));
        assert!(matches!(parse_rot("x: (0,1)\n"), Err(IoError::Parse { .. })));
        assert!(matches!(parse_rot("0: (0,1)\n1: (1,0)\n"), Err(IoError::Graph(_))));
        assert!(matches!(parse_rot("# nothing\n"), Err(IoError::Parse { .. })));
    }

    #[test]
    fn graph6_round_trip() {
        // K4 is "C~" in graph6.
        assert_eq!(encode_graph6(&generators::k4()), "C~");
        let (n, e) = decode_graph6("C~").unwrap();
        assert_eq!((n, e.len()), (4, 6));
        let cube = generators::cube();
        let s = encode_graph6(&cube);
        let g = parse_graph(&s, None).unwrap();
        assert_eq!(g.edge_count(), 12);
        assert_eq!(encode_graph6(&g), s);
        assert!(matches!(decode_graph6("C~~"), Err(IoError::Parse { .. })));
        assert_eq!(decode_graph6("@").unwrap(), (1, vec![]));
    }

    #[test]
    fn json_round_trip() {
        let g = generators::k4();
        let d = ThreeDecomposition::default();
        let doc = Document::new(&g, AnyDecomposition::Three(d));
        let text = doc.to_json();
        assert!(text.contains("\"schema\": 1"));
        assert!(text.contains("\"mode\": \"3d\""));
        let back = Document::from_json(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.graph.to_graph().unwrap(), g);
        let bad = text.replace("\"schema\": 1", "\"schema\": 9");
        assert_eq!(Document::from_json(&bad), Err(IoError::Schema(9)));
    }

    #[test]
    fn dot_styles() {
        let c4 = generators::cycle(4).unwrap();
        let d = TwoDecomposition {
            forest: [0, 1, 2].map(EdgeId).into(),
            matching: [3].map(EdgeId).into(),
        };
        let dot = emit_dot(&c4, &AnyDecomposition::Two(d));
        assert_eq!(dot.matches("style=bold").count(), 3);
        assert_eq!(dot.matches("style=solid").count(), 1);
    }
}
