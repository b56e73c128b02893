//! Hexagon-set text files and the graph exchange JSON.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hexcore::{DirectionClass, HexCoord, LatticeVertex, MolGraph};

/// Parses one `q r` pair per line. Blank lines are skipped and `#` starts a
/// comment. Duplicate hexagons are an error.
pub fn parse_hex_set(text: &str) -> Result<BTreeSet<HexCoord>> {
    let mut out = BTreeSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Parse {
                line,
                message: format!("expected two integers, found {:?}", body),
            });
        }
        let parse = |s: &str| {
            s.parse::<i64>().map_err(|e| Error::Parse {
                line,
                message: format!("{s:?}: {e}"),
            })
        };
        let h = HexCoord::new(parse(fields[0])?, parse(fields[1])?);
        if !out.insert(h) {
            return Err(Error::Parse {
                line,
                message: format!("duplicate hexagon {h}"),
            });
        }
    }
    Ok(out)
}

pub fn format_hex_set(hexes: &BTreeSet<HexCoord>) -> String {
    hexes.iter().map(|h| format!("{} {}\n", h.q, h.r)).collect()
}

#[derive(Serialize, Deserialize)]
struct VertexRecord {
    id: usize,
    x: i64,
    y: i64,
}

#[derive(Serialize, Deserialize)]
struct GraphRecord {
    vertices: Vec<VertexRecord>,
    edges: Vec<(usize, usize, DirectionClass)>,
}

impl From<&MolGraph> for GraphRecord {
    fn from(g: &MolGraph) -> Self {
        GraphRecord {
            vertices: g
                .coords()
                .iter()
                .enumerate()
                .map(|(id, c)| VertexRecord { id, x: c.x, y: c.y })
                .collect(),
            edges: g.edges().iter().map(|e| (e.u, e.v, e.class)).collect(),
        }
    }
}

pub fn graph_to_value(g: &MolGraph) -> serde_json::Value {
    serde_json::to_value(GraphRecord::from(g)).expect("graph record serialises")
}

/// Compact single-line JSON.
pub fn graph_to_json(g: &MolGraph) -> String {
    serde_json::to_string(&GraphRecord::from(g)).expect("graph record serialises")
}

/// Reads the first JSON value in `text` as a graph. Trailing values (such
/// as the stats line written by `generate`) are ignored.
pub fn graph_from_json(text: &str) -> Result<MolGraph> {
    let mut stream = serde_json::Deserializer::from_str(text).into_iter::<GraphRecord>();
    let record = match stream.next() {
        Some(r) => r.map_err(|e| Error::Json(e.to_string()))?,
        None => return Err(Error::Json("no JSON value found".into())),
    };
    let mut vertices = record.vertices;
    vertices.sort_by_key(|v| v.id);
    if let Some((pos, v)) = vertices.iter().enumerate().find(|(i, v)| v.id != *i) {
        return Err(Error::Json(format!(
            "vertex ids must be dense from 0; found id {} at position {pos}",
            v.id
        )));
    }
    let coords = vertices
        .iter()
        .map(|v| LatticeVertex::new(v.x, v.y))
        .collect();
    MolGraph::from_parts(coords, record.edges)
}
