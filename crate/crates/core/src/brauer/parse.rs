use std::collections::HashMap;

use super::{BrauerEdge, BrauerGraph, BrauerVertex, HalfEdge};
use crate::error::{Error, Result};
use crate::exactla::FieldSpec;

/// Reads a Brauer graph file:
///
/// ```text
/// field Q
/// vertex v mult 2
/// edge e v w
/// cyclic v: e l.1 l.2
/// ```
///
/// `field` is optional and defaults to `Q`. Loop half-edges carry a `.1` or
/// `.2` suffix; other half-edges must not.
pub fn parse_brauer(text: &str) -> Result<(FieldSpec, BrauerGraph)> {
    let mut field = FieldSpec::rationals();
    let mut vertices: Vec<BrauerVertex> = Vec::new();
    let mut vertex_ids: HashMap<String, usize> = HashMap::new();
    let mut edges: Vec<BrauerEdge> = Vec::new();
    let mut edge_ids: HashMap<String, usize> = HashMap::new();
    let mut cyclic_lines: Vec<(usize, usize, String)> = Vec::new();

    for (ln, raw) in text.lines().enumerate() {
        let line_no = ln + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let col = raw.find(line).unwrap_or(0) + 1;
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        let words: Vec<&str> = rest.split_whitespace().collect();
        match keyword {
            "field" => {
                field = rest.parse().map_err(|_| Error::parse(line_no, col, format!("unknown field `{rest}`")))?;
            }
            "vertex" => {
                let mult = match words.as_slice() {
                    [_] => 1,
                    [_, "mult", m] => m
                        .parse::<u32>()
                        .map_err(|_| Error::parse(line_no, col, format!("bad multiplicity `{m}`")))?,
                    _ => return Err(Error::parse(line_no, col, "expected `vertex <name> mult <m>`")),
                };
                let name = words[0].to_string();
                if vertex_ids.insert(name.clone(), vertices.len()).is_some() {
                    return Err(Error::parse(line_no, col, format!("duplicate vertex `{name}`")));
                }
                vertices.push(BrauerVertex { name, mult });
            }
            "edge" => {
                let [name, a, b] = words.as_slice() else {
                    return Err(Error::parse(line_no, col, "expected `edge <name> <vertex> <vertex>`"));
                };
                let end = |v: &str| {
                    vertex_ids
                        .get(v)
                        .copied()
                        .ok_or_else(|| Error::parse(line_no, col, format!("unknown vertex `{v}`")))
                };
                let ends = [end(a)?, end(b)?];
                if edge_ids.insert(name.to_string(), edges.len()).is_some() {
                    return Err(Error::parse(line_no, col, format!("duplicate edge `{name}`")));
                }
                edges.push(BrauerEdge {
                    name: name.to_string(),
                    ends,
                });
            }
            "cyclic" => {
                let Some((v, list)) = rest.split_once(':') else {
                    return Err(Error::parse(line_no, col, "expected `cyclic <vertex>: <half-edges>`"));
                };
                let v = v.trim();
                let id = *vertex_ids
                    .get(v)
                    .ok_or_else(|| Error::parse(line_no, col, format!("unknown vertex `{v}`")))?;
                cyclic_lines.push((line_no, id, list.to_string()));
            }
            other => return Err(Error::parse(line_no, col, format!("unknown declaration `{other}`"))),
        }
    }

    let mut cyclic: Vec<Vec<HalfEdge>> = vec![Vec::new(); vertices.len()];
    for (line_no, v, list) in cyclic_lines {
        if !cyclic[v].is_empty() {
            return Err(Error::parse(line_no, 1, format!("second cyclic order for `{}`", vertices[v].name)));
        }
        for item in list.split_whitespace() {
            let (edge, side) = half_edge(item, &edges, &edge_ids).map_err(|m| Error::parse(line_no, 1, m))?;
            let side = side.unwrap_or(if edges[edge].ends[0] == v { 0 } else { 1 });
            let h = HalfEdge { edge, side };
            if edges[edge].ends[side as usize] != v {
                return Err(Error::parse(
                    line_no,
                    1,
                    format!("half-edge `{item}` is not attached to `{}`", vertices[v].name),
                ));
            }
            cyclic[v].push(h);
        }
    }
    Ok((field, BrauerGraph::new(vertices, edges, cyclic)?))
}

/// Edge index and, for loops, the side named by the suffix.
fn half_edge(item: &str, edges: &[BrauerEdge], ids: &HashMap<String, usize>) -> std::result::Result<(usize, Option<u8>), String> {
    let lookup = |name: &str| ids.get(name).copied().ok_or_else(|| format!("unknown edge `{name}`"));
    if let Some(&edge) = ids.get(item) {
        if edges[edge].is_loop() {
            return Err(format!("loop half-edge `{item}` needs a `.1` or `.2` suffix"));
        }
        return Ok((edge, None));
    }
    let (name, suffix) = item
        .rsplit_once('.')
        .ok_or_else(|| format!("unknown edge `{item}`"))?;
    let edge = lookup(name)?;
    if !edges[edge].is_loop() {
        return Err(format!("half-edge suffix is only allowed on loops: `{item}`"));
    }
    match suffix {
        "1" => Ok((edge, Some(0))),
        "2" => Ok((edge, Some(1))),
        _ => Err(format!("bad half-edge suffix in `{item}`")),
    }
}
