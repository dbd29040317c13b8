use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::FieldSpec;
use crate::pathalg::{parse_element_at, FreeElement, Quiver};

/// A quiver with relations read from the algebra text format:
///
/// ```text
/// field GF(3)
/// vertex v
/// arrow x: v -> v
/// rel x^3
/// ```
///
/// Declaration order of arrows is their precedence, first declared smallest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub field: FieldSpec,
    pub quiver: Arc<Quiver>,
    pub relations: Vec<FreeElement>,
}

fn at(e: Error, line: usize, column: usize) -> Error {
    match e {
        Error::Parse { message, line: 0, .. } => Error::Parse { line, column, message },
        other => other,
    }
}

pub fn parse_algebra(text: &str) -> Result<AlgebraFile> {
    let mut field: Option<FieldSpec> = None;
    let mut quiver = Quiver::new();
    // Relations are parsed once the quiver is complete.
    let mut rel_lines: Vec<(usize, usize, &str)> = Vec::new();

    for (ln, raw) in text.lines().enumerate() {
        let line_no = ln + 1;
        let line = raw.split('#').next().unwrap().trim_end();
        let trimmed = line.trim_start();
        if trimmed.is_empty() {
            continue;
        }
        let col = line.len() - trimmed.len() + 1;
        let (keyword, rest) = trimmed.split_once(char::is_whitespace).unwrap_or((trimmed, ""));
        let rest_col = col + keyword.len() + (trimmed.len() - keyword.len() - rest.trim_start().len());
        let rest = rest.trim();
        match keyword {
            "field" => {
                if field.is_some() {
                    return Err(Error::parse(line_no, col, "second field declaration"));
                }
                field = Some(
                    rest.parse()
                        .map_err(|_| Error::parse(line_no, rest_col, format!("unknown field `{rest}`")))?,
                );
            }
            "vertex" => {
                if rest.is_empty() {
                    return Err(Error::parse(line_no, rest_col, "expected vertex names"));
                }
                for name in rest.split_whitespace() {
                    let c = rest_col + rest.find(name).unwrap_or(0);
                    quiver.add_vertex(name).map_err(|e| at(e, line_no, c))?;
                }
            }
            "arrow" => {
                let (name, ends) = split_arrow(rest).ok_or_else(|| {
                    Error::parse(line_no, rest_col, "expected `arrow <name>: <source> -> <target>`")
                })?;
                let (s, t) = ends
                    .split_once("->")
                    .ok_or_else(|| Error::parse(line_no, rest_col, "expected `<source> -> <target>`"))?;
                let endpoint = |v: &str| {
                    let v = v.trim();
                    quiver.vertex_id(v).ok_or_else(|| {
                        Error::parse(line_no, rest_col + rest.find(v).unwrap_or(0), format!("unknown vertex `{v}`"))
                    })
                };
                let (s, t) = (endpoint(s)?, endpoint(t)?);
                quiver.add_arrow(name, s, t).map_err(|e| at(e, line_no, rest_col))?;
            }
            "rel" => {
                if rest.is_empty() {
                    return Err(Error::parse(line_no, rest_col, "empty relation"));
                }
                rel_lines.push((line_no, rest_col, rest));
            }
            other => return Err(Error::parse(line_no, col, format!("unknown declaration `{other}`"))),
        }
    }

    let field = field.unwrap_or_else(FieldSpec::rationals);
    let mut relations = Vec::new();
    for (line_no, col, text) in rel_lines {
        let f = parse_element_at(&quiver, field, text, line_no, col)?;
        if f.is_zero() {
            return Err(Error::parse(line_no, col, "relation is zero"));
        }
        if let Some(p) = f.support().find(|p| p.len() < 2) {
            return Err(Error::ShortRelation(format!(
                "line {line_no}: {} (term {})",
                quiver.format_element(&f),
                quiver.format_path(p)
            )));
        }
        relations.push(f);
    }
    Ok(AlgebraFile {
        field,
        quiver: Arc::new(quiver),
        relations,
    })
}

/// Splits `name: rest`, allowing `:` inside the name (`v:0: a -> b`).
fn split_arrow(rest: &str) -> Option<(&str, &str)> {
    let (first, tail) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
    if let Some(name) = first.strip_suffix(':') {
        return Some((name, tail));
    }
    let tail = tail.trim_start().strip_prefix(':')?;
    Some((first, tail))
}

impl AlgebraFile {
    pub fn new(field: FieldSpec, quiver: Arc<Quiver>, relations: Vec<FreeElement>) -> Self {
        AlgebraFile {
            field,
            quiver,
            relations,
        }
    }

    /// The normalized text form; [`parse_algebra`] reads it back unchanged.
    pub fn to_text(&self) -> String {
        let q = &self.quiver;
        let mut out = format!("field {}\n", self.field);
        if q.vertex_count() > 0 {
            out += &format!("vertex {}\n", q.vertex_names().join(" "));
        }
        for a in q.arrows() {
            out += &format!(
                "arrow {}: {} -> {}\n",
                a.name,
                q.vertex_name(a.source),
                q.vertex_name(a.target)
            );
        }
        for r in &self.relations {
            out += &format!("rel {}\n", q.format_element(r));
        }
        out
    }
}
