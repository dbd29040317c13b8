//! Quivers, paths under the left length-lexicographic order, and the free path
//! algebra.
//!
//! Paths are stored in traversal order (first arrow applied first) and are
//! printed and parsed in written order, right to left: the written path `a*b`
//! traverses `b` and then `a`.

mod element;
mod parse;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub use element::FreeElement;
pub use parse::parse_element;
pub(crate) use parse::parse_element_at;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Name {
    Vertex(usize),
    Arrow(usize),
}

/// A finite quiver. Declaration order fixes the order on vertices and the
/// precedence of arrows (first declared is smallest).
#[derive(Clone, Debug, Default)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    names: HashMap<String, Name>,
}

impl PartialEq for Quiver {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.arrows == other.arrows
    }
}

impl Eq for Quiver {}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | ':' | '.' | '\''))
}

impl Quiver {
    pub fn new() -> Self {
        Self::default()
    }

    fn claim(&mut self, name: &str, what: Name) -> Result<()> {
        let numeric_vertex = matches!(what, Name::Vertex(_)) && !name.is_empty() && name.bytes().all(|b| b.is_ascii_digit());
        if !is_identifier(name) && !numeric_vertex {
            return Err(Error::parse(0, 0, format!("`{name}` is not a valid name")));
        }
        if self.names.contains_key(name) {
            return Err(Error::parse(0, 0, format!("duplicate name `{name}`")));
        }
        self.names.insert(name.to_string(), what);
        Ok(())
    }

    pub fn add_vertex(&mut self, name: &str) -> Result<usize> {
        let id = self.vertices.len();
        self.claim(name, Name::Vertex(id))?;
        self.vertices.push(name.to_string());
        Ok(id)
    }

    pub fn add_arrow(&mut self, name: &str, source: usize, target: usize) -> Result<usize> {
        if name.starts_with("e_") {
            return Err(Error::parse(0, 0, format!("arrow name `{name}` clashes with trivial-path syntax")));
        }
        if source >= self.vertices.len() || target >= self.vertices.len() {
            return Err(Error::parse(0, 0, format!("arrow `{name}` has an undeclared endpoint")));
        }
        let id = self.arrows.len();
        self.claim(name, Name::Arrow(id))?;
        self.arrows.push(Arrow {
            name: name.to_string(),
            source,
            target,
        });
        Ok(id)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_id(&self, name: &str) -> Option<usize> {
        match self.names.get(name) {
            Some(Name::Vertex(v)) => Some(*v),
            _ => None,
        }
    }

    pub fn arrow_id(&self, name: &str) -> Option<usize> {
        match self.names.get(name) {
            Some(Name::Arrow(a)) => Some(*a),
            _ => None,
        }
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].source == v)
    }

    pub fn arrows_into(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].target == v)
    }

    pub fn loops(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].source == self.arrows[a].target)
    }

    pub fn trivial(&self, v: usize) -> Path {
        assert!(v < self.vertices.len());
        Path::trivial(v)
    }

    pub fn arrow_path(&self, a: usize) -> Path {
        let arr = &self.arrows[a];
        Path {
            start: arr.source as u32,
            end: arr.target as u32,
            arrows: SmallVec::from_slice(&[a as u32]),
        }
    }

    /// Builds a path from arrows listed in traversal order.
    pub fn path(&self, traversal: &[usize]) -> Result<Path> {
        let Some(&first) = traversal.first() else {
            return Err(Error::NotComposable("empty arrow list".into()));
        };
        let mut p = self.arrow_path(first);
        for &a in &traversal[1..] {
            p = p
                .then_arrow(a, self)
                .ok_or_else(|| Error::NotComposable(format!("{} after {}", self.arrows[a].name, self.format_path(&p))))?;
        }
        Ok(p)
    }

    /// Builds a path from arrows listed in written order (last applied first).
    pub fn path_written(&self, written: &[usize]) -> Result<Path> {
        let traversal: Vec<usize> = written.iter().rev().copied().collect();
        self.path(&traversal)
    }

    /// Written form, with runs of one arrow collapsed into powers: `y*x^2`.
    pub fn format_path(&self, p: &Path) -> String {
        if p.is_trivial() {
            return format!("e_{}", self.vertices[p.start()]);
        }
        let mut pieces: Vec<String> = Vec::new();
        let written: Vec<u32> = p.arrows.iter().rev().copied().collect();
        let mut i = 0;
        while i < written.len() {
            let mut j = i;
            while j < written.len() && written[j] == written[i] {
                j += 1;
            }
            let name = &self.arrows[written[i] as usize].name;
            if j - i == 1 {
                pieces.push(name.clone());
            } else {
                pieces.push(format!("{name}^{}", j - i));
            }
            i = j;
        }
        pieces.join("*")
    }

    /// Written form with arrows juxtaposed by `*` and no powers.
    pub fn format_path_plain(&self, p: &Path) -> String {
        if p.is_trivial() {
            return format!("e_{}", self.vertices[p.start()]);
        }
        p.arrows
            .iter()
            .rev()
            .map(|&a| self.arrows[a as usize].name.as_str())
            .collect::<Vec<_>>()
            .join("*")
    }

    pub fn format_element(&self, f: &FreeElement) -> String {
        crate::exactla::join_terms(
            f.terms()
                .rev()
                .map(|(p, c)| crate::exactla::signed_term(c, &self.format_path(p))),
        )
    }

    /// All paths of length exactly `len`, in increasing order.
    pub fn paths_of_length(&self, len: usize) -> Vec<Path> {
        let mut level: Vec<Path> = (0..self.vertices.len()).map(Path::trivial).collect();
        for _ in 0..len {
            let mut next = Vec::new();
            for p in &level {
                for a in self.arrows_from(p.end()) {
                    next.push(p.then_arrow(a, self).unwrap());
                }
            }
            level = next;
        }
        level.sort();
        level
    }
}

/// A path in a quiver: a trivial path at a vertex or a composable arrow
/// sequence, stored in traversal order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    start: u32,
    end: u32,
    arrows: SmallVec<[u32; 8]>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path {
            start: v as u32,
            end: v as u32,
            arrows: SmallVec::new(),
        }
    }

    /// A nontrivial path from known endpoints and traversal arrows; the caller
    /// guarantees composability.
    pub(crate) fn from_parts(start: usize, end: usize, arrows: &[u32]) -> Path {
        debug_assert!(!arrows.is_empty());
        Path {
            start: start as u32,
            end: end as u32,
            arrows: SmallVec::from_slice(arrows),
        }
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Source vertex `s(p)`.
    pub fn start(&self) -> usize {
        self.start as usize
    }

    /// Target vertex `t(p)`.
    pub fn end(&self) -> usize {
        self.end as usize
    }

    /// Arrow indices in traversal order.
    pub fn arrows(&self) -> &[u32] {
        &self.arrows
    }

    /// Arrow indices in written order.
    pub fn written(&self) -> impl Iterator<Item = usize> + '_ {
        self.arrows.iter().rev().map(|&a| a as usize)
    }

    pub fn is_parallel(&self, other: &Path) -> bool {
        self.start == other.start && self.end == other.end
    }

    /// The written product `self * q`: traverse `q`, then `self`. `None` when
    /// `t(q) != s(self)`.
    pub fn compose(&self, q: &Path) -> Option<Path> {
        if q.end != self.start {
            return None;
        }
        let mut arrows = q.arrows.clone();
        arrows.extend_from_slice(&self.arrows);
        Some(Path {
            start: q.start,
            end: self.end,
            arrows,
        })
    }

    pub(crate) fn then_arrow(&self, a: usize, quiver: &Quiver) -> Option<Path> {
        let arr = quiver.arrow(a);
        if arr.source != self.end() {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.push(a as u32);
        Some(Path {
            start: self.start,
            end: arr.target as u32,
            arrows,
        })
    }

    /// Subpath covering traversal positions `from..to` (nonempty range).
    pub(crate) fn slice(&self, from: usize, to: usize, quiver: &Quiver) -> Path {
        if from == to {
            let v = if from == 0 {
                self.start()
            } else {
                quiver.arrow(self.arrows[from - 1] as usize).target
            };
            return Path::trivial(v);
        }
        Path {
            start: quiver.arrow(self.arrows[from] as usize).source as u32,
            end: quiver.arrow(self.arrows[to - 1] as usize).target as u32,
            arrows: SmallVec::from_slice(&self.arrows[from..to]),
        }
    }

    /// Traversal positions where `sub` occurs as a subpath, in decreasing order
    /// (that is, written left to right).
    pub fn occurrences(&self, sub: &Path) -> Vec<usize> {
        if sub.is_trivial() {
            return Vec::new();
        }
        let n = self.arrows.len();
        let m = sub.arrows.len();
        if m > n {
            return Vec::new();
        }
        (0..=n - m)
            .rev()
            .filter(|&i| self.arrows[i..i + m] == sub.arrows[..])
            .collect()
    }

    pub fn contains_subpath(&self, sub: &Path) -> bool {
        !sub.is_trivial() && self.arrows.windows(sub.arrows.len()).any(|w| w == &sub.arrows[..])
    }
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then_with(|| {
                if self.arrows.is_empty() {
                    self.start.cmp(&other.start)
                } else {
                    self.arrows.iter().rev().cmp(other.arrows.iter().rev())
                }
            })
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Explicit comparison entry point for the left length-lexicographic order.
pub fn llex_compare(p: &Path, q: &Path) -> Ordering {
    p.cmp(q)
}

/// Displays a path with its quiver.
pub struct PathDisplay<'a>(pub &'a Quiver, pub &'a Path);

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.format_path(self.1))
    }
}
