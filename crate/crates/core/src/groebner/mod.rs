//! Reduction, overlap relations, completion to reduced Gröbner bases, NonTip
//! enumeration, and chains of the Ufnarovskii graph.

mod nontip;
mod reduce;
mod ufgraph;

use std::collections::VecDeque;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::FieldSpec;
use crate::pathalg::{FreeElement, Path, Quiver};

pub use nontip::nontip_enumerate;
pub(crate) use reduce::Reducer;
pub use ufgraph::{uf_chains, Chain, UfGraph};

pub const DEFAULT_MAX_TIP_LENGTH: usize = 50;
pub const DEFAULT_MAX_BASIS: usize = 100_000;

/// Counters collected while completing a generating set.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CompletionStats {
    pub generators: usize,
    pub overlaps_checked: usize,
    /// Elements that entered the basis because an overlap relation had a
    /// nonzero normal form.
    pub added_by_overlaps: usize,
    /// Elements dropped or rewritten by inter-reduction.
    pub interreduced: usize,
}

/// A monic generating set under the length-lexicographic order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    reducer: Reducer,
    elements: Vec<FreeElement>,
    reduced: bool,
    stats: CompletionStats,
}

impl GroebnerBasis {
    fn from_reducer(reducer: Reducer, reduced: bool, stats: CompletionStats) -> Self {
        let mut elements = reducer.elements();
        elements.sort_by(|a, b| a.tip_path().cmp(&b.tip_path()));
        let mut ordered = Reducer::new(reducer.quiver.clone(), reducer.field);
        for e in &elements {
            ordered.insert(e.clone());
        }
        GroebnerBasis {
            reducer: ordered,
            elements,
            reduced,
            stats,
        }
    }

    /// Wraps elements that are already known to form a reduced Gröbner basis.
    /// Elements are made monic and sorted by tip; nothing is verified.
    pub fn from_reduced_unchecked(quiver: Arc<Quiver>, field: FieldSpec, elements: Vec<FreeElement>) -> Self {
        let mut r = Reducer::new(quiver, field);
        for e in elements {
            r.insert(e.monic());
        }
        Self::from_reducer(r, true, CompletionStats::default())
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.reducer.quiver
    }

    pub fn field(&self) -> FieldSpec {
        self.reducer.field
    }

    /// Elements sorted by tip.
    pub fn elements(&self) -> &[FreeElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn stats(&self) -> &CompletionStats {
        &self.stats
    }

    pub fn tips(&self) -> Vec<Path> {
        self.elements
            .iter()
            .map(|e| e.tip_path().expect("nonzero").clone())
            .collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.elements.iter().all(FreeElement::is_homogeneous)
    }

    pub fn normal_form(&self, f: &FreeElement) -> FreeElement {
        self.reducer.normal_form(f)
    }

    /// Normal form using a caller-chosen rewrite at every step; see
    /// [`Reducer::normal_form_by`].
    pub fn normal_form_by(&self, f: &FreeElement, choose: &mut dyn FnMut(usize) -> usize) -> FreeElement {
        self.reducer.normal_form_by(f, choose)
    }

    pub fn is_nontip(&self, p: &Path) -> bool {
        !self.reducer.is_reducible(p)
    }

    /// Index (into [`elements`](Self::elements)) of the element whose tip is a
    /// written prefix of `p`, if any.
    pub(crate) fn tip_written_prefix(&self, p: &Path) -> Option<usize> {
        self.reducer.find_written_prefix(p)
    }

    /// Whether every overlap relation of every pair reduces to zero.
    pub fn verify(&self) -> bool {
        self.elements.iter().all(|f| {
            self.elements.iter().all(|g| {
                overlap_pairs(f, g)
                    .into_iter()
                    .all(|(b, c)| self.normal_form(&overlap_relation(f, g, &b, &c)).is_zero())
            })
        })
    }

    pub fn format(&self) -> Vec<String> {
        self.elements
            .iter()
            .map(|e| self.reducer.quiver.format_element(e))
            .collect()
    }
}

/// All `(b, c)` with `Tip(f)*c = b*Tip(g)` where the tips overlap properly:
/// a nonempty written suffix of `Tip(f)` equals a written prefix of `Tip(g)`,
/// and neither tip contains the other.
pub fn overlap_pairs(f: &FreeElement, g: &FreeElement) -> Vec<(Path, Path)> {
    let (Some(tf), Some(tg)) = (f.tip_path(), g.tip_path()) else {
        return Vec::new();
    };
    let (fa, ga) = (tf.arrows(), tg.arrows());
    let (n, m) = (fa.len(), ga.len());
    let mut out = Vec::new();
    for k in 1..n.min(m) {
        if fa[..k] == ga[m - k..] {
            let b = Path::from_parts(tg.end(), tf.end(), &fa[k..]);
            let c = Path::from_parts(tg.start(), tf.start(), &ga[..m - k]);
            out.push((b, c));
        }
    }
    out
}

/// `CTip(f)^-1 * f * c - CTip(g)^-1 * b * g`.
pub fn overlap_relation(f: &FreeElement, g: &FreeElement, b: &Path, c: &Path) -> FreeElement {
    let fm = f.monic();
    let gm = g.monic();
    let field = f.field();
    let left = fm.multiply(&FreeElement::from_path(field, c.clone()));
    let right = FreeElement::from_path(field, b.clone()).multiply(&gm);
    left.sub(&right)
}

/// Completes `generators` to the reduced Gröbner basis of the ideal they
/// generate. Fails with [`Error::Incomplete`] (carrying the partial basis) if a
/// new element's tip is longer than `max_tip_length`.
pub fn complete(
    quiver: Arc<Quiver>,
    field: FieldSpec,
    generators: &[FreeElement],
    max_tip_length: usize,
) -> Result<GroebnerBasis> {
    for g in generators {
        if let Some(p) = g.support().find(|p| p.len() < 2) {
            return Err(Error::ShortRelation(format!(
                "{} (term {})",
                quiver.format_element(g),
                quiver.format_path(p)
            )));
        }
    }
    let mut c = Completion {
        reducer: Reducer::new(quiver, field),
        queue: VecDeque::new(),
        stats: CompletionStats {
            generators: generators.len(),
            ..Default::default()
        },
        max_tip_length,
    };
    for g in generators {
        let h = c.reducer.normal_form(g);
        if !h.is_zero() {
            if h.monic() != g.monic() {
                c.stats.interreduced += 1;
            }
            c.insert(h)?;
        }
    }
    loop {
        while let Some((i, j)) = c.queue.pop_front() {
            c.process_pair(i, j)?;
        }
        // Confirm saturation over the surviving elements before finishing.
        let ids = c.reducer.live_ids();
        for &i in &ids {
            for &j in &ids {
                c.queue.push_back((i, j));
            }
        }
        let before = c.stats.added_by_overlaps;
        while let Some((i, j)) = c.queue.pop_front() {
            c.process_pair(i, j)?;
        }
        if c.stats.added_by_overlaps == before {
            break;
        }
    }
    c.tail_reduce();
    Ok(GroebnerBasis::from_reducer(c.reducer, true, c.stats))
}

struct Completion {
    reducer: Reducer,
    queue: VecDeque<(usize, usize)>,
    stats: CompletionStats,
    max_tip_length: usize,
}

impl Completion {
    fn process_pair(&mut self, i: usize, j: usize) -> Result<()> {
        let (Some(f), Some(g)) = (self.reducer.get(i), self.reducer.get(j)) else {
            return Ok(());
        };
        let (f, g) = (f.clone(), g.clone());
        for (b, c) in overlap_pairs(&f, &g) {
            if self.reducer.get(i).is_none() || self.reducer.get(j).is_none() {
                break;
            }
            self.stats.overlaps_checked += 1;
            let h = self.reducer.normal_form(&overlap_relation(&f, &g, &b, &c));
            if !h.is_zero() {
                self.stats.added_by_overlaps += 1;
                self.insert(h)?;
            }
        }
        Ok(())
    }

    /// Inserts a nonzero element in normal form, keeping the set tip-reduced.
    fn insert(&mut self, h: FreeElement) -> Result<()> {
        let mut pending = vec![h];
        while let Some(h) = pending.pop() {
            let h = self.reducer.normal_form(&h);
            if h.is_zero() {
                continue;
            }
            let h = h.monic();
            let tip = h.tip_path().unwrap().clone();
            if tip.len() > self.max_tip_length {
                let tip_length = tip.len();
                let partial = self.reducer.clone();
                let mut r = partial;
                r.insert(h);
                return Err(Error::Incomplete {
                    tip_length,
                    max_tip_length: self.max_tip_length,
                    partial: Box::new(GroebnerBasis::from_reducer(r, false, self.stats.clone())),
                });
            }
            let divisible: Vec<usize> = self
                .reducer
                .live_ids()
                .into_iter()
                .filter(|&id| self.reducer.tip(id).unwrap().contains_subpath(&tip))
                .collect();
            for id in divisible {
                self.stats.interreduced += 1;
                pending.push(self.reducer.remove(id));
            }
            let new = self.reducer.insert(h);
            for id in self.reducer.live_ids() {
                self.queue.push_back((new, id));
                if id != new {
                    self.queue.push_back((id, new));
                }
            }
        }
        Ok(())
    }

    fn tail_reduce(&mut self) {
        for id in self.reducer.live_ids() {
            let g = self.reducer.get(id).unwrap().clone();
            let mut tail = g.clone();
            let (tip, c) = tail.pop_tip().unwrap();
            let reduced_tail = self.reducer.normal_form(&tail);
            if reduced_tail != tail {
                self.stats.interreduced += 1;
                self.reducer.remove(id);
                let mut h = reduced_tail;
                h.add_term(tip, c);
                self.reducer.insert(h);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pathalg::parse_element;

    fn loops(names: &[&str]) -> Arc<Quiver> {
        let mut q = Quiver::new();
        q.add_vertex("v").unwrap();
        for n in names {
            q.add_arrow(n, 0, 0).unwrap();
        }
        Arc::new(q)
    }

    fn els(q: &Quiver, f: FieldSpec, texts: &[&str]) -> Vec<FreeElement> {
        texts.iter().map(|t| parse_element(q, f, t).unwrap()).collect()
    }

    #[test]
    fn overlap_pairs_of_monomials() {
        let q = loops(&["y", "x"]);
        let f = FieldSpec::rationals();
        let e = els(&q, f, &["x^3", "x*y", "y^2", "y*x"]);
        let p = overlap_pairs(&e[0], &e[1]);
        assert_eq!(p.len(), 1);
        assert_eq!(q.format_path(&p[0].0), "x^2");
        assert_eq!(q.format_path(&p[0].1), "y");
        let p = overlap_pairs(&e[1], &e[2]);
        assert_eq!(p.len(), 1);
        assert_eq!((q.format_path(&p[0].0), q.format_path(&p[0].1)), ("x".into(), "y".into()));
        assert!(overlap_pairs(&e[2], &e[0]).is_empty());
    }

    #[test]
    fn self_overlap_of_square() {
        let q = loops(&["y", "x"]);
        let f = FieldSpec::rationals();
        let g = els(&q, f, &["x^2 - y^2"]);
        let p = overlap_pairs(&g[0], &g[0]);
        assert_eq!(p.len(), 1);
        let o = overlap_relation(&g[0], &g[0], &p[0].0, &p[0].1);
        assert_eq!(q.format_element(&o), "x*y^2 - y^2*x");
    }

    #[test]
    fn char_two_basis_is_already_complete() {
        let q = loops(&["y", "x"]);
        let f = FieldSpec::prime(2).unwrap();
        let gens = els(&q, f, &["x^3 + y*x^2", "x*y + y*x", "y^2"]);
        let gb = complete(q.clone(), f, &gens, DEFAULT_MAX_TIP_LENGTH).unwrap();
        assert_eq!(gb.stats().added_by_overlaps, 0);
        let tips: Vec<String> = gb.tips().iter().map(|t| q.format_path(t)).collect();
        assert_eq!(tips, vec!["y^2", "x*y", "x^3"]);
        let x3 = parse_element(&q, f, "x^3").unwrap();
        assert_eq!(q.format_element(&gb.normal_form(&x3)), "y*x^2");
        assert!(gb.verify());
    }

    #[test]
    fn commuting_square_zero() {
        let q = loops(&["y", "x"]);
        let f = FieldSpec::rationals();
        let gb = complete(q.clone(), f, &els(&q, f, &["x*y - y*x", "x^2", "y^2"]), 50).unwrap();
        let xy = parse_element(&q, f, "x*y").unwrap();
        assert_eq!(q.format_element(&gb.normal_form(&xy)), "y*x");
        assert!(gb.verify());
    }

    #[test]
    fn completion_adds_overlap_element() {
        let q = loops(&["y", "x"]);
        let f = FieldSpec::rationals();
        let gb = complete(q.clone(), f, &els(&q, f, &["x^2 - y^2"]), 50).unwrap();
        assert_eq!(gb.format(), vec!["x^2 - y^2", "x*y^2 - y^2*x"]);
        assert_eq!(gb.stats().added_by_overlaps, 1);
        assert!(gb.verify());
    }

    #[test]
    fn tip_length_cap_reports_partial_basis() {
        let q = loops(&["y", "x"]);
        let f = FieldSpec::rationals();
        match complete(q.clone(), f, &els(&q, f, &["x^2 - y^2"]), 2) {
            Err(Error::Incomplete { partial, tip_length: 3, .. }) => {
                assert!(partial.format().iter().any(|s| s == "x*y^2 - y^2*x"));
            }
            other => panic!("expected incomplete, got {other:?}"),
        }
    }

    #[test]
    fn rejects_short_relations() {
        let q = loops(&["x"]);
        let f = FieldSpec::rationals();
        assert!(matches!(complete(q.clone(), f, &els(&q, f, &["x"]), 50), Err(Error::ShortRelation(_))));
    }

    #[test]
    fn zero_ideal() {
        let q = loops(&["x"]);
        let gb = complete(q, FieldSpec::rationals(), &[], 50).unwrap();
        assert!(gb.is_empty());
    }
}
