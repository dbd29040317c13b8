use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use smallvec::SmallVec;

use crate::exactla::FieldSpec;
use crate::pathalg::{FreeElement, Path, Quiver};

type Word = SmallVec<[u32; 8]>;

/// A set of monic elements indexed by tip, able to rewrite paths that contain
/// a tip. Slots are stable so callers may refer to elements by id while
/// others are removed.
#[derive(Clone, Debug)]
pub(crate) struct Reducer {
    pub(crate) quiver: Arc<Quiver>,
    pub(crate) field: FieldSpec,
    slots: Vec<Option<Slot>>,
    by_tip: HashMap<Word, usize>,
    tip_lengths: BTreeMap<usize, usize>,
}

#[derive(Clone, Debug)]
struct Slot {
    element: FreeElement,
    tip: Path,
    tail: FreeElement,
}

/// One possible rewrite: replace the occurrence of element `id`'s tip at
/// traversal position `at` inside `path`.
#[derive(Clone, Debug)]
pub(crate) struct Rewrite {
    pub(crate) id: usize,
    pub(crate) at: usize,
}

impl Reducer {
    pub(crate) fn new(quiver: Arc<Quiver>, field: FieldSpec) -> Self {
        Reducer {
            quiver,
            field,
            slots: Vec::new(),
            by_tip: HashMap::new(),
            tip_lengths: BTreeMap::new(),
        }
    }

    /// Adds a monic element whose tip is not already present.
    pub(crate) fn insert(&mut self, element: FreeElement) -> usize {
        debug_assert!(element.is_monic());
        let tip = element.tip_path().expect("nonzero").clone();
        let mut tail = element.clone();
        tail.pop_tip();
        let id = self.slots.len();
        let word: Word = tip.arrows().iter().copied().collect();
        debug_assert!(!self.by_tip.contains_key(&word));
        self.by_tip.insert(word, id);
        *self.tip_lengths.entry(tip.len()).or_insert(0) += 1;
        self.slots.push(Some(Slot { element, tip, tail }));
        id
    }

    pub(crate) fn remove(&mut self, id: usize) -> FreeElement {
        let slot = self.slots[id].take().expect("live slot");
        let word: Word = slot.tip.arrows().iter().copied().collect();
        self.by_tip.remove(&word);
        let n = self.tip_lengths.get_mut(&slot.tip.len()).unwrap();
        *n -= 1;
        if *n == 0 {
            self.tip_lengths.remove(&slot.tip.len());
        }
        slot.element
    }

    pub(crate) fn get(&self, id: usize) -> Option<&FreeElement> {
        self.slots.get(id).and_then(|s| s.as_ref()).map(|s| &s.element)
    }

    pub(crate) fn tip(&self, id: usize) -> Option<&Path> {
        self.slots.get(id).and_then(|s| s.as_ref()).map(|s| &s.tip)
    }

    pub(crate) fn live_ids(&self) -> Vec<usize> {
        (0..self.slots.len()).filter(|&i| self.slots[i].is_some()).collect()
    }

    /// The first tip occurrence in written order (greatest traversal end).
    pub(crate) fn find(&self, p: &Path) -> Option<Rewrite> {
        let arrows = p.arrows();
        let n = arrows.len();
        for end in (1..=n).rev() {
            for (&m, _) in self.tip_lengths.range(..=end) {
                if let Some(&id) = self.by_tip.get(&arrows[end - m..end]) {
                    return Some(Rewrite { id, at: end - m });
                }
            }
        }
        None
    }

    /// Every tip occurrence in `p`.
    pub(crate) fn find_all(&self, p: &Path) -> Vec<Rewrite> {
        let arrows = p.arrows();
        let n = arrows.len();
        let mut out = Vec::new();
        for end in (1..=n).rev() {
            for (&m, _) in self.tip_lengths.range(..=end) {
                if let Some(&id) = self.by_tip.get(&arrows[end - m..end]) {
                    out.push(Rewrite { id, at: end - m });
                }
            }
        }
        out
    }

    /// Tip occurrence ending at the last traversal position, i.e. a tip that
    /// is a written prefix of `p`.
    pub(crate) fn find_written_prefix(&self, p: &Path) -> Option<usize> {
        let arrows = p.arrows();
        let n = arrows.len();
        self.tip_lengths
            .range(..=n)
            .find_map(|(&m, _)| self.by_tip.get(&arrows[n - m..]).copied())
    }

    pub(crate) fn is_reducible(&self, p: &Path) -> bool {
        self.find(p).is_some()
    }

    /// The lower-order replacement `u * (g - Tip g) * v` for a rewrite of `p`.
    pub(crate) fn replacement(&self, p: &Path, rw: &Rewrite) -> FreeElement {
        let slot = self.slots[rw.id].as_ref().expect("live slot");
        let m = slot.tip.len();
        let v = p.slice(0, rw.at, &self.quiver);
        let u = p.slice(rw.at + m, p.len(), &self.quiver);
        slot.tail.sandwich(&u, &v)
    }

    /// Normal form, rewriting the greatest reducible term at its written-first
    /// tip occurrence until no support path contains a tip.
    pub(crate) fn normal_form(&self, f: &FreeElement) -> FreeElement {
        let mut work = f.clone();
        let mut rem = FreeElement::zero(self.field);
        while let Some((p, c)) = work.pop_tip() {
            match self.find(&p) {
                Some(rw) => {
                    let r = self.replacement(&p, &rw);
                    work.add_assign_scaled(&-&c, &r);
                }
                None => rem.add_term(p, c),
            }
        }
        rem
    }

    /// Normal form where `choose(n)` picks which of the `n` available rewrites
    /// (over all reducible terms and all occurrences) to apply next.
    pub(crate) fn normal_form_by(&self, f: &FreeElement, choose: &mut dyn FnMut(usize) -> usize) -> FreeElement {
        let mut work = f.clone();
        loop {
            let options: Vec<(Path, Rewrite)> = work
                .support()
                .flat_map(|p| self.find_all(p).into_iter().map(move |rw| (p.clone(), rw)))
                .collect();
            if options.is_empty() {
                return work;
            }
            let (p, rw) = &options[choose(options.len()) % options.len()];
            let c = work.coefficient(p);
            let mut delta = FreeElement::monomial(self.field, p.clone(), -&c);
            delta.add_assign_scaled(&-&c, &self.replacement(p, rw));
            work = work.add(&delta);
        }
    }

    pub(crate) fn elements(&self) -> Vec<FreeElement> {
        self.slots.iter().flatten().map(|s| s.element.clone()).collect()
    }
}
