use std::collections::BTreeMap;

use super::Path;
use crate::error::{Error, Result};
use crate::exactla::{FieldSpec, Scalar};

/// A finite linear combination of paths with nonzero coefficients. Terms are
/// kept sorted by the path order, so the tip is the last term.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeElement {
    field: FieldSpec,
    terms: BTreeMap<Path, Scalar>,
}

impl FreeElement {
    pub fn zero(field: FieldSpec) -> Self {
        FreeElement {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_path(field: FieldSpec, p: Path) -> Self {
        Self::monomial(field, p, field.one())
    }

    pub fn monomial(field: FieldSpec, p: Path, c: Scalar) -> Self {
        let mut f = Self::zero(field);
        f.add_term(p, c);
        f
    }

    pub fn from_terms(field: FieldSpec, terms: impl IntoIterator<Item = (Path, Scalar)>) -> Self {
        let mut f = Self::zero(field);
        for (p, c) in terms {
            f.add_term(p, c);
        }
        f
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing path order.
    pub fn terms(&self) -> std::collections::btree_map::Iter<'_, Path, Scalar> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Path> {
        self.terms.keys()
    }

    pub fn coefficient(&self, p: &Path) -> Scalar {
        self.terms.get(p).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn add_term(&mut self, p: Path, c: Scalar) {
        debug_assert!(self.field.owns(&c));
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// `Tip` and `CTip`.
    pub fn tip(&self) -> Result<(&Path, &Scalar)> {
        self.terms.iter().next_back().ok_or(Error::ZeroElement)
    }

    pub fn tip_path(&self) -> Option<&Path> {
        self.terms.keys().next_back()
    }

    pub fn pop_tip(&mut self) -> Option<(Path, Scalar)> {
        self.terms.pop_last()
    }

    pub fn is_monic(&self) -> bool {
        self.tip().is_ok_and(|(_, c)| c.is_one())
    }

    /// Scales so the tip coefficient is 1; zero stays zero.
    pub fn monic(&self) -> FreeElement {
        match self.tip() {
            Ok((_, c)) => self.scale(&c.inv().expect("nonzero tip coefficient")),
            Err(_) => self.clone(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> FreeElement {
        if c.is_zero() {
            return Self::zero(self.field);
        }
        FreeElement {
            field: self.field,
            terms: self.terms.iter().map(|(p, v)| (p.clone(), v * c)).collect(),
        }
    }

    pub fn neg(&self) -> FreeElement {
        self.scale(&-self.field.one())
    }

    pub fn add(&self, other: &FreeElement) -> FreeElement {
        let mut out = self.clone();
        out.add_assign_scaled(&self.field.one(), other);
        out
    }

    pub fn sub(&self, other: &FreeElement) -> FreeElement {
        let mut out = self.clone();
        out.add_assign_scaled(&-self.field.one(), other);
        out
    }

    /// `self += c * other`.
    pub fn add_assign_scaled(&mut self, c: &Scalar, other: &FreeElement) {
        for (p, v) in &other.terms {
            self.add_term(p.clone(), v * c);
        }
    }

    /// Written product `self * other`; non-composable path pairs vanish.
    pub fn multiply(&self, other: &FreeElement) -> FreeElement {
        let mut out = Self::zero(self.field);
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                if let Some(pq) = p.compose(q) {
                    out.add_term(pq, a * b);
                }
            }
        }
        out
    }

    /// Written product `u * self * v` for paths `u`, `v`.
    pub fn sandwich(&self, u: &Path, v: &Path) -> FreeElement {
        let mut out = Self::zero(self.field);
        for (p, a) in &self.terms {
            if let Some(pv) = p.compose(v) {
                if let Some(upv) = u.compose(&pv) {
                    out.add_term(upv, a.clone());
                }
            }
        }
        out
    }

    /// Whether every support path has the same length.
    pub fn is_homogeneous(&self) -> bool {
        let mut lens = self.terms.keys().map(Path::len);
        match lens.next() {
            None => true,
            Some(l) => lens.all(|m| m == l),
        }
    }
}
