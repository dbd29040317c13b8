use std::collections::BTreeMap;

use super::scalar::{FieldSpec, Scalar};
use super::vector::SparseVec;
use crate::error::{Error, Result};

/// Incrementally maintained reduced row-echelon basis. Every stored row has
/// leading entry 1 and is zero in the pivot columns of all other rows.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: FieldSpec,
    ambient_dim: usize,
    rows: BTreeMap<usize, SparseVec>,
}

impl EchelonBasis {
    pub fn new(field: FieldSpec, ambient_dim: usize) -> Self {
        EchelonBasis {
            field,
            ambient_dim,
            rows: BTreeMap::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Eliminates all pivot columns from `v`.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let hits: Vec<(usize, Scalar)> = v
            .iter()
            .filter(|(j, _)| self.rows.contains_key(j))
            .cloned()
            .collect();
        let mut out = v.clone();
        for (j, c) in hits {
            out = out.add_scaled(&-&c, &self.rows[&j]);
        }
        out
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let r = self.reduce(&v);
        let Some((pivot, lead)) = r.leading().cloned() else {
            return false;
        };
        debug_assert!(pivot < self.ambient_dim);
        let r = r.scale(&lead.inv().expect("nonzero leading entry"));
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(pivot).cloned() {
                *row = row.add_scaled(&-&c, &r);
            }
        }
        self.rows.insert(pivot, r);
        true
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.keys().copied().collect()
    }

    pub fn rows(&self) -> Vec<SparseVec> {
        self.rows.values().cloned().collect()
    }

    pub fn into_subspace(self) -> Subspace {
        Subspace {
            field: self.field,
            ambient_dim: self.ambient_dim,
            basis: self.rows.into_values().collect(),
        }
    }
}

/// A subspace of `k^n` given by its reduced row-echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: FieldSpec,
    ambient_dim: usize,
    basis: Vec<SparseVec>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            field,
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            field,
            ambient_dim,
            basis: (0..ambient_dim).map(|i| SparseVec::unit(i, field)).collect(),
        }
    }

    pub fn span(field: FieldSpec, ambient_dim: usize, vectors: impl IntoIterator<Item = SparseVec>) -> Self {
        let mut e = EchelonBasis::new(field, ambient_dim);
        for v in vectors {
            e.insert(v);
        }
        e.into_subspace()
    }

    /// The coordinate subspace spanned by the listed unit vectors.
    pub fn coordinate(field: FieldSpec, ambient_dim: usize, coords: impl IntoIterator<Item = usize>) -> Self {
        Subspace::span(field, ambient_dim, coords.into_iter().map(|i| SparseVec::unit(i, field)))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|r| r.leading().expect("basis rows are nonzero").0)
            .collect()
    }

    pub fn echelon(&self) -> EchelonBasis {
        EchelonBasis {
            field: self.field,
            ambient_dim: self.ambient_dim,
            rows: self.pivots().into_iter().zip(self.basis.iter().cloned()).collect(),
        }
    }

    /// Eliminates the pivot columns of this subspace from `v`.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let pivots = self.pivots();
        let mut out = v.clone();
        for (k, p) in pivots.iter().enumerate() {
            if let Some(c) = v.get(*p) {
                out = out.add_scaled(&-c, &self.basis[k]);
            }
        }
        out
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(
            self.pivots()
                .into_iter()
                .map(|p| v.get(p).cloned().unwrap_or_else(|| self.field.zero()))
                .collect(),
        )
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut e = self.echelon();
        for v in &other.basis {
            e.insert(v.clone());
        }
        e.into_subspace()
    }

    /// Intersection with the coordinate subspace spanned by `coords`.
    pub fn intersect_coordinates(&self, coords: &[usize]) -> Subspace {
        let mut allowed = vec![false; self.ambient_dim];
        for &c in coords {
            allowed[c] = true;
        }
        // Find combinations of basis vectors that vanish off `coords`.
        let outside: Vec<SparseVec> = self.basis.iter().map(|v| v.filter(|i| !allowed[i])).collect();
        let mut combos: Vec<SparseVec> = Vec::new();
        // Gaussian elimination on [outside | identity] tracks which combinations vanish.
        let mut pivot_rows: BTreeMap<usize, (SparseVec, SparseVec)> = BTreeMap::new();
        for (k, row) in outside.into_iter().enumerate() {
            let mut r = row;
            let mut track = SparseVec::unit(k, self.field);
            while let Some((p, c)) = r.leading().cloned() {
                match pivot_rows.get(&p) {
                    Some((pr, pt)) => {
                        let f = -&c;
                        r = r.add_scaled(&f, pr);
                        track = track.add_scaled(&f, pt);
                    }
                    None => {
                        let inv = c.inv().expect("nonzero");
                        pivot_rows.insert(p, (r.scale(&inv), track.scale(&inv)));
                        break;
                    }
                }
            }
            if r.is_zero() {
                combos.push(track);
            }
        }
        let vectors = combos.into_iter().map(|t| {
            let mut acc = SparseVec::new();
            for (k, c) in t.iter() {
                acc = acc.add_scaled(c, &self.basis[*k]);
            }
            acc
        });
        Subspace::span(self.field, self.ambient_dim, vectors)
    }
}

/// Quotient `v / u` with representatives chosen among the echelon basis rows
/// of `v` whose pivots are not pivots of `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub dim: usize,
    pub representatives: Vec<SparseVec>,
}

pub fn subspace_quotient(v: &Subspace, u: &Subspace) -> Result<Quotient> {
    for (index, w) in u.basis().iter().enumerate() {
        if !v.contains(w) {
            return Err(Error::NotASubspace { index });
        }
    }
    let taken: std::collections::HashSet<usize> = u.pivots().into_iter().collect();
    let representatives: Vec<SparseVec> = v
        .basis()
        .iter()
        .filter(|r| !taken.contains(&r.leading().unwrap().0))
        .cloned()
        .collect();
    debug_assert_eq!(representatives.len() + u.dim(), v.dim());
    Ok(Quotient {
        dim: representatives.len(),
        representatives,
    })
}
