use std::cmp::Ordering;

use super::scalar::{FieldSpec, Scalar};

/// A coordinate vector stored as `(index, value)` pairs with strictly
/// increasing indices and no zero values.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(index: usize, field: FieldSpec) -> Self {
        SparseVec {
            entries: vec![(index, field.one())],
        }
    }

    /// Builds a vector from arbitrary `(index, value)` pairs, summing duplicates.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut raw: Vec<(usize, Scalar)> = pairs.into_iter().collect();
        raw.sort_by_key(|(i, _)| *i);
        let mut entries: Vec<(usize, Scalar)> = Vec::with_capacity(raw.len());
        for (i, v) in raw {
            match entries.last_mut() {
                Some((j, acc)) if *j == i => *acc = &*acc + &v,
                _ => entries.push((i, v)),
            }
        }
        entries.retain(|(_, v)| !v.is_zero());
        SparseVec { entries }
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        SparseVec {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize, field: FieldSpec) -> Vec<Scalar> {
        let mut out = vec![field.zero(); len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Scalar)> {
        self.entries.iter()
    }

    pub fn leading(&self) -> Option<&(usize, Scalar)> {
        self.entries.first()
    }

    pub fn get(&self, index: usize) -> Option<&Scalar> {
        self.entries
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn scale(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, -v)).collect(),
        }
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: &Scalar, other: &SparseVec) -> SparseVec {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some((j, w))) => {
                    out.push((*j, w * c));
                    b.next();
                }
                (Some((i, v)), Some((j, w))) => match i.cmp(j) {
                    Ordering::Less => {
                        out.push((*i, v.clone()));
                        a.next();
                    }
                    Ordering::Greater => {
                        out.push((*j, w * c));
                        b.next();
                    }
                    Ordering::Equal => {
                        let s = v + &(w * c);
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                },
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        match other.entries.first() {
            None => self.clone(),
            Some((_, v)) => self.add_scaled(&v.field().one(), other),
        }
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        match other.entries.first() {
            None => self.clone(),
            Some((_, v)) => self.add_scaled(&-v.field().one(), other),
        }
    }

    pub fn dot(&self, other: &SparseVec) -> Option<Scalar> {
        let mut acc: Option<Scalar> = None;
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        while let (Some((i, v)), Some((j, w))) = (a.peek(), b.peek()) {
            match i.cmp(j) {
                Ordering::Less => {
                    a.next();
                }
                Ordering::Greater => {
                    b.next();
                }
                Ordering::Equal => {
                    let t = v * w;
                    acc = Some(match acc {
                        None => t,
                        Some(s) => &s + &t,
                    });
                    a.next();
                    b.next();
                }
            }
        }
        acc
    }

    /// Keeps only the coordinates for which `keep` holds.
    pub fn filter(&self, keep: impl Fn(usize) -> bool) -> SparseVec {
        SparseVec {
            entries: self.entries.iter().filter(|(i, _)| keep(*i)).cloned().collect(),
        }
    }

    /// Renumbers coordinates through `f`, which must be strictly increasing on
    /// the support.
    pub fn reindex(&self, f: impl Fn(usize) -> usize) -> SparseVec {
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (f(*i), v.clone())).collect(),
        }
    }
}

impl FromIterator<(usize, Scalar)> for SparseVec {
    fn from_iter<T: IntoIterator<Item = (usize, Scalar)>>(iter: T) -> Self {
        SparseVec::from_pairs(iter)
    }
}
