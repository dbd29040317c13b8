//! The finite-dimensional algebra `A = kQ/I` with its NonTip basis.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::Result;
use crate::exactla::{FieldSpec, SparseVec};
use crate::groebner::{nontip_enumerate, GroebnerBasis};
use crate::pathalg::{FreeElement, Path, Quiver};

/// `A = kQ/I` given by a reduced Gröbner basis. Basis elements are NonTip
/// paths indexed in increasing order; every coordinate vector uses this
/// indexing. Normal forms of paths and products of basis elements are
/// memoized behind locks, so an algebra can be shared between threads.
#[derive(Debug)]
pub struct QuotientAlgebra {
    gb: GroebnerBasis,
    basis: Vec<Path>,
    index: HashMap<Path, usize>,
    path_memo: Mutex<HashMap<Path, SparseVec>>,
    product_memo: Mutex<HashMap<(usize, usize), SparseVec>>,
}

impl QuotientAlgebra {
    /// Enumerates the NonTip basis of a reduced Gröbner basis.
    pub fn build(gb: GroebnerBasis, max_basis: usize) -> Result<QuotientAlgebra> {
        assert!(gb.is_reduced(), "quotients need a reduced Gröbner basis");
        let basis = nontip_enumerate(&gb, max_basis)?;
        let index = basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        Ok(QuotientAlgebra {
            gb,
            basis,
            index,
            path_memo: Mutex::new(HashMap::new()),
            product_memo: Mutex::new(HashMap::new()),
        })
    }

    pub fn gb(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        self.gb.quiver()
    }

    pub fn field(&self) -> FieldSpec {
        self.gb.field()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn basis_path(&self, i: usize) -> &Path {
        &self.basis[i]
    }

    pub fn index_of(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Largest length of a basis path.
    pub fn max_length(&self) -> usize {
        self.basis.iter().map(Path::len).max().unwrap_or(0)
    }

    /// Indices of basis paths from `start` to `end`.
    pub fn parallel_to(&self, start: usize, end: usize) -> Vec<usize> {
        (0..self.basis.len())
            .filter(|&i| self.basis[i].start() == start && self.basis[i].end() == end)
            .collect()
    }

    /// Coordinates of the normal form of a single path.
    pub fn project_path(&self, p: &Path) -> SparseVec {
        if let Some(&i) = self.index.get(p) {
            return SparseVec::unit(i, self.field());
        }
        if let Some(v) = self.path_memo.lock().unwrap().get(p) {
            return v.clone();
        }
        let nf = self.gb.normal_form(&FreeElement::from_path(self.field(), p.clone()));
        let v = self.coordinates_of(&nf);
        self.path_memo.lock().unwrap().insert(p.clone(), v.clone());
        v
    }

    /// `pi(f)`: coordinates of the normal form of `f` over the basis.
    pub fn project_pi(&self, f: &FreeElement) -> SparseVec {
        let mut acc: Vec<(usize, crate::exactla::Scalar)> = Vec::new();
        for (p, c) in f.terms() {
            for (i, v) in self.project_path(p).iter() {
                acc.push((*i, v * c));
            }
        }
        SparseVec::from_pairs(acc)
    }

    fn coordinates_of(&self, nf: &FreeElement) -> SparseVec {
        SparseVec::from_pairs(nf.terms().map(|(p, c)| {
            let i = *self
                .index
                .get(p)
                .unwrap_or_else(|| panic!("normal form path {} is not a basis path", self.quiver().format_path(p)));
            (i, c.clone())
        }))
    }

    /// `pi(B[u] * B[v])` (written product); zero when the paths do not compose.
    pub fn algebra_multiply(&self, u: usize, v: usize) -> SparseVec {
        let Some(p) = self.basis[u].compose(&self.basis[v]) else {
            return SparseVec::new();
        };
        if let Some(r) = self.product_memo.lock().unwrap().get(&(u, v)) {
            return r.clone();
        }
        let r = self.project_path(&p);
        self.product_memo.lock().unwrap().insert((u, v), r.clone());
        r
    }

    /// Bilinear product of coordinate vectors.
    pub fn multiply_vectors(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut acc = Vec::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                let xy = x * y;
                for (k, z) in self.algebra_multiply(*i, *j).iter() {
                    acc.push((*k, z * &xy));
                }
            }
        }
        SparseVec::from_pairs(acc)
    }

    /// The element of `kQ` spanned by basis paths with the given coordinates.
    pub fn element(&self, v: &SparseVec) -> FreeElement {
        FreeElement::from_terms(self.field(), v.iter().map(|(i, c)| (self.basis[*i].clone(), c.clone())))
    }

    pub fn format_vector(&self, v: &SparseVec) -> String {
        self.quiver().format_element(&self.element(v))
    }
}

/// Builds the quotient of a reduced Gröbner basis, failing with
/// [`crate::Error::InfiniteDimensional`] past `max_basis` basis paths.
pub fn build_quotient(gb: GroebnerBasis, max_basis: usize) -> Result<QuotientAlgebra> {
    QuotientAlgebra::build(gb, max_basis)
}

/// Completes `generators` and builds the quotient in one step.
pub fn quotient_from_generators(
    quiver: Arc<Quiver>,
    field: FieldSpec,
    generators: &[FreeElement],
    max_tip_length: usize,
    max_basis: usize,
) -> Result<QuotientAlgebra> {
    let gb = crate::groebner::complete(quiver, field, generators, max_tip_length)?;
    QuotientAlgebra::build(gb, max_basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pathalg::parse_element;

    fn algebra(arrows: &[&str], rels: &[&str], f: FieldSpec) -> QuotientAlgebra {
        let mut q = Quiver::new();
        q.add_vertex("v").unwrap();
        for a in arrows {
            q.add_arrow(a, 0, 0).unwrap();
        }
        let q = Arc::new(q);
        let gens: Vec<_> = rels.iter().map(|r| parse_element(&q, f, r).unwrap()).collect();
        quotient_from_generators(q, f, &gens, 50, 1000).unwrap()
    }

    #[test]
    fn commutative_square_zero_products() {
        let f = FieldSpec::rationals();
        let a = algebra(&["y", "x"], &["x*y - y*x", "x^2", "y^2"], f);
        assert_eq!(a.dim(), 4);
        let q = a.quiver().clone();
        let x = a.index_of(&q.arrow_path(1)).unwrap();
        let y = a.index_of(&q.arrow_path(0)).unwrap();
        assert_eq!(a.format_vector(&a.algebra_multiply(x, y)), "y*x");
        let e = a.index_of(&Path::trivial(0)).unwrap();
        assert_eq!(a.algebra_multiply(e, x), SparseVec::unit(x, f));
    }

    #[test]
    fn projection_in_char_two() {
        let f = FieldSpec::prime(2).unwrap();
        let a = algebra(&["y", "x"], &["x^3 + y*x^2", "x*y + y*x", "y^2"], f);
        let x3 = parse_element(a.quiver(), f, "x^3").unwrap();
        assert_eq!(a.format_vector(&a.project_pi(&x3)), "y*x^2");
    }

    #[test]
    fn monomial_cube_projects_to_zero() {
        let f = FieldSpec::rationals();
        let a = algebra(&["x"], &["x^3"], f);
        let x3 = parse_element(a.quiver(), f, "x^3").unwrap();
        assert!(a.project_pi(&x3).is_zero());
    }

    #[test]
    fn associativity_on_basis() {
        let f = FieldSpec::rationals();
        let a = algebra(&["y", "x"], &["x^2 - y^2", "x*y", "y*x", "y^3"], f);
        let n = a.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let l = a.multiply_vectors(&a.algebra_multiply(i, j), &SparseVec::unit(k, f));
                    let r = a.multiply_vectors(&SparseVec::unit(i, f), &a.algebra_multiply(j, k));
                    assert_eq!(l, r);
                }
            }
        }
    }
}
