//! `HH^0` and `HH^1` straight from the reduced bar complex, as an
//! independent check on the parallel-paths computation.
//!
//! Cochains are written in coordinates: `C0` has a basis of pairs `(e, b)`
//! with `b` a cycle at `e`, `C1` a basis of pairs `(x, c)` with `x` a
//! nontrivial basis path and `c` parallel to it (the cochain sending `x` to `c`
//! and every other basis path to 0), and `C2` a basis of triples
//! `(x1, x2, b)` with `x1 x2` composable and `b` parallel to it.

use std::collections::HashMap;

use crate::exactla::{kernel_basis, rank, subspace_quotient, Matrix, Quotient, Scalar, SparseVec, Subspace};
use crate::quotient::QuotientAlgebra;

#[derive(Debug)]
pub struct BarSlice<'a> {
    algebra: &'a QuotientAlgebra,
    /// Indices of nontrivial basis paths.
    pub bplus: Vec<usize>,
    pub c0: Vec<(usize, usize)>,
    pub c1: Vec<(usize, usize)>,
    pub c2: Vec<(usize, usize, usize)>,
    c1_index: HashMap<(usize, usize), usize>,
    pub d0: Matrix,
    pub d1: Matrix,
}

impl<'a> BarSlice<'a> {
    pub fn build(a: &'a QuotientAlgebra) -> BarSlice<'a> {
        let field = a.field();
        let n = a.dim();
        let path = |i: usize| a.basis_path(i);
        let parallel = |s: usize, t: usize| -> Vec<usize> {
            (0..n).filter(|&b| path(b).start() == s && path(b).end() == t).collect()
        };
        let bplus: Vec<usize> = (0..n).filter(|&i| !path(i).is_trivial()).collect();

        let mut c0 = Vec::new();
        for e in 0..a.quiver().vertex_count() {
            for b in parallel(e, e) {
                c0.push((e, b));
            }
        }
        let mut c1 = Vec::new();
        for &x in &bplus {
            for c in parallel(path(x).start(), path(x).end()) {
                c1.push((x, c));
            }
        }
        let c1_index: HashMap<(usize, usize), usize> = c1.iter().copied().enumerate().map(|(i, p)| (p, i)).collect();
        let mut c2 = Vec::new();
        for &x1 in &bplus {
            for &x2 in &bplus {
                if path(x2).end() != path(x1).start() {
                    continue;
                }
                for b in parallel(path(x2).start(), path(x1).end()) {
                    c2.push((x1, x2, b));
                }
            }
        }

        // (d0 a)(x) = a x - x a
        let mut d0 = Matrix::zeros(field, c1.len(), c0.len());
        for (col, &(_, b)) in c0.iter().enumerate() {
            for &x in &bplus {
                let diff = a.algebra_multiply(b, x).sub(&a.algebra_multiply(x, b));
                for (c, v) in diff.iter() {
                    let row = c1_index[&(x, *c)];
                    d0.set(row, col, v.clone());
                }
            }
        }

        // (d1 f)(x1, x2) = x1 f(x2) - f(x1 x2) + f(x1) x2
        let mut d1 = Matrix::zeros(field, c2.len(), c1.len());
        for (row, &(x1, x2, b)) in c2.iter().enumerate() {
            let mut add = |col: usize, v: &Scalar| {
                let cur = d1.get(row, col);
                d1.set(row, col, &cur + v);
            };
            for (col, &(y, c)) in c1.iter().enumerate() {
                if y == x2 {
                    if let Some(v) = a.algebra_multiply(x1, c).get(b) {
                        add(col, v);
                    }
                }
                if y == x1 {
                    if let Some(v) = a.algebra_multiply(c, x2).get(b) {
                        add(col, v);
                    }
                }
            }
            for (z, lambda) in a.algebra_multiply(x1, x2).iter() {
                if path(*z).is_trivial() {
                    continue;
                }
                if let Some(&col) = c1_index.get(&(*z, b)) {
                    add(col, &-lambda);
                }
            }
        }

        BarSlice {
            algebra: a,
            bplus,
            c0,
            c1,
            c2,
            c1_index,
            d0,
            d1,
        }
    }

    pub fn is_complex(&self) -> bool {
        self.d1.mul(&self.d0).is_zero()
    }

    pub fn ker_d1(&self) -> Subspace {
        kernel_basis(&self.d1)
    }

    pub fn im_d0(&self) -> Subspace {
        Subspace::span(self.algebra.field(), self.c1.len(), self.d0.columns())
    }

    pub fn hh1(&self) -> Quotient {
        subspace_quotient(&self.ker_d1(), &self.im_d0()).expect("d1 d0 = 0")
    }

    /// The cochain `f` evaluated on basis path `x`, in basis coordinates.
    fn evaluate(&self, f: &SparseVec, x: usize) -> SparseVec {
        SparseVec::from_pairs(
            f.iter()
                .filter(|(i, _)| self.c1[*i].0 == x)
                .map(|(i, v)| (self.c1[*i].1, v.clone())),
        )
    }

    /// `f` applied to `p_A(v)`: the trivial-path components of `v` are dropped.
    fn apply_to_radical(&self, f: &SparseVec, v: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::new();
        for (y, c) in v.iter() {
            if self.algebra.basis_path(*y).is_trivial() {
                continue;
            }
            acc = acc.add_scaled(c, &self.evaluate(f, *y));
        }
        acc
    }

    /// `f(p_A(x1 x2)) = x1 f(x2) + f(x1) x2` on every composable pair, checked
    /// by direct evaluation rather than through `d1`.
    pub fn is_derivation(&self, f: &SparseVec) -> bool {
        let a = self.algebra;
        self.bplus.iter().all(|&x1| {
            self.bplus.iter().all(|&x2| {
                if a.basis_path(x2).end() != a.basis_path(x1).start() {
                    return true;
                }
                let lhs = self.apply_to_radical(f, &a.algebra_multiply(x1, x2));
                let x1v = SparseVec::unit(x1, a.field());
                let x2v = SparseVec::unit(x2, a.field());
                let rhs = a
                    .multiply_vectors(&x1v, &self.evaluate(f, x2))
                    .add(&a.multiply_vectors(&self.evaluate(f, x1), &x2v));
                lhs == rhs
            })
        })
    }

    /// `[f, g] = f p_A g - g p_A f` on cochains in `C1`.
    pub fn bracket(&self, f: &SparseVec, g: &SparseVec) -> SparseVec {
        let mut acc: Vec<(usize, Scalar)> = Vec::new();
        for &x in &self.bplus {
            let fg = self.apply_to_radical(f, &self.evaluate(g, x));
            let gf = self.apply_to_radical(g, &self.evaluate(f, x));
            for (c, v) in fg.sub(&gf).iter() {
                acc.push((self.c1_index[&(x, *c)], v.clone()));
            }
        }
        SparseVec::from_pairs(acc)
    }
}

/// `(dim HH^0, dim HH^1)` from the bar complex.
pub fn bar_hh_dims(a: &QuotientAlgebra) -> (usize, usize) {
    let s = BarSlice::build(a);
    let r0 = rank(&s.d0);
    let hh0 = s.c0.len() - r0;
    let hh1 = s.ker_d1().dim() - r0;
    (hh0, hh1)
}

/// Derived series dimensions of `HH^1` under the bracket of derivations,
/// starting with `HH^1` itself and stopping at 0 or at the first repeat.
pub fn bar_derived_series(a: &QuotientAlgebra) -> Vec<usize> {
    let s = BarSlice::build(a);
    let field = a.field();
    let im = s.im_d0();
    let mut reps = s.hh1().representatives;
    let mut dims = vec![reps.len()];
    while !reps.is_empty() {
        let mut brackets = Vec::new();
        for i in 0..reps.len() {
            for j in i + 1..reps.len() {
                brackets.push(s.bracket(&reps[i], &reps[j]));
            }
        }
        let next = Subspace::span(field, s.c1.len(), brackets).sum(&im);
        let q = subspace_quotient(&next, &im).expect("contains Im d0");
        let last = *dims.last().unwrap();
        dims.push(q.dim);
        if q.dim == last {
            break;
        }
        reps = q.representatives;
    }
    dims
}
