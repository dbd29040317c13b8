//! Parallel paths: the maps `psi0: k(Q0//B) -> k(Q1//B)` and
//! `psi1: k(Q1//B) -> k(Tip(G)//B)`, with `HH^0 = Ker psi0` and
//! `HH^1 = Ker psi1 / Im psi0`, and the Lie bracket on `HH^1`.

mod graded;
mod lie;

use std::collections::HashMap;
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::exactla::{kernel_basis, subspace_quotient, FieldSpec, Matrix, Quotient, Scalar, SparseVec, Subspace};
use crate::pathalg::{FreeElement, Path, Quiver};
use crate::quotient::QuotientAlgebra;

pub use graded::{graded_report, loop_char_report, GradedReport, LoopCharacteristic};
pub use lie::{
    derived_series_from_constants, is_antisymmetric, jacobi_holds, lie_presentation, LiePresentation,
    StructureConstants,
};

/// Which paths occupy the first slot of a parallel pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum XSide {
    Vertices,
    Arrows,
    Tips,
}

/// An indexed list of parallel pairs `(x, b)`, `b` a basis path of `A`.
/// Sorted by `x` (declaration order for vertices and arrows, Gröbner basis
/// order for tips) and then by `b`.
#[derive(Clone, Debug)]
pub struct ParallelPairSpace {
    pub side: XSide,
    pub pairs: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
}

impl ParallelPairSpace {
    fn new(side: XSide, pairs: Vec<(usize, usize)>) -> Self {
        let index = pairs.iter().copied().enumerate().map(|(i, p)| (p, i)).collect();
        ParallelPairSpace { side, pairs, index }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn index_of(&self, x: usize, b: usize) -> Option<usize> {
        self.index.get(&(x, b)).copied()
    }
}

/// `e^(alpha, gamma)`: the sum over occurrences of `alpha` in `e` of the path
/// with that occurrence replaced by `gamma`. A trivial `gamma` deletes the
/// occurrence.
pub fn substitute(quiver: &Quiver, field: FieldSpec, e: &Path, alpha: usize, gamma: &Path) -> Result<FreeElement> {
    let arr = quiver.arrow(alpha);
    if gamma.start() != arr.source || gamma.end() != arr.target {
        return Err(Error::NotParallel(format!(
            "{} and {}",
            arr.name,
            quiver.format_path(gamma)
        )));
    }
    Ok(substitute_unchecked(quiver, field, e, alpha, gamma))
}

fn substitute_unchecked(quiver: &Quiver, field: FieldSpec, e: &Path, alpha: usize, gamma: &Path) -> FreeElement {
    let mut out = FreeElement::zero(field);
    for (i, &a) in e.arrows().iter().enumerate() {
        if a as usize != alpha {
            continue;
        }
        let v = e.slice(0, i, quiver);
        let u = e.slice(i + 1, e.len(), quiver);
        let p = u
            .compose(gamma)
            .and_then(|ug| ug.compose(&v))
            .expect("parallel substitution composes");
        out.add_term(p, field.one());
    }
    out
}

/// The beginning of the parallel-paths cochain complex of a
/// finite-dimensional algebra, with `HH^0`, `HH^1`, and bracket data.
#[derive(Debug)]
pub struct ParallelPaths<'a> {
    algebra: &'a QuotientAlgebra,
    pub q0b: ParallelPairSpace,
    pub q1b: ParallelPairSpace,
    pub tipb: ParallelPairSpace,
    pub psi0: Matrix,
    pub psi1: Matrix,
    pub ker_psi0: Subspace,
    pub ker_psi1: Subspace,
    pub im_psi0: Subspace,
    pub hh1: Quotient,
    bracket_memo: Mutex<HashMap<(usize, usize), SparseVec>>,
}

impl<'a> ParallelPaths<'a> {
    pub fn new(algebra: &'a QuotientAlgebra) -> Self {
        let quiver = algebra.quiver().clone();
        let field = algebra.field();
        let basis_pairs = |x_start: usize, x_end: usize| algebra.parallel_to(x_start, x_end);

        let q0b = ParallelPairSpace::new(
            XSide::Vertices,
            (0..quiver.vertex_count())
                .flat_map(|v| basis_pairs(v, v).into_iter().map(move |b| (v, b)))
                .collect(),
        );
        let q1b = ParallelPairSpace::new(
            XSide::Arrows,
            (0..quiver.arrow_count())
                .flat_map(|a| {
                    let arr = quiver.arrow(a);
                    basis_pairs(arr.source, arr.target).into_iter().map(move |b| (a, b))
                })
                .collect(),
        );
        let tips = algebra.gb().tips();
        let tipb = ParallelPairSpace::new(
            XSide::Tips,
            tips.iter()
                .enumerate()
                .flat_map(|(g, t)| basis_pairs(t.start(), t.end()).into_iter().map(move |b| (g, b)))
                .collect(),
        );

        let psi0_cols: Vec<SparseVec> = q0b
            .pairs
            .iter()
            .map(|&(e, g)| psi0_column(algebra, &q1b, e, g))
            .collect();
        let psi0 = Matrix::from_columns(field, q1b.len(), &psi0_cols);
        let psi1_cols: Vec<SparseVec> = q1b
            .pairs
            .iter()
            .map(|&(a, g)| psi1_column(algebra, &tipb, a, g))
            .collect();
        let psi1 = Matrix::from_columns(field, tipb.len(), &psi1_cols);

        let ker_psi0 = kernel_basis(&psi0);
        let ker_psi1 = kernel_basis(&psi1);
        let im_psi0 = Subspace::span(field, q1b.len(), psi0_cols);
        let hh1 = subspace_quotient(&ker_psi1, &im_psi0).expect("Im psi0 lies in Ker psi1");
        ParallelPaths {
            algebra,
            q0b,
            q1b,
            tipb,
            psi0,
            psi1,
            ker_psi0,
            ker_psi1,
            im_psi0,
            hh1,
            bracket_memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn algebra(&self) -> &QuotientAlgebra {
        self.algebra
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn hh0_dim(&self) -> usize {
        self.ker_psi0.dim()
    }

    pub fn hh1_dim(&self) -> usize {
        self.hh1.dim
    }

    /// `psi1 * psi0 = 0`.
    pub fn is_complex(&self) -> bool {
        self.psi1.mul(&self.psi0).is_zero()
    }

    /// `psi0` applied to the pair `(e, b)` given by its index in `q0b`.
    pub fn psi0_image(&self, index: usize) -> SparseVec {
        self.psi0.column(index)
    }

    /// Bracket of two basis pairs of `k(Q1//B)`:
    /// `[(a, g), (b, e)] = (b, pi(e^(a, g))) - (a, pi(g^(b, e)))`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> SparseVec {
        if let Some(v) = self.bracket_memo.lock().unwrap().get(&(i, j)) {
            return v.clone();
        }
        let quiver = self.algebra.quiver();
        let (alpha, gamma) = self.q1b.pairs[i];
        let (beta, eps) = self.q1b.pairs[j];
        let gamma_path = self.algebra.basis_path(gamma);
        let eps_path = self.algebra.basis_path(eps);
        let mut acc: Vec<(usize, Scalar)> = Vec::new();
        let left = self
            .algebra
            .project_pi(&substitute_unchecked(quiver, self.field(), eps_path, alpha, gamma_path));
        for (b, c) in left.iter() {
            acc.push((self.q1b.index_of(beta, *b).expect("parallel to beta"), c.clone()));
        }
        let right = self
            .algebra
            .project_pi(&substitute_unchecked(quiver, self.field(), gamma_path, beta, eps_path));
        for (b, c) in right.iter() {
            acc.push((self.q1b.index_of(alpha, *b).expect("parallel to alpha"), -c));
        }
        let v = SparseVec::from_pairs(acc);
        self.bracket_memo.lock().unwrap().insert((i, j), v.clone());
        v
    }

    /// Bilinear extension of [`bracket_basis`](Self::bracket_basis).
    pub fn bracket(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        let mut acc: Vec<(usize, Scalar)> = Vec::new();
        for (i, a) in u.iter() {
            for (j, b) in v.iter() {
                let ab = a * b;
                for (k, c) in self.bracket_basis(*i, *j).iter() {
                    acc.push((*k, c * &ab));
                }
            }
        }
        SparseVec::from_pairs(acc)
    }

    /// Coordinates in the `HH^1` representative basis of a cocycle, after
    /// reduction modulo `Im psi0`.
    pub fn hh1_coordinates(&self, v: &SparseVec) -> Option<Vec<Scalar>> {
        if !self.ker_psi1.contains(v) {
            return None;
        }
        let r = self.im_psi0.reduce(v);
        let coords: Vec<Scalar> = self
            .hh1
            .representatives
            .iter()
            .map(|rep| {
                let p = rep.leading().unwrap().0;
                r.get(p).cloned().unwrap_or_else(|| self.field().zero())
            })
            .collect();
        Some(coords)
    }

    /// Renders a vector of `k(Q1//B)` as `(x, b)` pairs: `(a1, a1) - (a2, a2)`.
    pub fn format_pairs(&self, v: &SparseVec) -> String {
        let quiver = self.algebra.quiver();
        crate::exactla::join_terms(v.iter().map(|(i, c)| {
            let (a, b) = self.q1b.pairs[*i];
            let body = format!(
                "({}, {})",
                quiver.arrow(a).name,
                pair_path_name(quiver, self.algebra.basis_path(b))
            );
            crate::exactla::signed_term(c, &body)
        }))
    }

    /// Renders a vector of `k(Tip(G)//B)`.
    pub fn format_tip_pairs(&self, v: &SparseVec) -> String {
        let quiver = self.algebra.quiver();
        let tips = self.algebra.gb().tips();
        crate::exactla::join_terms(v.iter().map(|(i, c)| {
            let (g, b) = self.tipb.pairs[*i];
            let body = format!(
                "({}, {})",
                quiver.format_path(&tips[g]),
                pair_path_name(quiver, self.algebra.basis_path(b))
            );
            crate::exactla::signed_term(c, &body)
        }))
    }

    /// Index in `k(Q1//B)` of the pair `(arrow, path)` given by names and an
    /// expression for the path, or `None` when it is not a parallel pair.
    pub fn pair_index(&self, arrow: usize, path: &Path) -> Option<usize> {
        let b = self.algebra.index_of(path)?;
        self.q1b.index_of(arrow, b)
    }
}

/// Trivial paths print as `1` inside pairs, matching the usual `(x, 1)`.
fn pair_path_name(quiver: &Quiver, p: &Path) -> String {
    if p.is_trivial() && quiver.vertex_count() == 1 {
        "1".to_string()
    } else {
        quiver.format_path(p)
    }
}

fn psi0_column(a: &QuotientAlgebra, q1b: &ParallelPairSpace, e: usize, g: usize) -> SparseVec {
    let quiver = a.quiver();
    let gamma = a.basis_path(g);
    let mut acc: Vec<(usize, Scalar)> = Vec::new();
    for alpha in quiver.arrows_from(e) {
        let p = quiver.arrow_path(alpha).compose(gamma).expect("gamma is a cycle at e");
        for (b, c) in a.project_path(&p).iter() {
            acc.push((q1b.index_of(alpha, *b).expect("parallel"), c.clone()));
        }
    }
    for beta in quiver.arrows_into(e) {
        let p = gamma.compose(&quiver.arrow_path(beta)).expect("gamma is a cycle at e");
        for (b, c) in a.project_path(&p).iter() {
            acc.push((q1b.index_of(beta, *b).expect("parallel"), -c));
        }
    }
    SparseVec::from_pairs(acc)
}

fn psi1_column(a: &QuotientAlgebra, tipb: &ParallelPairSpace, alpha: usize, g: usize) -> SparseVec {
    let quiver = a.quiver();
    let gamma = a.basis_path(g);
    let mut acc: Vec<(usize, Scalar)> = Vec::new();
    for (gi, elem) in a.gb().elements().iter().enumerate() {
        for (p, c) in elem.terms() {
            if !p.arrows().contains(&(alpha as u32)) {
                continue;
            }
            let sub = substitute_unchecked(quiver, a.field(), p, alpha, gamma);
            for (b, v) in a.project_pi(&sub).iter() {
                acc.push((tipb.index_of(gi, *b).expect("parallel to tip"), v * c));
            }
        }
    }
    SparseVec::from_pairs(acc)
}

/// `HH^0(A) = Ker psi0`: dimension and echelon basis over `k(Q0//B)`.
pub fn compute_hh0(a: &QuotientAlgebra) -> (usize, Vec<SparseVec>) {
    let pp = ParallelPaths::new(a);
    (pp.ker_psi0.dim(), pp.ker_psi0.basis().to_vec())
}

/// `HH^1(A) = Ker psi1 / Im psi0`: dimension and representatives over `k(Q1//B)`.
pub fn compute_hh1(a: &QuotientAlgebra) -> (usize, Vec<SparseVec>) {
    let pp = ParallelPaths::new(a);
    (pp.hh1.dim, pp.hh1.representatives.clone())
}

pub fn build_psi0(a: &QuotientAlgebra) -> Matrix {
    ParallelPaths::new(a).psi0
}

pub fn build_psi1(a: &QuotientAlgebra) -> Matrix {
    ParallelPaths::new(a).psi1
}
