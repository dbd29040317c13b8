use crate::exactla::{FieldSpec, Scalar, SparseVec, Subspace};
use crate::quotient::QuotientAlgebra;

use super::ParallelPaths;

/// `constants[i][j]` holds the coordinates of `[r_i, r_j]` in the
/// representative basis `r_0, ..., r_{d-1}`.
pub type StructureConstants = Vec<Vec<Vec<Scalar>>>;

/// `HH^1(A)` as an abstract Lie algebra.
#[derive(Clone, Debug)]
pub struct LiePresentation {
    pub field: FieldSpec,
    pub dim: usize,
    pub representatives: Vec<SparseVec>,
    pub basis_labels: Vec<String>,
    pub constants: StructureConstants,
    /// Dimensions of `L, L^(1), L^(2), ...`, ending at 0 or at the first repeat.
    pub derived_dims: Vec<usize>,
    pub solvable: bool,
}

impl LiePresentation {
    /// Bracket of two coordinate vectors.
    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        bracket_coords(self.field, &self.constants, u, v)
    }

    /// Renders the nonzero brackets of basis elements, one per line, as
    /// `[r0, r1] = 2*r2`.
    pub fn format_table(&self) -> Vec<String> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let c = &self.constants[i][j];
                if c.iter().all(Scalar::is_zero) {
                    continue;
                }
                let rhs = crate::exactla::join_terms(
                    c.iter()
                        .enumerate()
                        .filter(|(_, s)| !s.is_zero())
                        .map(|(k, s)| crate::exactla::signed_term(s, &format!("r{k}"))),
                );
                out.push(format!("[r{i}, r{j}] = {rhs}"));
            }
        }
        out
    }
}

fn bracket_coords(field: FieldSpec, constants: &StructureConstants, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    let d = constants.len();
    let mut out = vec![field.zero(); d];
    for (i, a) in u.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in v.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let ab = a * b;
            for (k, c) in constants[i][j].iter().enumerate() {
                if !c.is_zero() {
                    out[k] = &out[k] + &(c * &ab);
                }
            }
        }
    }
    out
}

/// Derived series dimensions from structure constants, starting with the
/// full algebra and stopping at 0 or when a dimension repeats.
pub fn derived_series_from_constants(field: FieldSpec, constants: &StructureConstants) -> Vec<usize> {
    let d = constants.len();
    let mut current: Vec<SparseVec> = (0..d).map(|i| SparseVec::unit(i, field)).collect();
    let mut dims = vec![d];
    while !current.is_empty() {
        let dense: Vec<Vec<Scalar>> = current.iter().map(|v| v.to_dense(d, field)).collect();
        let mut brackets = Vec::new();
        for i in 0..dense.len() {
            for j in i + 1..dense.len() {
                brackets.push(SparseVec::from_dense(&bracket_coords(field, constants, &dense[i], &dense[j])));
            }
        }
        let next = Subspace::span(field, d, brackets);
        let n = next.dim();
        let last = *dims.last().unwrap();
        dims.push(n);
        if n == last {
            break;
        }
        current = next.basis().to_vec();
    }
    dims
}

pub fn is_antisymmetric(constants: &StructureConstants) -> bool {
    let d = constants.len();
    (0..d).all(|i| {
        constants[i][i].iter().all(Scalar::is_zero)
            && (0..d).all(|j| constants[i][j].iter().zip(&constants[j][i]).all(|(a, b)| (a + b).is_zero()))
    })
}

/// `[x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0` on all basis triples.
pub fn jacobi_holds(field: FieldSpec, constants: &StructureConstants) -> bool {
    let d = constants.len();
    let unit = |i: usize| -> Vec<Scalar> { (0..d).map(|k| if k == i { field.one() } else { field.zero() }).collect() };
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let (x, y, z) = (unit(i), unit(j), unit(k));
                let a = bracket_coords(field, constants, &x, &constants[j][k]);
                let b = bracket_coords(field, constants, &y, &constants[k][i]);
                let c = bracket_coords(field, constants, &z, &constants[i][j]);
                if !a.iter().zip(&b).zip(&c).all(|((a, b), c)| (&(a + b) + c).is_zero()) {
                    return false;
                }
            }
        }
    }
    true
}

impl ParallelPaths<'_> {
    /// Structure constants of `HH^1` on the stored representatives.
    pub fn structure_constants(&self) -> StructureConstants {
        let reps = &self.hh1.representatives;
        let d = reps.len();
        let mut constants = vec![vec![Vec::new(); d]; d];
        for i in 0..d {
            constants[i][i] = vec![self.field().zero(); d];
            for j in i + 1..d {
                let b = self.bracket(&reps[i], &reps[j]);
                let c = self
                    .hh1_coordinates(&b)
                    .expect("the bracket of cocycles is a cocycle");
                constants[j][i] = c.iter().map(|s| -s).collect();
                constants[i][j] = c;
            }
        }
        constants
    }

    /// `Im psi0` is an ideal: brackets of kernel vectors with coboundaries
    /// stay in `Im psi0`.
    pub fn image_is_ideal(&self) -> bool {
        self.ker_psi1.basis().iter().all(|w| {
            (0..self.q0b.len()).all(|e| {
                let b = self.bracket(w, &self.psi0_image(e));
                self.im_psi0.contains(&b)
            })
        })
    }

    pub fn lie_presentation(&self) -> LiePresentation {
        let constants = self.structure_constants();
        let derived_dims = derived_series_from_constants(self.field(), &constants);
        let solvable = *derived_dims.last().unwrap() == 0;
        LiePresentation {
            field: self.field(),
            dim: self.hh1.dim,
            representatives: self.hh1.representatives.clone(),
            basis_labels: self.hh1.representatives.iter().map(|r| self.format_pairs(r)).collect(),
            constants,
            derived_dims,
            solvable,
        }
    }
}

pub fn lie_presentation(a: &QuotientAlgebra) -> LiePresentation {
    ParallelPaths::new(a).lie_presentation()
}
