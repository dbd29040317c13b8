//! Exact scalars over Q and GF(p), sparse vectors, matrices, and subspaces in
//! reduced row-echelon form.

mod matrix;
mod scalar;
mod subspace;
mod vector;

pub use matrix::{kernel_basis, rank, rref, Matrix, Rref};
pub use scalar::{FieldSpec, Scalar};
pub(crate) use scalar::{join_terms, signed_term};
pub use subspace::{subspace_quotient, EchelonBasis, Quotient, Subspace};
pub use vector::SparseVec;
