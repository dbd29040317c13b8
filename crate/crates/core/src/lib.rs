//! First Hochschild cohomology of finite-dimensional quiver algebras.
//!
//! An algebra `A = kQ/I` is presented by a quiver and generators of `I`. The
//! crate completes the generators to a reduced Gröbner basis under the left
//! length-lexicographic order, enumerates the monomial basis of `A`, and
//! computes `HH^0(A)` and `HH^1(A)` from parallel paths, together with the Lie
//! bracket on `HH^1(A)`, its derived series, and its graded pieces. An
//! independent computation from the reduced bar complex cross-checks the
//! results. Brauer graph algebras and their associated graded algebras can be
//! built directly from a ribbon graph description.

pub mod baroracle;
pub mod brauer;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod exactla;
pub mod groebner;
pub mod pathalg;
pub mod ppcomplex;
pub mod quotient;

pub use error::{Error, Result};
