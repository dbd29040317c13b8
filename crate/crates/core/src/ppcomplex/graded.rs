use crate::exactla::{subspace_quotient, Subspace};
use crate::pathalg::Path;
use crate::quotient::QuotientAlgebra;

use super::ParallelPaths;

/// The pieces `L_{-1}`, `L_00`, and (for homogeneous ideals) `L_0, L_1, ...`
/// of `HH^1`.
#[derive(Clone, Debug)]
pub struct GradedReport {
    pub homogeneous: bool,
    pub l_minus1: Subspace,
    pub dim_l00: usize,
    /// `graded_dims[i]` is `dim L_i`, present for homogeneous ideals.
    pub graded_dims: Option<Vec<usize>>,
}

impl GradedReport {
    pub fn dim_l_minus1(&self) -> usize {
        self.l_minus1.dim()
    }
}

impl ParallelPaths<'_> {
    fn q1b_indices(&self, keep: impl Fn(usize, &Path) -> bool) -> Vec<usize> {
        self.q1b
            .pairs
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| keep(a, self.algebra().basis_path(b)))
            .map(|(i, _)| i)
            .collect()
    }

    fn psi0_span(&self, keep: impl Fn(&Path) -> bool) -> Subspace {
        let cols = self
            .q0b
            .pairs
            .iter()
            .enumerate()
            .filter(|(_, &(_, g))| keep(self.algebra().basis_path(g)))
            .map(|(i, _)| self.psi0_image(i));
        Subspace::span(self.field(), self.q1b.len(), cols)
    }

    /// Degree of the pair at `index` in `k(Q1//B)`: `len(b) - 1`.
    pub fn pair_degree(&self, index: usize) -> isize {
        self.algebra().basis_path(self.q1b.pairs[index].1).len() as isize - 1
    }

    pub fn graded_report(&self) -> GradedReport {
        let quiver = self.algebra().quiver().clone();
        let homogeneous = self.algebra().gb().is_homogeneous();
        let l_minus1 = self
            .ker_psi1
            .intersect_coordinates(&self.q1b_indices(|_, b| b.is_trivial()));

        let diagonal = self.q1b_indices(|a, b| *b == quiver.arrow_path(a));
        let diag_ker = self.ker_psi1.intersect_coordinates(&diagonal);
        let diag_im = self.psi0_span(Path::is_trivial);
        let dim_l00 = subspace_quotient(&diag_ker, &diag_im)
            .expect("inner diagonal derivations are cocycles")
            .dim;

        let graded_dims = homogeneous.then(|| {
            let top = self.algebra().max_length();
            (0..top)
                .map(|i| {
                    let ker = self.ker_psi1.intersect_coordinates(&self.q1b_indices(|_, b| b.len() == i + 1));
                    let im = self.psi0_span(|g| g.len() == i);
                    subspace_quotient(&ker, &im)
                        .expect("homogeneous coboundaries lie in the matching degree")
                        .dim
                })
                .collect()
        });
        GradedReport {
            homogeneous,
            l_minus1,
            dim_l00,
            graded_dims,
        }
    }
}

pub fn graded_report(a: &QuotientAlgebra) -> GradedReport {
    ParallelPaths::new(a).graded_report()
}

/// For a loop `a`, the least `m >= 2` with `a^m` outside the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopCharacteristic {
    pub arrow: usize,
    pub power: usize,
    /// `a^power` is itself a tip of the Gröbner basis.
    pub is_tip: bool,
    /// The characteristic of the field divides `power`.
    pub divides: bool,
}

pub fn loop_char_report(a: &QuotientAlgebra) -> Vec<LoopCharacteristic> {
    let quiver = a.quiver();
    let tips = a.gb().tips();
    let p = a.field().characteristic();
    quiver
        .loops()
        .map(|arrow| {
            let x = quiver.arrow_path(arrow);
            let mut power = x.clone();
            let mut m = 1;
            while a.index_of(&power).is_some() {
                power = power.compose(&x).expect("loop");
                m += 1;
            }
            LoopCharacteristic {
                arrow,
                power: m,
                is_tip: tips.contains(&power),
                divides: p != 0 && (m as u64).is_multiple_of(p as u64),
            }
        })
        .collect()
}
