use std::fmt;

use super::scalar::{FieldSpec, Scalar};
use super::subspace::{EchelonBasis, Subspace};
use super::vector::SparseVec;

/// A `rows x cols` matrix over one field. Rows are stored sparsely; absent
/// entries are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

/// Result of [`rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub rank: usize,
    pub reduced: Matrix,
    pub pivot_columns: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![SparseVec::new(); rows],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i] = SparseVec::unit(i, field);
        }
        m
    }

    pub fn from_dense(field: FieldSpec, rows: &[Vec<Scalar>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Matrix {
            field,
            rows: rows.len(),
            cols,
            data: rows.iter().map(|r| SparseVec::from_dense(r)).collect(),
        }
    }

    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let dense: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        let mut m = Matrix::from_dense(field, &dense);
        if rows.is_empty() {
            m.cols = 0;
        }
        m
    }

    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<SparseVec>) -> Self {
        debug_assert!(rows.iter().all(|r| r.max_index().is_none_or(|i| i < cols)));
        Matrix {
            field,
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    /// Builds the matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[SparseVec]) -> Self {
        let mut buckets: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); rows];
        for (j, col) in columns.iter().enumerate() {
            for (i, v) in col.iter() {
                assert!(*i < rows, "column entry out of range");
                buckets[*i].push((j, v.clone()));
            }
        }
        Matrix {
            field,
            rows,
            cols: columns.len(),
            data: buckets.into_iter().map(SparseVec::from_pairs).collect(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.data[i]
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        assert!(i < self.rows && j < self.cols, "index out of range");
        self.data[i].get(j).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        let row = &self.data[i];
        let old = row.get(j).cloned().unwrap_or_else(|| self.field.zero());
        let delta = &value - &old;
        self.data[i] = row.add_scaled(&delta, &SparseVec::unit(j, self.field));
    }

    pub fn column(&self, j: usize) -> SparseVec {
        SparseVec::from_pairs(
            self.data
                .iter()
                .enumerate()
                .filter_map(|(i, r)| r.get(j).map(|v| (i, v.clone()))),
        )
    }

    pub fn columns(&self) -> Vec<SparseVec> {
        self.transpose().data
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_columns(self.field, self.cols, &self.data)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(SparseVec::is_zero)
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        self.data.iter().map(|r| r.to_dense(self.cols, self.field)).collect()
    }

    /// `self * v` for a column vector `v` of length `cols`.
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        SparseVec::from_pairs(
            self.data
                .iter()
                .enumerate()
                .filter_map(|(i, r)| r.dot(v).filter(|s| !s.is_zero()).map(|s| (i, s))),
        )
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let data = self
            .data
            .iter()
            .map(|r| {
                let mut acc = SparseVec::new();
                for (k, v) in r.iter() {
                    acc = acc.add_scaled(v, &other.data[*k]);
                }
                acc
            })
            .collect();
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: other.cols,
            data,
        }
    }

    /// Keeps the listed columns, renumbered `0..keep.len()` in the given order.
    pub fn select_columns(&self, keep: &[usize]) -> Matrix {
        let mut position = vec![usize::MAX; self.cols];
        for (new, &old) in keep.iter().enumerate() {
            position[old] = new;
        }
        let data = self
            .data
            .iter()
            .map(|r| {
                SparseVec::from_pairs(
                    r.iter()
                        .filter(|(j, _)| position[*j] != usize::MAX)
                        .map(|(j, v)| (position[*j], v.clone())),
                )
            })
            .collect();
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: keep.len(),
            data,
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_dense() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Reduced row-echelon form with leftmost-column, first-nonzero-row pivoting.
pub fn rref(m: &Matrix) -> Rref {
    let mut basis = EchelonBasis::new(m.field, m.cols);
    for row in &m.data {
        basis.insert(row.clone());
    }
    let rows = basis.rows();
    let rank = rows.len();
    let pivot_columns = basis.pivots();
    let mut data = rows;
    data.resize(m.rows, SparseVec::new());
    Rref {
        rank,
        reduced: Matrix {
            field: m.field,
            rows: m.rows,
            cols: m.cols,
            data,
        },
        pivot_columns,
    }
}

pub fn rank(m: &Matrix) -> usize {
    let mut basis = EchelonBasis::new(m.field, m.cols);
    for row in &m.data {
        basis.insert(row.clone());
    }
    basis.len()
}

/// Right null space `{ v : m v = 0 }` in reduced row-echelon form.
pub fn kernel_basis(m: &Matrix) -> Subspace {
    let field = m.field;
    let mut basis = EchelonBasis::new(field, m.cols);
    for row in &m.data {
        basis.insert(row.clone());
    }
    let rows = basis.rows();
    let pivots = basis.pivots();
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    // Column j of the reduced matrix, read off once per free column.
    let mut free_entries: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); m.cols];
    for (r, row) in rows.iter().enumerate() {
        for (j, v) in row.iter() {
            if !is_pivot[*j] {
                free_entries[*j].push((pivots[r], -v));
            }
        }
    }
    let mut vectors = Vec::with_capacity(m.cols - pivots.len());
    for f in (0..m.cols).filter(|&j| !is_pivot[j]) {
        let mut entries = std::mem::take(&mut free_entries[f]);
        entries.push((f, field.one()));
        vectors.push(SparseVec::from_pairs(entries));
    }
    Subspace::span(field, m.cols, vectors)
}
