//! Dense matrices over `F_p` with exact Gauss-Jordan elimination.

use std::fmt;

use crate::error::{CodeError, Result};
use crate::field::{FieldElem, PrimeField};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<FieldElem>,
}

impl Matrix {
    pub fn new(field: PrimeField, rows: usize, cols: usize, data: Vec<FieldElem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(CodeError::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|e| e.field() != field) {
            return Err(CodeError::FieldMismatch(field.modulus(), bad.field().modulus()));
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn diag(field: PrimeField, entries: &[FieldElem]) -> Self {
        let mut m = Self::zeros(field, entries.len(), entries.len());
        for (i, &e) in entries.iter().enumerate() {
            m.set(i, i, e);
        }
        m
    }

    /// Builds a matrix from rows of raw residues.
    pub fn from_u64_rows(field: PrimeField, rows: &[Vec<u64>]) -> Result<Self> {
        let elems: Vec<Vec<FieldElem>> = rows.iter().map(|r| field.elems(r)).collect();
        Self::from_rows(field, &elems)
    }

    pub fn from_rows(field: PrimeField, rows: &[Vec<FieldElem>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(CodeError::Dimension("ragged rows".into()));
        }
        Self::new(field, rows.len(), cols, rows.concat())
    }

    pub fn from_columns(field: PrimeField, columns: &[Vec<FieldElem>]) -> Result<Self> {
        Ok(Self::from_rows(field, columns)?.transpose())
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElem {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldElem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<FieldElem> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_u64_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|e| e.value()).collect())
            .collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                out.set(i, jj, self.get(i, j));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(CodeError::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self.get(i, t);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out.get(i, j) + a * rhs.get(t, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// `M * v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[FieldElem]) -> Result<Vec<FieldElem>> {
        if v.len() != self.cols {
            return Err(CodeError::Dimension(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| dot(self.field, self.row(i), v))
            .collect())
    }

    /// `v * M` for a row vector `v`.
    pub fn vec_mul(&self, v: &[FieldElem]) -> Result<Vec<FieldElem>> {
        if v.len() != self.rows {
            return Err(CodeError::Dimension(format!(
                "row vector of length {} against {} rows",
                v.len(),
                self.rows
            )));
        }
        let mut out = vec![self.field.zero(); self.cols];
        for (i, &vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o += vi * self.get(i, j);
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    /// Pivots are the first nonzero entry scanning down each column.
    fn rref(&mut self, limit_cols: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..limit_cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if pr != row {
                for j in 0..self.cols {
                    self.data.swap(pr * self.cols + j, row * self.cols + j);
                }
            }
            let inv = self.get(row, col).inverse().unwrap();
            for j in 0..self.cols {
                let v = self.get(row, j) * inv;
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self.get(r, col);
                if factor.is_zero() {
                    continue;
                }
                for j in 0..self.cols {
                    let v = self.get(r, j) - factor * self.get(row, j);
                    self.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let cols = m.cols;
        m.rref(cols).len()
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(CodeError::Dimension(format!(
                "cannot invert a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, self.field.one());
        }
        if aug.rref(n).len() < n {
            return Err(CodeError::SingularMatrix);
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j));
            }
        }
        Ok(inv)
    }

    /// Solves `self * x = b`; free variables are set to zero.
    /// Returns `None` when the system is inconsistent.
    pub fn solve(&self, b: &[FieldElem]) -> Result<Option<Vec<FieldElem>>> {
        if b.len() != self.rows {
            return Err(CodeError::Dimension(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let mut aug = Matrix::zeros(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, b[i]);
        }
        let pivots = aug.rref(self.cols);
        if (pivots.len()..self.rows).any(|r| !aug.get(r, self.cols).is_zero()) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.get(r, self.cols);
        }
        Ok(Some(x))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

pub fn dot(field: PrimeField, a: &[FieldElem], b: &[FieldElem]) -> FieldElem {
    a.iter().zip(b).fold(field.zero(), |acc, (&x, &y)| acc + x * y)
}

/// Expresses `v` as a combination of `basis`, if possible.
///
/// When the basis is linearly independent the coefficients are unique;
/// otherwise the coefficients of non-pivot basis vectors are zero.
pub fn in_span(
    field: PrimeField,
    v: &[FieldElem],
    basis: &[Vec<FieldElem>],
) -> Result<Option<Vec<FieldElem>>> {
    if let Some(bad) = basis.iter().find(|b| b.len() != v.len()) {
        return Err(CodeError::Dimension(format!(
            "basis vector of length {} against target of length {}",
            bad.len(),
            v.len()
        )));
    }
    if basis.is_empty() {
        return Ok(v.iter().all(|e| e.is_zero()).then(Vec::new));
    }
    let m = Matrix::from_columns(field, basis)?;
    m.solve(v)
}
