use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::field::Field;
use super::subspace::Subspace;
use crate::error::{shape, Result};

/// Dense row-major matrix over a prime field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Output of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// A solution set `particular + kernel` of a linear system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: Vec<u32>,
    pub kernel: Subspace,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from row-major entries, reducing each modulo p.
    pub fn from_entries(field: Field, rows: usize, cols: usize, entries: &[i64]) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(shape("entry count does not match dimensions"));
        }
        let data = entries.iter().map(|&e| field.reduce(e)).collect();
        Ok(Matrix { field, rows, cols, data })
    }

    pub fn from_rows(field: Field, cols: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(shape("ragged rows"));
            }
            data.extend(r.iter().map(|&e| e % field.prime()));
        }
        Ok(Matrix { field, rows: rows.len(), cols, data })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<u32>]) -> Result<Self> {
        let mut m = Self::zeros(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(shape("column length"));
            }
            for (r, &v) in col.iter().enumerate() {
                m.data[r * m.cols + c] = v % field.prime();
            }
        }
        Ok(m)
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u32) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c) % field.prime());
            }
        }
        Matrix { field, rows, cols, data }
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.field
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    #[inline]
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }
    pub fn entries(&self) -> &[u32] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.field.prime();
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&e| e == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..self.cols).all(|c| self.get(r, c) == u32::from(r == c)))
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |r, c| self.get(c, r))
    }

    /// Matrix product. Panics on inner-dimension mismatch.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let k = self.field;
        let p = k.prime() as u64;
        let mut out = Matrix::zeros(k, self.rows, rhs.cols);
        for r in 0..self.rows {
            for i in 0..self.cols {
                let a = self.get(r, i) as u64;
                if a == 0 {
                    continue;
                }
                let rrow = rhs.row(i);
                let orow = &mut out.data[r * rhs.cols..(r + 1) * rhs.cols];
                for (o, &b) in orow.iter_mut().zip(rrow) {
                    *o = ((*o as u64 + a * b as u64) % p) as u32;
                }
            }
        }
        out
    }

    pub fn try_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(shape("matrix product"));
        }
        Ok(self.mul(rhs))
    }

    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols, "vector length");
        let k = self.field;
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0u32, |acc, (&a, &b)| k.add(acc, k.mul(a, b)))
            })
            .collect()
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix sum shape mismatch");
        let k = self.field;
        let data = self.data.iter().zip(&rhs.data).map(|(&a, &b)| k.add(a, b)).collect();
        Matrix { field: k, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        self.add(&rhs.scale(self.field.neg(1)))
    }

    pub fn scale(&self, s: u32) -> Matrix {
        let k = self.field;
        let data = self.data.iter().map(|&a| k.mul(a, s)).collect();
        Matrix { field: k, rows: self.rows, cols: self.cols, data }
    }

    /// `[self | rhs]`.
    pub fn hstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.rows, rhs.rows, "hstack row mismatch");
        Matrix::from_fn(self.field, self.rows, self.cols + rhs.cols, |r, c| {
            if c < self.cols {
                self.get(r, c)
            } else {
                rhs.get(r, c - self.cols)
            }
        })
    }

    /// `[self ; rhs]`.
    pub fn vstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        Matrix { field: self.field, rows: self.rows + rhs.rows, cols: self.cols, data }
    }

    pub fn block_diag(field: Field, blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.write_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn write_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.data[(r0 + r) * self.cols + c0 + c] = block.get(r, c);
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(self.field, rows, cols, |r, c| self.get(r0 + r, c0 + c))
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, self.rows, cols.len(), |r, c| self.get(r, cols[c]))
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, rows.len(), self.cols, |r, c| self.get(rows[r], c))
    }

    /// Reduced row-echelon form with first-nonzero pivoting.
    pub fn rref(&self) -> Echelon {
        let k = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            m.swap_rows(pr, row);
            let inv = k.inv(m.get(row, col));
            m.scale_row(row, inv);
            for r in 0..m.rows {
                if r != row {
                    let factor = m.get(r, col);
                    if factor != 0 {
                        m.add_row_multiple(r, row, k.neg(factor));
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        Echelon { reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// Right kernel `{x : self · x = 0}`.
    pub fn kernel(&self) -> Subspace {
        let e = self.rref();
        let k = self.field;
        let free: Vec<usize> = (0..self.cols).filter(|c| !e.pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![0u32; self.cols];
            v[fc] = 1;
            for (i, &pc) in e.pivots.iter().enumerate() {
                v[pc] = k.neg(e.reduced.get(i, fc));
            }
            basis.push(v);
        }
        Subspace::from_spanning(k, self.cols, &basis)
    }

    /// Column space as a subspace of `F_p^rows`.
    pub fn column_space(&self) -> Subspace {
        Subspace::from_spanning(self.field, self.rows, &self.transpose().row_vecs())
    }

    pub fn row_space(&self) -> Subspace {
        Subspace::from_spanning(self.field, self.cols, &self.row_vecs())
    }

    /// Solves `self · x = b`; `None` when `b` is outside the column space.
    pub fn solve_affine(&self, b: &[u32]) -> Result<Option<AffineSolution>> {
        if b.len() != self.rows {
            return Err(shape("right-hand side length"));
        }
        let rhs = Matrix::from_columns(self.field, self.rows, &[b.to_vec()])?;
        let Some(x) = self.solve_matrix(&rhs)? else {
            return Ok(None);
        };
        Ok(Some(AffineSolution { particular: x.column(0), kernel: self.kernel() }))
    }

    /// Solves `self · X = rhs` column by column with a single elimination.
    /// Free variables are set to zero.
    pub fn solve_matrix(&self, rhs: &Matrix) -> Result<Option<Matrix>> {
        if rhs.rows != self.rows {
            return Err(shape("right-hand side rows"));
        }
        let aug = self.hstack(rhs).rref();
        if aug.pivots.iter().any(|&c| c >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.field, self.cols, rhs.cols);
        for (i, &pc) in aug.pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.data[pc * rhs.cols + j] = aug.reduced.get(i, self.cols + j);
            }
        }
        Ok(Some(x))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn scale_row(&mut self, r: usize, s: u32) {
        let k = self.field;
        for e in &mut self.data[r * self.cols..(r + 1) * self.cols] {
            *e = k.mul(*e, s);
        }
    }

    fn add_row_multiple(&mut self, target: usize, src: usize, s: u32) {
        let k = self.field;
        for c in 0..self.cols {
            let v = k.mul(self.data[src * self.cols + c], s);
            let t = &mut self.data[target * self.cols + c];
            *t = k.add(*t, v);
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix[F_{}; {}x{}]", self.field.prime(), self.rows, self.cols)?;
        f.debug_list().entries((0..self.rows).map(|r| self.row(r))).finish()
    }
}
