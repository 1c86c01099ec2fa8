//! Exact dense linear algebra over GF(p^m): reduced row echelon form,
//! rank, kernels and row-space tests. Pivoting always takes the first
//! nonzero entry in column order, so reductions are deterministic.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{ExtField, FieldElement};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: Vec<Vec<FieldElement>>,
    ncols: usize,
}

impl Matrix {
    pub fn new(rows: Vec<Vec<FieldElement>>) -> Result<Self> {
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::RaggedRows);
        }
        Ok(Matrix { rows, ncols })
    }

    pub fn zero(f: &ExtField, nrows: usize, ncols: usize) -> Self {
        Matrix { rows: vec![vec![f.zero(); ncols]; nrows], ncols }
    }

    pub fn identity(f: &ExtField, n: usize) -> Self {
        let mut m = Matrix::zero(f, n, n);
        for i in 0..n {
            m.rows[i][i] = f.one();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn transpose(&self, f: &ExtField) -> Matrix {
        let mut out = Matrix::zero(f, self.ncols, self.nrows());
        for (i, row) in self.rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                out.rows[j][i] = v.clone();
            }
        }
        out
    }

    pub fn mul(&self, f: &ExtField, rhs: &Matrix) -> Matrix {
        debug_assert_eq!(self.ncols, rhs.nrows());
        let mut out = Matrix::zero(f, self.nrows(), rhs.ncols);
        for i in 0..self.nrows() {
            for k in 0..self.ncols {
                let a = &self.rows[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.ncols {
                    let prod = f.mul(a, &rhs.rows[k][j]);
                    out.rows[i][j] = f.add(&out.rows[i][j], &prod);
                }
            }
        }
        out
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self, f: &ExtField) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.ncols {
            if r == self.nrows() {
                break;
            }
            let Some(pr) = (r..self.nrows()).find(|&i| !self.rows[i][c].is_zero()) else {
                continue;
            };
            self.rows.swap(r, pr);
            let inv = f.inv(&self.rows[r][c]).expect("pivot nonzero");
            for j in c..self.ncols {
                self.rows[r][j] = f.mul(&self.rows[r][j], &inv);
            }
            for i in 0..self.nrows() {
                if i == r || self.rows[i][c].is_zero() {
                    continue;
                }
                let factor = self.rows[i][c].clone();
                for j in c..self.ncols {
                    let s = f.mul(&factor, &self.rows[r][j]);
                    self.rows[i][j] = f.sub(&self.rows[i][j], &s);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, f: &ExtField) -> usize {
        let mut m = self.clone();
        m.rref(f).len()
    }

    /// Nonzero rows of the reduced echelon form: a canonical basis of the
    /// row space.
    pub fn row_basis(&self, f: &ExtField) -> Matrix {
        let mut m = self.clone();
        let rank = m.rref(f).len();
        m.rows.truncate(rank);
        m
    }

    /// Basis of the right kernel {v : M·v = 0}, one row per basis vector.
    pub fn kernel(&self, f: &ExtField) -> Matrix {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let rank = pivots.len();
        let free: Vec<usize> = (0..self.ncols).filter(|c| !pivots.contains(c)).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![f.zero(); self.ncols];
            v[fc] = f.one();
            for (r, &pc) in pivots.iter().enumerate().take(rank) {
                v[pc] = f.neg(&m.rows[r][fc]);
            }
            rows.push(v);
        }
        Matrix { rows, ncols: self.ncols }
    }

    /// True iff v lies in the row space.
    pub fn in_rowspace(&self, f: &ExtField, v: &[FieldElement]) -> bool {
        debug_assert_eq!(v.len(), self.ncols);
        let base = self.rank(f);
        let mut aug = self.clone();
        aug.rows.push(v.to_vec());
        aug.rank(f) == base
    }

    /// Inverse of a square matrix; None when singular.
    pub fn inverse(&self, f: &ExtField) -> Option<Matrix> {
        let n = self.nrows();
        if n != self.ncols {
            return None;
        }
        let mut aug = Matrix {
            rows: self
                .rows
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    let mut row = r.clone();
                    for j in 0..n {
                        row.push(if i == j { f.one() } else { f.zero() });
                    }
                    row
                })
                .collect(),
            ncols: 2 * n,
        };
        let pivots = aug.rref(f);
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return None;
        }
        let rows = aug.rows.into_iter().map(|r| r[n..].to_vec()).collect();
        Some(Matrix { rows, ncols: n })
    }

    /// Solves M·x = b exactly; None when inconsistent. Free variables are
    /// set to zero.
    pub fn solve(&self, f: &ExtField, b: &[FieldElement]) -> Option<Vec<FieldElement>> {
        debug_assert_eq!(b.len(), self.nrows());
        let mut aug = Matrix {
            rows: self
                .rows
                .iter()
                .zip(b)
                .map(|(r, v)| {
                    let mut row = r.clone();
                    row.push(v.clone());
                    row
                })
                .collect(),
            ncols: self.ncols + 1,
        };
        let pivots = aug.rref(f);
        if pivots.contains(&self.ncols) {
            return None;
        }
        let mut x = vec![f.zero(); self.ncols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.rows[r][self.ncols].clone();
        }
        Some(x)
    }

    /// Row-space equality.
    pub fn same_rowspace(&self, f: &ExtField, rhs: &Matrix) -> bool {
        if self.ncols != rhs.ncols {
            return false;
        }
        let ra = self.rank(f);
        let rb = rhs.rank(f);
        if ra != rb {
            return false;
        }
        let mut aug = self.clone();
        aug.rows.extend(rhs.rows.iter().cloned());
        aug.rank(f) == ra
    }
}
