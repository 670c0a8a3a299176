//! Dense matrices over a finite field: row reduction, rank, null space.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::domain;
use crate::gf::{FieldCtx, FqElem};
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    ctx: Arc<FieldCtx>,
    ncols: usize,
    rows: Vec<Vec<FqElem>>,
}

impl Matrix {
    pub fn new(ctx: Arc<FieldCtx>, ncols: usize, rows: Vec<Vec<FqElem>>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != ncols) {
            return Err(domain!("row of length {} in a matrix with {ncols} columns", bad.len()));
        }
        Ok(Matrix { ctx, ncols, rows })
    }

    pub fn empty(ctx: Arc<FieldCtx>, ncols: usize) -> Self {
        Matrix { ctx, ncols, rows: Vec::new() }
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<FqElem>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<FqElem>> {
        self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(|c| c.is_zero()))
    }

    pub fn dot(&self, a: &[FqElem], b: &[FqElem]) -> FqElem {
        let k = &self.ctx;
        a.iter().zip(b).fold(FqElem::ZERO, |acc, (&x, &y)| k.add(acc, k.mul(x, y)))
    }

    /// `M v`, one entry per row.
    pub fn mul_vec(&self, v: &[FqElem]) -> Vec<FqElem> {
        self.rows.iter().map(|r| self.dot(r, v)).collect()
    }

    /// `M N^T` for matrices with equal column counts.
    pub fn mul_transpose(&self, other: &Matrix) -> Result<Matrix> {
        if self.ncols != other.ncols {
            return Err(domain!("column counts {} and {} differ", self.ncols, other.ncols));
        }
        let rows = self
            .rows
            .iter()
            .map(|r| other.rows.iter().map(|s| self.dot(r, s)).collect())
            .collect();
        Matrix::new(self.ctx.clone(), other.nrows(), rows)
    }

    /// Reduced row echelon form (zero rows dropped) and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let k = &self.ctx;
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..self.ncols {
            let Some(found) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
                continue;
            };
            rows.swap(r, found);
            let inv = k.inv(rows[r][col]).expect("nonzero pivot");
            for c in rows[r].iter_mut() {
                *c = k.mul(*c, inv);
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r || row[col].is_zero() {
                    continue;
                }
                let factor = row[col];
                for (c, &pv) in row.iter_mut().zip(&pivot_row) {
                    *c = k.sub(*c, k.mul(factor, pv));
                }
            }
            pivots.push(col);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        (Matrix { ctx: k.clone(), ncols: self.ncols, rows }, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{ v : M v = 0 }`, one vector per row of the result.
    pub fn nullspace(&self) -> Matrix {
        let k = &self.ctx;
        let (reduced, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in (0..self.ncols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![FqElem::ZERO; self.ncols];
            v[free] = FqElem::ONE;
            for (row, &pc) in reduced.rows.iter().zip(&pivots) {
                v[pc] = k.neg(row[free]);
            }
            basis.push(v);
        }
        Matrix { ctx: k.clone(), ncols: self.ncols, rows: basis }
    }

    /// Whether `v` lies in the row space.
    pub fn row_space_contains(&self, v: &[FqElem]) -> bool {
        let mut extended = self.clone();
        extended.rows.push(v.to_vec());
        extended.rank() == self.rank()
    }

    pub fn same_row_space(&self, other: &Matrix) -> bool {
        if self.ncols != other.ncols {
            return false;
        }
        let (a, _) = self.rref();
        let (b, _) = other.rref();
        a.rows == b.rows
    }

    /// Determinant of a square matrix by Gaussian elimination.
    pub fn det(&self) -> Result<FqElem> {
        if self.nrows() != self.ncols {
            return Err(domain!("determinant of a {}x{} matrix", self.nrows(), self.ncols));
        }
        Ok(det_in_place(&self.ctx, self.rows.clone()))
    }
}

pub(crate) fn det_in_place(k: &FieldCtx, mut rows: Vec<Vec<FqElem>>) -> FqElem {
    let n = rows.len();
    let mut det = FqElem::ONE;
    for col in 0..n {
        let Some(found) = (col..n).find(|&i| !rows[i][col].is_zero()) else {
            return FqElem::ZERO;
        };
        if found != col {
            rows.swap(col, found);
            det = k.neg(det);
        }
        let pivot = rows[col][col];
        det = k.mul(det, pivot);
        let inv = k.inv(pivot).expect("nonzero pivot");
        for i in col + 1..n {
            if rows[i][col].is_zero() {
                continue;
            }
            let factor = k.mul(rows[i][col], inv);
            for j in col..n {
                let t = k.mul(factor, rows[col][j]);
                rows[i][j] = k.sub(rows[i][j], t);
            }
        }
    }
    det
}
