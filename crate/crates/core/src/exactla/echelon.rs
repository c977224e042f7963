use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{Matrix, Rational};
use crate::{Error, Result};

/// Gauss-Jordan elimination in place, looking for pivots only in the first
/// `pivot_cols` columns. Returns the pivot column of each nonzero row.
pub(crate) fn rref_in_place(m: &mut Matrix, pivot_cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == m.rows() {
            break;
        }
        let Some(p) = (r..m.rows()).find(|&i| !m[(i, c)].is_zero()) else {
            continue;
        };
        m.swap_rows(r, p);
        let inv = m[(r, c)].recip();
        m.scale_row(r, &inv);
        for i in 0..m.rows() {
            if i != r && !m[(i, c)].is_zero() {
                let f = m[(i, c)].clone();
                m.sub_row_multiple(i, r, &f);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

impl Matrix {
    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = rref_in_place(&mut m, self.cols());
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Reduced column echelon form: returns `(R, T)` with `R = self * T`,
    /// `T` invertible, the nonzero columns of `R` in reduced column echelon
    /// form and all zero columns last.
    pub fn rce(&self) -> (Matrix, Matrix) {
        let n = self.cols();
        let t = self.transpose();
        let mut aug = Matrix::hcat(n, &[&t, &Matrix::identity(n)]);
        rref_in_place(&mut aug, self.rows());
        let r = aug.column_range(0, self.rows()).transpose();
        let s = aug.column_range(self.rows(), self.rows() + n).transpose();
        (r, s)
    }

    /// Basis of `{x : self * x = 0}` read off the reduced row echelon form
    /// (one vector per free column). Not canonicalized.
    pub fn null_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols()).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(self.cols(), free.len());
        for (k, &f) in free.iter().enumerate() {
            out[(f, k)] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                out[(p, k)] = -r[(i, f)].clone();
            }
        }
        out
    }

    /// A particular solution `X` of `self * X = rhs` (free variables set to
    /// zero), or `None` when some column of `rhs` is outside the image.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows(), rhs.rows(), "solve: row mismatch");
        let n = self.cols();
        let mut aug = Matrix::hcat(self.rows(), &[self, rhs]);
        let pivots = rref_in_place(&mut aug, n);
        for i in pivots.len()..aug.rows() {
            if (n..aug.cols()).any(|j| !aug[(i, j)].is_zero()) {
                return None;
            }
        }
        let mut x = Matrix::zeros(n, rhs.cols());
        for (i, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols() {
                x[(p, j)] = aug[(i, n + j)].clone();
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows(),
                cols: self.cols(),
            });
        }
        let n = self.rows();
        let mut aug = Matrix::hcat(n, &[self, &Matrix::identity(n)]);
        let pivots = rref_in_place(&mut aug, n);
        if pivots.len() < n {
            return Err(Error::Singular);
        }
        Ok(aug.column_range(n, 2 * n))
    }

    /// Determinant by Gaussian elimination. Panics on non-square input.
    pub fn det(&self) -> Rational {
        assert!(self.is_square(), "det of a non-square matrix");
        let n = self.rows();
        let mut m = self.clone();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Rational::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m[(c, c)].clone();
            det *= &piv;
            let inv = piv.recip();
            for i in c + 1..n {
                if !m[(i, c)].is_zero() {
                    let f = &m[(i, c)] * &inv;
                    m.sub_row_multiple(i, c, &f);
                }
            }
        }
        det
    }
}
