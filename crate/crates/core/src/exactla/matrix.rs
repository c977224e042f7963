use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Rational;
use crate::{Error, Result};

/// Dense rational matrix stored row-major.
///
/// Shapes with zero rows or zero columns are legal everywhere; a `3 x 0`
/// matrix is the basis of the zero subspace of a 3-dimensional space.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

pub(crate) fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from a row-major buffer.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Ragged);
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Builds a matrix from explicit rows; every row must have `cols` entries.
    pub fn from_rows(rows: usize, cols: usize, entries: Vec<Vec<Rational>>) -> Result<Self> {
        if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
            return Err(Error::Ragged);
        }
        Ok(Matrix {
            rows,
            cols,
            data: entries.into_iter().flatten().collect(),
        })
    }

    /// Integer-valued matrix from a row-major slice. Panics if the length is wrong.
    pub fn from_i64(rows: usize, cols: usize, data: &[i64]) -> Self {
        assert_eq!(data.len(), rows * cols, "from_i64: buffer length");
        Matrix {
            rows,
            cols,
            data: data.iter().map(|&v| int(v)).collect(),
        }
    }

    /// `n x 1` matrix holding `v`.
    pub fn column_vector(v: Vec<Rational>) -> Self {
        Matrix {
            rows: v.len(),
            cols: 1,
            data: v,
        }
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = &self[(i, j)];
                    if i == j {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn column_is_zero(&self, j: usize) -> bool {
        (0..self.rows).all(|i| self[(i, j)].is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * c).collect(),
        }
    }

    /// Matrix-vector product.
    pub fn apply(&self, x: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.cols, "apply: dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.rows, idx.len(), |i, j| self[(i, idx[j])].clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(idx.len(), self.cols, |i, j| self[(idx[i], j)].clone())
    }

    /// Columns `start..end`.
    pub fn column_range(&self, start: usize, end: usize) -> Matrix {
        Matrix::from_fn(self.rows, end - start, |i, j| self[(i, start + j)].clone())
    }

    /// Rows `start..end`.
    pub fn row_range(&self, start: usize, end: usize) -> Matrix {
        Matrix::from_fn(end - start, self.cols, |i, j| self[(start + i, j)].clone())
    }

    /// Horizontal concatenation. `rows` fixes the height when `parts` is empty.
    pub fn hcat(rows: usize, parts: &[&Matrix]) -> Matrix {
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let mut off = 0;
        for p in parts {
            assert_eq!(p.rows, rows, "hcat: row count mismatch");
            for i in 0..rows {
                for j in 0..p.cols {
                    out[(i, off + j)] = p[(i, j)].clone();
                }
            }
            off += p.cols;
        }
        out
    }

    /// Vertical concatenation. `cols` fixes the width when `parts` is empty.
    pub fn vcat(cols: usize, parts: &[&Matrix]) -> Matrix {
        let mut data = Vec::new();
        let mut rows = 0;
        for p in parts {
            assert_eq!(p.cols, cols, "vcat: column count mismatch");
            data.extend_from_slice(&p.data);
            rows += p.rows;
        }
        Matrix { rows, cols, data }
    }

    pub fn block_diag(parts: &[&Matrix]) -> Matrix {
        let rows = parts.iter().map(|p| p.rows).sum();
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for p in parts {
            for i in 0..p.rows {
                for j in 0..p.cols {
                    out[(r0 + i, c0 + j)] = p[(i, j)].clone();
                }
            }
            r0 += p.rows;
            c0 += p.cols;
        }
        out
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// `row[target] -= factor * row[src]`.
    pub(crate) fn sub_row_multiple(&mut self, target: usize, src: usize, factor: &Rational) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let s = &self.data[src * self.cols + j];
            if s.is_zero() {
                continue;
            }
            let delta = s * factor;
            self.data[target * self.cols + j] -= delta;
        }
    }

    pub(crate) fn scale_row(&mut self, i: usize, factor: &Rational) {
        for j in 0..self.cols {
            let v = &mut self.data[i * self.cols + j];
            if !v.is_zero() {
                *v *= factor;
            }
        }
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, rhs.rows,
            "matrix product {}x{} * {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix sum shape");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix difference shape");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;

    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix<{}x{}>{}", self.rows, self.cols, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_sized_products() {
        let a = Matrix::zeros(3, 0);
        let b = Matrix::zeros(0, 2);
        let c = &a * &b;
        assert_eq!(c.shape(), (3, 2));
        assert!(c.is_zero());
        let d = &b * &Matrix::zeros(2, 0);
        assert_eq!(d.shape(), (0, 0));
        assert!(d.is_identity());
    }

    #[test]
    fn concat_and_blocks() {
        let a = Matrix::from_i64(1, 2, &[1, 2]);
        let b = Matrix::from_i64(1, 1, &[3]);
        assert_eq!(Matrix::hcat(1, &[&a, &b]), Matrix::from_i64(1, 3, &[1, 2, 3]));
        assert_eq!(Matrix::hcat(4, &[]).shape(), (4, 0));
        assert_eq!(Matrix::vcat(2, &[&a, &a]), Matrix::from_i64(2, 2, &[1, 2, 1, 2]));
        let d = Matrix::block_diag(&[&a, &b, &Matrix::zeros(0, 1)]);
        assert_eq!(d, Matrix::from_i64(2, 4, &[1, 2, 0, 0, 0, 0, 3, 0]));
    }

    #[test]
    fn ragged_rows_rejected() {
        let rows = vec![vec![int(1), int(2)], vec![int(3)]];
        assert_eq!(Matrix::from_rows(2, 2, rows), Err(Error::Ragged));
        assert!(Matrix::from_rows(0, 5, vec![]).is_ok());
    }
}
